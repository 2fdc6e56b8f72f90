#include "integra/lombardi.hpp"

#include <algorithm>

namespace integra {

namespace {

using Key = std::pair<std::size_t, std::size_t>;

std::map<Key, Element> collect(const std::vector<WitnessTerm>& terms) {
  std::map<Key, Element> out;
  for (const auto& t : terms) {
    auto [it, fresh] = out.try_emplace({t.i, t.j}, t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Element realize(const std::vector<WitnessTerm>& terms, const WitnessContext& ctx) {
  Element acc = Element::zero(ctx.algebra);
  for (const auto& t : terms) acc += embed(t.coeff, ctx.algebra, ctx.bindings) * ctx.u.pow(t.i) * ctx.x.pow(t.j);
  return acc;
}

bool in_basis(const MembershipWitness& w, std::size_t i, std::size_t j) {
  return (i < w.n && j < w.mu) || (i < w.m && j >= w.mu && j < w.mu + w.nu);
}

void paranoid_check(const RingCertificate& c, const Options& opts, const char* op) {
  if (opts.paranoid && !verify_ring(c).verified())
    throw Error(ErrorCode::paranoid_check_failed, std::string(op) + " produced a certificate that does not verify");
}

Bindings without(const Bindings& bs, const std::string& var) {
  Bindings out;
  for (const auto& b : bs)
    if (b.var != var) out.push_back(b);
  return out;
}

// Same univariate layer, now over new_base.
Ring relayer(const Ring& layer, const Ring& new_base) {
  if (layer.is_polynomial()) return Ring::polynomial(new_base, layer.var());
  std::vector<Element> f;
  for (const auto& c : layer.quotient_modulus()) f.push_back(embed(c, new_base));
  return Ring::monic_quotient(new_base, std::move(f), layer.var());
}

}  // namespace

void check_witness(const MembershipWitness& w) {
  if (w.mu + w.nu < 1) throw Error(ErrorCode::invalid_argument, "mu + nu must be positive");
  for (const auto& t : w.rel1) {
    if (!(t.coeff.ring() == w.base))
      throw Error(ErrorCode::ring_mismatch, "rel1 coefficient " + t.coeff.str() + " is not in " + w.base.str());
    if (t.i >= w.n || t.j > w.nu)
      throw Error(ErrorCode::index_out_of_range,
                  "rel1 term (" + std::to_string(t.i) + ", " + std::to_string(t.j) + ") outside i < n, j <= nu");
  }
  for (const auto& t : w.rel2) {
    if (!(t.coeff.ring() == w.base))
      throw Error(ErrorCode::ring_mismatch, "rel2 coefficient " + t.coeff.str() + " is not in " + w.base.str());
    const bool ok = (t.i < w.m && t.j <= w.mu) || (t.i <= w.m && t.j < w.mu);
    if (!ok)
      throw Error(ErrorCode::index_out_of_range, "rel2 term (" + std::to_string(t.i) + ", " + std::to_string(t.j) +
                                                     ") outside the admissible index set");
  }
}

std::vector<std::pair<std::size_t, std::size_t>> basis_index_set(const MembershipWitness& w) {
  std::vector<Key> s;
  const std::size_t rows = std::max(w.n, w.m);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < w.mu + w.nu; ++j)
      if (in_basis(w, i, j)) s.emplace_back(i, j);
  return s;
}

NormalForm normal_form(const MembershipWitness& w, std::size_t i0, std::size_t j0) {
  check_witness(w);
  if (j0 >= w.mu + w.nu)
    throw Error(ErrorCode::index_out_of_range,
                "J = " + std::to_string(j0) + " must be below mu + nu = " + std::to_string(w.mu + w.nu));
  const auto rel1 = collect(w.rel1);
  const auto rel2 = collect(w.rel2);
  NormalForm out;
  std::map<Key, Element> work;
  work.emplace(Key{i0, j0}, Element::one(w.base));
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const auto [i, j] = top->first;
    const Element a = top->second;
    work.erase(top);
    if (a.is_zero()) continue;
    if (in_basis(w, i, j)) {
      auto [it, fresh] = out.terms.try_emplace({i, j}, a);
      if (!fresh) it->second += a;
      continue;
    }
    ++out.steps;
    // u^i x^j = u^{i-m} x^{j-mu} (u^m x^mu)  or  u^{i-n} x^j (u^n).
    const bool case1 = i >= w.m && j >= w.mu;
    if (!case1 && !(i >= w.n && j < w.mu))
      throw Error(ErrorCode::index_out_of_range, "no rewriting rule applies to (" + std::to_string(i) + ", " +
                                                     std::to_string(j) + ")");
    const auto& rel = case1 ? rel2 : rel1;
    const std::size_t di = case1 ? i - w.m : i - w.n;
    const std::size_t dj = case1 ? j - w.mu : j;
    for (const auto& [key, c] : rel) {
      const Key next{key.first + di, key.second + dj};
      if (!(next < Key{i, j})) throw Error(ErrorCode::invalid_argument, "rewriting failed to decrease");
      auto [it, fresh] = work.try_emplace(next, a * c);
      if (!fresh) it->second += a * c;
    }
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

RingCertificate lombardi_cert(const MembershipWitness& w, const WitnessContext& ctx, const Options& opts) {
  check_witness(w);
  if (!(ctx.u.ring() == ctx.algebra) || !(ctx.x.ring() == ctx.algebra))
    throw Error(ErrorCode::ring_mismatch, "u and x must lie in " + ctx.algebra.str());
  if (!(ctx.u.pow(w.n) == realize(w.rel1, ctx)))
    throw Error(ErrorCode::relation_failed, "first relation u^n = sum c_ij u^i x^j does not hold");
  if (!(ctx.u.pow(w.m) * ctx.x.pow(w.mu) == realize(w.rel2, ctx)))
    throw Error(ErrorCode::relation_failed, "second relation u^m x^mu = sum d_ij u^i x^j does not hold");

  const auto basis = basis_index_set(w);
  const std::size_t d = basis.size();
  Matrix s(w.base, d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto nf = normal_form(w, basis[k].first + 1, basis[k].second);
    for (const auto& [key, c] : nf.terms) {
      const auto pos = std::lower_bound(basis.begin(), basis.end(), key) - basis.begin();
      s(k, static_cast<std::size_t>(pos)) = c;
    }
  }
  RingCertificate out{w.base, ctx.algebra, ctx.u, charpoly(s), ctx.bindings};
  paranoid_check(out, opts, "lombardi");
  return out;
}

std::vector<WitnessTerm> adapt_y_to_x(const std::vector<WitnessTerm>& y_terms, const Element& c, std::size_t mu) {
  std::vector<WitnessTerm> out;
  out.reserve(y_terms.size());
  for (const auto& t : y_terms) {
    if (t.j > mu)
      throw Error(ErrorCode::index_out_of_range, "y-exponent " + std::to_string(t.j) + " exceeds mu = " +
                                                     std::to_string(mu));
    out.push_back({t.i, mu - t.j, t.coeff * c.pow(t.j)});
  }
  return out;
}

const Element& bound_generator(const RingCertificate& c) {
  if (!c.base.is_univariate())
    throw Error(ErrorCode::invalid_argument, "certificate base " + c.base.str() + " has no adjoined generator");
  const Binding* b = find_binding(c.bindings, c.base.var());
  if (!b) throw Error(ErrorCode::invalid_argument, "variable '" + c.base.var() + "' of the base is not bound");
  return b->value;
}

NuExtraction extract_nu(const RingCertificate& c) {
  require_verified(c, "certificate");
  bound_generator(c);
  NuExtraction out;
  const std::size_t n = c.degree();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& alpha = c.coeffs[i].coeffs();
    if (!alpha.empty()) out.nu = std::max(out.nu, alpha.size() - 1);
    for (std::size_t j = 0; j < alpha.size(); ++j)
      if (!alpha[j].is_zero()) out.rel1.push_back({i, j, -alpha[j]});
  }
  return out;
}

RingCertificate joint_cert(const RingCertificate& cx, const RingCertificate& cy, const Element& c,
                           const Options& opts) {
  if (!cx.base.is_univariate() || !cy.base.is_univariate() || !(cx.base.base() == cy.base.base()))
    throw Error(ErrorCode::ring_mismatch, "certificates must live over simple extensions of one ring");
  if (!(cx.algebra == cy.algebra)) throw Error(ErrorCode::ring_mismatch, "certificates in different algebras");
  if (!(cx.element == cy.element)) throw Error(ErrorCode::hypothesis_failed, "certificates are for different elements");
  const Ring& a = cx.base.base();
  if (!(c.ring() == a)) throw Error(ErrorCode::ring_mismatch, "xy value " + c.str() + " is not in " + a.str());
  const Element& x = bound_generator(cx);
  const Element& y = bound_generator(cy);
  const Bindings bindings =
      merge_bindings(without(cx.bindings, cx.base.var()), without(cy.bindings, cy.base.var()));
  if (!(x * y == embed(c, cx.algebra, bindings)))
    throw Error(ErrorCode::hypothesis_failed, "x y != " + c.str());

  const NuExtraction ex = extract_nu(cx);
  const NuExtraction ey = extract_nu(cy);
  const MembershipWitness w{a, cx.degree(), cy.degree(), ey.nu, ex.nu, ex.rel1, adapt_y_to_x(ey.rel1, c, ey.nu)};
  return lombardi_cert(w, {cx.algebra, cx.element, embed(x, cx.algebra), bindings}, opts);
}

RingCertificate product_base_cert(const RingCertificate& cx, const RingCertificate& cy, const Options& opts) {
  if (!cx.base.is_univariate() || !cy.base.is_univariate() || !(cx.base.base() == cy.base.base()))
    throw Error(ErrorCode::ring_mismatch, "certificates must live over simple extensions of one ring");
  const Ring& a = cx.base.base();
  const Ring& b = cx.algebra;
  const Element xy = embed(bound_generator(cx), b) * embed(bound_generator(cy), b);
  const Ring c = Ring::polynomial(a, fresh_var("t", {&cx.base, &cy.base, &b}));
  const Binding t_binding{c.var(), xy};

  auto rebase = [&](const RingCertificate& cert) {
    const Ring layer = relayer(cert.base, c);
    RingCertificate out{layer, cert.algebra, cert.element, {}, cert.bindings};
    out.bindings.push_back(t_binding);
    for (const auto& k : cert.coeffs) out.coeffs.push_back(embed(k, layer));
    return out;
  };
  RingCertificate out = joint_cert(rebase(cx), rebase(cy), Element::generator(c), opts);
  return out;
}

SemifilCertificate relative_joint_cert(const SemifilCertificate& cx, const SemifilCertificate& cy,
                                       const Options& opts) {
  using Rule = Semifiltration::Rule;
  if (cx.semifiltration.rule() != Rule::extended || cy.semifiltration.rule() != Rule::extended ||
      !(cx.semifiltration.inner() == cy.semifiltration.inner()))
    throw Error(ErrorCode::invalid_argument, "both certificates need the same semifiltration extended from the base");
  const Semifiltration& base_sf = cx.semifiltration.inner();
  const Ring& a = base_sf.ring();
  const Ring& b = cx.cert.algebra;
  for (const auto* c : {&cx, &cy}) {
    if (!c->cert.base.is_univariate() || !(c->cert.base.base() == a))
      throw Error(ErrorCode::ring_mismatch, "certificate must live over a simple extension of " + a.str());
    if (verify_semifil(*c).refuted()) throw Error(ErrorCode::unverified_input, "input certificate is refuted");
  }

  const std::string y = fresh_var("Y", {&a, &b, &cx.cert.base, &cy.cert.base});
  const Ring ay = Ring::polynomial(a, y);
  const Ring by = Ring::polynomial(b, y);
  auto lift_n = [&](const SemifilCertificate& c) {
    const Ring layer = relayer(c.cert.base, ay);
    const std::size_t n = c.cert.degree();
    RingCertificate out{layer, by, Element::monomial(by, c.cert.element, 1), {}, {}};
    for (const auto& bnd : c.cert.bindings)
      out.bindings.push_back(bnd.var == layer.var() ? Binding{bnd.var, embed(bnd.value, by)} : bnd);
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<Element> q;
      for (const auto& beta : c.cert.coeffs[k].coeffs()) q.push_back(Element::monomial(ay, beta, n - k));
      out.coeffs.push_back(Element::from_coeffs(layer, std::move(q)));
    }
    return out;
  };
  const RingCertificate pb = product_base_cert(lift_n(cx), lift_n(cy), opts);

  const std::size_t lambda = pb.degree();
  const Ring at = Ring::polynomial(a, pb.base.var());
  const Element xy = embed(bound_generator(cx.cert), b) * embed(bound_generator(cy.cert), b);
  RingCertificate cert{at, b, cx.cert.element, {}, {}};
  for (const auto& bnd : pb.bindings) {
    if (bnd.var == at.var()) cert.bindings.push_back({bnd.var, xy});
    else cert.bindings.push_back(bnd);
  }
  for (std::size_t k = 0; k <= lambda; ++k) {
    std::vector<Element> q;
    for (const auto& qkj : pb.coeffs[k].coeffs()) q.push_back(qkj.coeff(lambda - k));
    cert.coeffs.push_back(Element::from_coeffs(at, std::move(q)));
  }
  if (!cert.coeffs.back().is_one())
    throw Error(ErrorCode::not_monic_after_extraction, "extracted leading coefficient is not 1");
  SemifilCertificate out{std::move(cert), Semifiltration::extended(base_sf, at)};
  if (opts.paranoid && verify_semifil(out).refuted())
    throw Error(ErrorCode::paranoid_check_failed, "relative joint certificate is refuted");
  return out;
}

}  // namespace integra
