#include "integra/constructive.hpp"

#include <algorithm>

namespace integra {

std::size_t frame_rank(const Ring& tower, const Ring& base) {
  if (tower == base) return 1;
  if (!tower.is_monic_quotient())
    throw Error(ErrorCode::invalid_argument, tower.str() + " is not a monic-quotient tower over " + base.str());
  return tower.quotient_degree() * frame_rank(tower.base(), base);
}

std::vector<Element> flatten(const Element& e, const Ring& base) {
  const Ring& r = e.ring();
  if (r == base) return {e};
  const std::size_t inner = frame_rank(r.base(), base);
  std::vector<Element> out;
  out.reserve(inner * r.quotient_degree());
  for (std::size_t j = 0; j < r.quotient_degree(); ++j) {
    if (j < e.coeffs().size()) {
      auto part = flatten(e.coeffs()[j], base);
      out.insert(out.end(), part.begin(), part.end());
    } else {
      out.insert(out.end(), inner, Element::zero(base));
    }
  }
  return out;
}

namespace {

Element basis_element(const Ring& r, const Ring& base, std::size_t k) {
  if (r == base) return Element::one(base);
  const std::size_t inner = frame_rank(r.base(), base);
  return Element::monomial(r, basis_element(r.base(), base, k % inner), k / inner);
}

void paranoid_check(const RingCertificate& c, const Options& opts, const char* op) {
  if (!opts.paranoid) return;
  if (!verify_ring(c).verified())
    throw Error(ErrorCode::paranoid_check_failed, std::string(op) + " produced a certificate that does not verify");
}

void require_same_context(const RingCertificate& a, const RingCertificate& b) {
  if (!(a.base == b.base))
    throw Error(ErrorCode::ring_mismatch, "certificates over " + a.base.str() + " and " + b.base.str());
  if (!(a.algebra == b.algebra))
    throw Error(ErrorCode::ring_mismatch, "certificates in " + a.algebra.str() + " and " + b.algebra.str());
}

std::vector<Element> embed_all(std::span<const Element> xs, const Ring& target) {
  std::vector<Element> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(embed(x, target));
  return out;
}

enum class Combine { sum, product };

RingCertificate combine(const RingCertificate& cx, const RingCertificate& cy, Combine how, const Options& opts) {
  require_same_context(cx, cy);
  require_verified(cx, "first certificate");
  require_verified(cy, "second certificate");
  const Ring& a = cx.base;
  Bindings bindings = merge_bindings(cx.bindings, cy.bindings);
  const Element z = how == Combine::sum ? cx.element + cy.element : cx.element * cy.element;
  RingCertificate out{a, cx.algebra, z, {}, std::move(bindings)};
  if (cx.degree() == 0 || cy.degree() == 0) {
    out.coeffs = {Element::one(a)};
  } else {
    const Ring rx = Ring::monic_quotient(a, cx.coeffs, fresh_var("X", {&a}));
    const Ring ry = Ring::monic_quotient(rx, embed_all(cy.coeffs, rx), fresh_var("Y", {&rx}));
    const Element gx = embed(Element::generator(rx), ry);
    const Element gy = Element::generator(ry);
    out.coeffs = frame_charpoly(how == Combine::sum ? gx + gy : gx * gy, a);
  }
  paranoid_check(out, opts, how == Combine::sum ? "sum" : "product");
  return out;
}

}  // namespace

std::vector<Element> frame_charpoly(const Element& z, const Ring& base) {
  const Ring& r = z.ring();
  const std::size_t n = frame_rank(r, base);
  Matrix s(base, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto row = flatten(z * basis_element(r, base, k), base);
    for (std::size_t i = 0; i < n; ++i) s(k, i) = row[i];
  }
  return charpoly(s);
}

Bindings merge_bindings(const Bindings& a, const Bindings& b) {
  Bindings out = a;
  for (const auto& x : b) {
    if (const Binding* y = find_binding(out, x.var)) {
      if (!(y->value == x.value))
        throw Error(ErrorCode::ring_mismatch, "variable '" + x.var + "' is bound to two different values");
      continue;
    }
    out.push_back(x);
  }
  return out;
}

void require_verified(const RingCertificate& c, const char* what) {
  const Verdict v = verify_ring(c);
  if (!v.verified()) throw Error(ErrorCode::unverified_input, std::string(what) + " does not verify: " + v.line());
}

RingCertificate scalar_cert(const Ring& base, const Ring& algebra, const Element& a, const Bindings& bindings) {
  if (!(a.ring() == base)) throw Error(ErrorCode::ring_mismatch, "scalar " + a.str() + " is not in " + base.str());
  return {base, algebra, embed(a, algebra, bindings), {-a, Element::one(base)}, bindings};
}

std::vector<Element> shift_monic(std::span<const Element> p, const Element& x, std::span<const Binding> bindings) {
  const Ring& c = x.ring();
  const Ring cx = Ring::polynomial(c, fresh_var("X", {&c}));
  const Element shift = Element::generator(cx) - Element::constant(cx, x);
  Element acc = Element::zero(cx);
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * shift + Element::constant(cx, embed(p[k], c, bindings));
  std::vector<Element> out = acc.coeffs();
  out.resize(p.size(), Element::zero(c));
  return out;
}

RingCertificate sum_cert(const RingCertificate& cx, const RingCertificate& cy, const Options& opts) {
  return combine(cx, cy, Combine::sum, opts);
}

RingCertificate product_cert(const RingCertificate& cx, const RingCertificate& cy, const Options& opts) {
  return combine(cx, cy, Combine::product, opts);
}

RingCertificate negate_cert(const RingCertificate& c, const Options& opts) {
  require_verified(c, "certificate");
  RingCertificate out = c;
  out.element = -c.element;
  const std::size_t n = c.degree();
  for (std::size_t i = 0; i <= n; ++i)
    if ((n - i) % 2 == 1) out.coeffs[i] = -out.coeffs[i];
  paranoid_check(out, opts, "negation");
  return out;
}

RingCertificate diff_cert(const RingCertificate& cx, const RingCertificate& cy, const Options& opts) {
  return sum_cert(cx, negate_cert(cy, opts), opts);
}

RingCertificate transitivity_cert(const RingCertificate& cv, const RingCertificate& cu, const Options& opts) {
  if (!(cv.algebra == cu.algebra))
    throw Error(ErrorCode::ring_mismatch, "certificates in " + cv.algebra.str() + " and " + cu.algebra.str());
  require_verified(cv, "certificate of v");
  require_verified(cu, "certificate of u");
  const Ring& a = cv.base;
  const std::size_t m = cv.degree();
  const std::size_t n = cu.degree();

  // Coefficients of cu as polynomials of v over A.
  std::vector<std::vector<Element>> poly_coeffs;
  Bindings bindings = cv.bindings;
  if (cu.base == a) {
    for (const auto& c : cu.coeffs) poly_coeffs.push_back({c});
    bindings = merge_bindings(bindings, cu.bindings);
  } else {
    const Ring& av = cu.base;
    if (!av.is_univariate() || !(av.base() == a))
      throw Error(ErrorCode::ring_mismatch,
                  "certificate of u must live over " + a.str() + " or a simple extension of it, not " + av.str());
    const Binding* b = find_binding(cu.bindings, av.var());
    if (!b || !(b->value == cv.element))
      throw Error(ErrorCode::ring_mismatch, "variable '" + av.var() + "' of " + av.str() + " is not bound to v");
    if (av.is_monic_quotient() && av.quotient_modulus() != cv.coeffs)
      throw Error(ErrorCode::ring_mismatch, av.str() + " is not the quotient by the polynomial of v");
    for (std::size_t k = 0; k < cu.coeffs.size(); ++k) {
      const auto& c = cu.coeffs[k].coeffs();
      if (m > 0 && c.size() > m)
        throw Error(ErrorCode::coefficient_degree_too_high,
                    "coefficient " + std::to_string(k) + " has " + av.var() + "-degree " +
                        std::to_string(c.size() - 1) + ", expected below " + std::to_string(m));
      poly_coeffs.push_back(c);
    }
    Bindings rest;
    for (const auto& x : cu.bindings)
      if (x.var != av.var()) rest.push_back(x);
    bindings = merge_bindings(bindings, rest);
  }

  RingCertificate out{a, cv.algebra, cu.element, {}, std::move(bindings)};
  if (m == 0 || n == 0) {
    out.coeffs = {Element::one(a)};
  } else {
    const Ring rv = Ring::monic_quotient(a, cv.coeffs, fresh_var("V", {&a}));
    std::vector<Element> q;
    for (const auto& c : poly_coeffs) q.push_back(Element::from_coeffs(rv, c));
    const Ring ru = Ring::monic_quotient(rv, std::move(q), fresh_var("U", {&rv}));
    out.coeffs = frame_charpoly(Element::generator(ru), a);
  }
  paranoid_check(out, opts, "transitivity");
  return out;
}

RingCertificate truncation_cert(const Relation& rel, std::size_t k, const Options& opts) {
  const std::size_t n = rel.coeffs.empty() ? 0 : rel.coeffs.size() - 1;
  if (n < 1) throw Error(ErrorCode::bad_index, "truncation needs a relation of degree at least 1");
  if (k > n) throw Error(ErrorCode::bad_index, "k = " + std::to_string(k) + " outside 0.." + std::to_string(n));
  for (const auto& c : rel.coeffs)
    if (!(c.ring() == rel.base))
      throw Error(ErrorCode::ring_mismatch, "relation coefficient " + c.str() + " is not in " + rel.base.str());
  if (!(rel.v.ring() == rel.algebra))
    throw Error(ErrorCode::ring_mismatch, "v lies outside " + rel.algebra.str());
  const Element value = evaluate(rel.coeffs, rel.v, rel.bindings);
  if (!value.is_zero()) throw Error(ErrorCode::relation_failed, "sum a_i v^i = " + value.str() + ", not 0");

  const auto& a = rel.coeffs;
  Matrix s(rel.base, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r < k) {
      for (std::size_t i = 0; i + k <= n; ++i) s(r, i + r) += a[i + k];
    } else {
      for (std::size_t i = 0; i < k; ++i) s(r, i + r - k) -= a[i];
    }
  }
  std::vector<Element> tail(a.begin() + static_cast<std::ptrdiff_t>(k), a.end());
  const Element u = evaluate(tail, rel.v, rel.bindings);
  RingCertificate out{rel.base, rel.algebra, u, charpoly(s), rel.bindings};
  paranoid_check(out, opts, "truncation");
  return out;
}

RingCertificate two_sided_cert(const TwoSidedData& d, const Options& opts) {
  if (d.s.empty() || d.t.empty()) throw Error(ErrorCode::invalid_argument, "s and t must be nonempty");
  const std::size_t alpha = d.s.size() - 1;
  const std::size_t beta = d.t.size() - 1;
  if (alpha + beta < 1) throw Error(ErrorCode::invalid_argument, "alpha + beta must be positive");
  if (!(evaluate(d.s, d.v, d.bindings) == d.u))
    throw Error(ErrorCode::hypothesis_failed, "sum s_i v^i != u");
  std::vector<Element> t_rev(d.t.rbegin(), d.t.rend());
  if (!(evaluate(t_rev, d.v, d.bindings) == d.u * d.v.pow(beta)))
    throw Error(ErrorCode::hypothesis_failed, "sum t_i v^(beta-i) != u v^beta");

  const std::size_t n = alpha + beta;
  std::vector<Element> a;
  a.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (i < beta) a.push_back(d.t[beta - i]);
    else if (i == beta) a.push_back(d.t[0] - d.s[0]);
    else a.push_back(-d.s[i - beta]);
  }
  const RingCertificate rest = truncation_cert({d.base, d.algebra, d.v, std::move(a), d.bindings}, beta, opts);
  const RingCertificate shift = scalar_cert(d.base, d.algebra, d.t[0], d.bindings);
  return sum_cert(shift, negate_cert(rest, opts), opts);
}

RingCertificate inverse_like_cert(const InverseLikeData& d, const RingCertificate& cvu, const Options& opts) {
  const std::size_t n = d.b.size();
  if (n < 1) throw Error(ErrorCode::invalid_argument, "need at least one coefficient b_0");
  if (!(cvu.base == d.base) || !(cvu.algebra == d.algebra))
    throw Error(ErrorCode::ring_mismatch, "certificate of vu lives over a different base or algebra");
  const Element u = evaluate(d.b, d.v, d.bindings);
  if (!(cvu.element == d.v * u))
    throw Error(ErrorCode::hypothesis_failed, "certificate is for " + cvu.element.str() + ", not vu");
  require_verified(cvu, "certificate of vu");

  const Ring& a = d.base;
  const std::string w = fresh_var("w", {&a, &d.algebra});
  const Ring aw = Ring::polynomial(a, w);
  Bindings bindings = merge_bindings(d.bindings, cvu.bindings);
  Bindings with_w = bindings;
  with_w.push_back({w, cvu.element});

  std::vector<Element> rel{-Element::generator(aw)};
  for (const auto& b : d.b) rel.push_back(Element::constant(aw, b));
  RingCertificate over_aw = truncation_cert({aw, d.algebra, d.v, std::move(rel), with_w}, 1, opts);
  // Reduce the w-polynomials modulo the relation of vu.
  for (auto& c : over_aw.coeffs)
    if (cvu.degree() > 0) c = Element::from_coeffs(aw, reduce_monic(c.coeffs(), cvu.coeffs));
  return transitivity_cert(cvu, over_aw, opts);
}

RingCertificate change_base(const RingCertificate& c, const Ring& new_base, const Ring& new_algebra) {
  RingCertificate out{new_base, new_algebra, embed(c.element, new_algebra), {}, c.bindings};
  out.coeffs.reserve(c.coeffs.size());
  for (const auto& x : c.coeffs) out.coeffs.push_back(embed(x, new_base));
  return out;
}

}  // namespace integra
