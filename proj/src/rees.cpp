#include "integra/rees.hpp"

namespace integra {

namespace {

void require_not_refuted(const SemifilCertificate& c, const char* what) {
  const Verdict v = verify_semifil(c);
  if (v.refuted()) throw Error(ErrorCode::unverified_input, std::string(what) + " does not verify: " + v.line());
}

void paranoid_check(const SemifilCertificate& c, const Options& opts, const char* op) {
  if (!opts.paranoid) return;
  if (verify_semifil(c).refuted())
    throw Error(ErrorCode::paranoid_check_failed, std::string(op) + " produced a refuted certificate");
}

ReesCertificate lift_general(const SemifilCertificate& c, const Semifiltration& handle_sf,
                             const std::optional<Semifiltration>& inner, std::size_t lambda, const Options& opts) {
  require_not_refuted(c, "certificate");
  const Ring& a = c.cert.base;
  const Ring& b = c.cert.algebra;
  const std::string y = fresh_var("Y", {&a, &b});
  const Ring ay = Ring::polynomial(a, y);
  const Ring by = Ring::polynomial(b, y);
  const std::size_t n = c.cert.degree();
  RingCertificate cert{ay, by, Element::monomial(by, c.cert.element, lambda), {}, c.cert.bindings};
  for (std::size_t k = 0; k <= n; ++k) cert.coeffs.push_back(Element::monomial(ay, c.cert.coeffs[k], lambda * (n - k)));
  ReesCertificate rc{std::move(cert), ReesHandle{handle_sf, y}, inner, c.cert.element, lambda};
  if (opts.paranoid && verify_rees(rc).refuted())
    throw Error(ErrorCode::paranoid_check_failed, "lift produced a refuted Rees certificate");
  return rc;
}

Verdict refuted(std::string detail) { return {Verdict::Kind::refuted, std::move(detail), std::nullopt}; }

}  // namespace

Verdict verify_rees(const ReesCertificate& rc) {
  const Ring ambient = rc.handle.ambient();
  if (!(rc.cert.base == ambient))
    throw Error(ErrorCode::malformed_certificate,
                "Rees certificate over " + rc.cert.base.str() + ", expected " + ambient.str());
  const Ring& by = rc.cert.algebra;
  if (!by.is_polynomial() || by.var() != rc.handle.var || !(by.base() == rc.u.ring()))
    throw Error(ErrorCode::malformed_certificate,
                "Rees certificate algebra " + by.str() + " is not B[" + rc.handle.var + "]");
  if (!(rc.cert.element == Element::monomial(by, rc.u, rc.lambda)))
    throw Error(ErrorCode::malformed_certificate, "element is not u*" + rc.handle.var + "^" + std::to_string(rc.lambda));
  if (rc.inner && !(rc.inner->ring() == rc.handle.semifiltration.ring()))
    throw Error(ErrorCode::malformed_certificate, "inner semifiltration over a different ring");

  Verdict v = verify_ring(rc.cert);
  if (v.refuted()) return v;
  const std::size_t n = rc.cert.degree();
  bool unknown = false;
  for (std::size_t k = 0; k <= n; ++k) {
    const Element& p = rc.cert.coeffs[k];
    Membership m = Membership::member;
    if (rc.inner) {
      const Ideal j = rc.inner->ideal_at(n - k);
      for (std::size_t i = 0; i < p.coeffs().size() && m != Membership::not_member; ++i)
        if (!p.coeffs()[i].is_zero())
          m = conjoin(m, ideal_membership(p.coeffs()[i], ideal_product(j, rc.handle.semifiltration.ideal_at(i))));
    } else {
      m = rees_member(rc.handle, p);
    }
    if (m == Membership::not_member)
      return refuted("p_" + std::to_string(k) + " = " + p.str() + " outside the Rees algebra");
    if (m == Membership::unknown) unknown = true;
  }
  if (unknown) return {Verdict::Kind::verified_modulo_membership, {}, std::nullopt};
  return {};
}

ReesCertificate lift(const SemifilCertificate& c, const Options& opts) {
  return lift_general(c, c.semifiltration, std::nullopt, 1, opts);
}

ReesCertificate lift_two(const SemifilCertificate& c, const Options& opts) {
  if (c.semifiltration.rule() != Semifiltration::Rule::product)
    throw Error(ErrorCode::invalid_argument, "expected a product semifiltration, got " + c.semifiltration.str());
  return lift_general(c, c.semifiltration.left(), c.semifiltration.right(), 1, opts);
}

ReesCertificate lift_accel(const SemifilCertificate& c, std::size_t lambda, const Options& opts) {
  if (lambda == 1) return lift(c, opts);
  const Semifiltration& s = c.semifiltration;
  using Rule = Semifiltration::Rule;
  if (s.rule() == Rule::accelerated && s.lambda() == lambda) return lift_general(c, s.inner(), std::nullopt, lambda, opts);
  if (s.rule() == Rule::product && s.left().rule() == Rule::accelerated && s.left().lambda() == lambda)
    return lift_general(c, s.left().inner(), s.right(), lambda, opts);
  throw Error(ErrorCode::bad_lambda,
              s.str() + " is not accelerated by lambda = " + std::to_string(lambda));
}

SemifilCertificate drop(const ReesCertificate& rc, const std::optional<Semifiltration>& target, const Options& opts) {
  check_well_formed(rc.cert);
  const Ring ambient = rc.handle.ambient();
  if (!(rc.cert.base == ambient))
    throw Error(ErrorCode::malformed_certificate,
                "Rees certificate over " + rc.cert.base.str() + ", expected " + ambient.str());
  const Ring& a = ambient.base();
  const Ring& b = rc.cert.algebra.base();
  const std::size_t n = rc.cert.degree();
  RingCertificate cert{a, b, rc.u, {}, rc.cert.bindings};
  for (std::size_t k = 0; k <= n; ++k) cert.coeffs.push_back(rc.cert.coeffs[k].coeff(rc.lambda * (n - k)));
  if (!cert.coeffs.back().is_one())
    throw Error(ErrorCode::not_monic_after_extraction,
                "extracted leading coefficient is " + cert.coeffs.back().str() + ", not 1");
  Semifiltration s = rc.handle.semifiltration;
  if (target) {
    s = *target;
  } else {
    if (rc.lambda != 1) s = Semifiltration::accelerated(s, rc.lambda);
    if (rc.inner) s = Semifiltration::product(s, *rc.inner);
  }
  SemifilCertificate out{std::move(cert), s};
  paranoid_check(out, opts, "drop");
  return out;
}

SemifilCertificate semifil_sum(const SemifilCertificate& cx, const SemifilCertificate& cy, const Options& opts) {
  if (!(cx.semifiltration == cy.semifiltration))
    throw Error(ErrorCode::ring_mismatch, "certificates over different semifiltrations");
  const ReesCertificate lx = lift(cx, opts);
  const ReesCertificate ly = lift(cy, opts);
  RingCertificate s = sum_cert(lx.cert, ly.cert, opts);
  return drop({std::move(s), lx.handle, std::nullopt, cx.cert.element + cy.cert.element, 1}, cx.semifiltration, opts);
}

SemifilCertificate semifil_mixed_product(const SemifilCertificate& cx, const RingCertificate& cy,
                                         const Options& opts) {
  if (!(cx.cert.base == cy.base) || !(cx.cert.algebra == cy.algebra))
    throw Error(ErrorCode::ring_mismatch, "certificates over different base rings or algebras");
  require_verified(cy, "second certificate");
  const ReesCertificate lx = lift(cx, opts);
  const RingCertificate ly = change_base(cy, lx.cert.base, lx.cert.algebra);
  RingCertificate p = product_cert(lx.cert, ly, opts);
  return drop({std::move(p), lx.handle, std::nullopt, cx.cert.element * cy.element, 1}, cx.semifiltration, opts);
}

SemifilCertificate semifil_product(const SemifilCertificate& cx, const SemifilCertificate& cy, const Options& opts) {
  if (!(cx.cert.base == cy.cert.base) || !(cx.cert.algebra == cy.cert.algebra))
    throw Error(ErrorCode::ring_mismatch, "certificates over different base rings or algebras");
  const ReesCertificate lx = lift(cx, opts);
  require_not_refuted(cy, "second certificate");
  const Ring& ay = lx.cert.base;
  const SemifilCertificate cy_ext{change_base(cy.cert, ay, lx.cert.algebra),
                                  Semifiltration::extended(cy.semifiltration, ay)};
  const SemifilCertificate mixed = semifil_mixed_product(cy_ext, lx.cert, opts);
  ReesCertificate rc{mixed.cert, lx.handle, cy.semifiltration, cx.cert.element * cy.cert.element, 1};
  return drop(rc, Semifiltration::product(cx.semifiltration, cy.semifiltration), opts);
}

SemifilCertificate semifil_transitivity(const RingCertificate& cv, const SemifilCertificate& cu,
                                        const Options& opts) {
  const Ring& a = cv.base;
  const Ring& b = cv.algebra;
  const Ring& aw = cu.cert.base;
  if (!aw.is_univariate() || !(aw.base() == a))
    throw Error(ErrorCode::ring_mismatch, "certificate of u must live over a simple extension of " + a.str());
  const Semifiltration& sf = cu.semifiltration;
  if (sf.rule() != Semifiltration::Rule::extended || !(sf.inner().ring() == a))
    throw Error(ErrorCode::invalid_argument, "expected a semifiltration extended from " + a.str() + ", got " + sf.str());
  require_not_refuted(cu, "certificate of u");
  const Semifiltration& base_sf = sf.inner();

  const std::string y = fresh_var("Y", {&a, &b, &aw});
  const Ring ay = Ring::polynomial(a, y);
  const Ring by = Ring::polynomial(b, y);
  const RingCertificate cv_y = change_base(cv, ay, by);
  Ring ayw = aw.is_polynomial()
                 ? Ring::polynomial(ay, aw.var())
                 : Ring::monic_quotient(ay, [&] {
                     std::vector<Element> f;
                     for (const auto& c : aw.quotient_modulus()) f.push_back(embed(c, ay));
                     return f;
                   }(), aw.var());

  const std::size_t n = cu.cert.degree();
  RingCertificate cu_y{ayw, by, Element::monomial(by, cu.cert.element, 1), {}, {}};
  for (const auto& bnd : cu.cert.bindings)
    cu_y.bindings.push_back(bnd.var == aw.var() ? Binding{bnd.var, embed(bnd.value, by)} : bnd);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Element> c;
    for (const auto& beta : cu.cert.coeffs[k].coeffs()) c.push_back(Element::monomial(ay, beta, n - k));
    cu_y.coeffs.push_back(Element::from_coeffs(ayw, std::move(c)));
  }
  RingCertificate t = transitivity_cert(cv_y, cu_y, opts);
  return drop({std::move(t), ReesHandle{base_sf, y}, std::nullopt, cu.cert.element, 1}, base_sf, opts);
}

SemifilCertificate semifil_truncation(const Relation& rel, const Semifiltration& s, std::size_t k,
                                      const Options& opts) {
  if (!(s.ring() == rel.base))
    throw Error(ErrorCode::ring_mismatch, "semifiltration over " + s.ring().str() + ", relation over " + rel.base.str());
  const std::size_t n = rel.coeffs.empty() ? 0 : rel.coeffs.size() - 1;
  if (n < 1) throw Error(ErrorCode::bad_index, "truncation needs a relation of degree at least 1");
  if (k > n) throw Error(ErrorCode::bad_index, "k = " + std::to_string(k) + " outside 0.." + std::to_string(n));
  for (std::size_t i = 0; i <= n; ++i)
    if (ideal_membership(rel.coeffs[i], s.ideal_at(n - i)) == Membership::not_member)
      throw Error(ErrorCode::hypothesis_failed,
                  "a_" + std::to_string(i) + " = " + rel.coeffs[i].str() + " not in I_" + std::to_string(n - i));

  const std::string y = fresh_var("Y", {&rel.base, &rel.algebra});
  const Ring ay = Ring::polynomial(rel.base, y);
  const Ring by = Ring::polynomial(rel.algebra, y);
  Relation lifted{ay, by, Element::monomial(by, rel.v, 1), {}, rel.bindings};
  for (std::size_t i = 0; i <= n; ++i) lifted.coeffs.push_back(Element::monomial(ay, rel.coeffs[i], n - i));
  RingCertificate t = truncation_cert(lifted, k, opts);

  std::vector<Element> tail(rel.coeffs.begin() + static_cast<std::ptrdiff_t>(k), rel.coeffs.end());
  const Element u = evaluate(tail, rel.v, rel.bindings);
  return drop({std::move(t), ReesHandle{s, y}, std::nullopt, u, n - k}, Semifiltration::accelerated(s, n - k), opts);
}

std::string_view to_string(DegreeOne d) noexcept {
  switch (d) {
    case DegreeOne::integral: return "Integral1";
    case DegreeOne::not_integral: return "NotIntegral1";
    case DegreeOne::unknown: return "Unknown";
  }
  return "?";
}

namespace {

// Generator of ker(A -> B) when it is known to be principal and computable.
std::optional<Element> kernel_generator(const Ring& a, const Ring& b) {
  if (a == b) return Element::zero(a);
  // A monic quotient or polynomial ring is free over its base.
  if (b.is_univariate() && embeds_into(a, b.base())) return kernel_generator(a, b.base());
  if (a.is_integers()) {
    if (b.is_modular()) return Element::from_integer(a, b.modulus());
    if (b.is_rationals()) return Element::zero(a);
  }
  if (a.is_modular() && b.is_modular() && a.modulus() % b.modulus() == 0) return Element::from_integer(a, b.modulus());
  return std::nullopt;
}

}  // namespace

DegreeOne degree_one_test(const Ring& algebra, const Semifiltration& s, const Element& u) {
  const Ring& a = s.ring();
  if (!(u.ring() == a)) throw Error(ErrorCode::ring_mismatch, "u = " + u.str() + " is not in " + a.str());
  if (!embeds_into(a, algebra)) throw Error(ErrorCode::no_canonical_map, "no map " + a.str() + " -> " + algebra.str());
  const Ideal i1 = s.ideal_at(1);
  if (auto k = kernel_generator(a, algebra)) {
    std::vector<Element> gens = i1.generators();
    gens.push_back(*k);
    switch (ideal_membership(u, Ideal(a, std::move(gens)))) {
      case Membership::member: return DegreeOne::integral;
      case Membership::not_member: return DegreeOne::not_integral;
      case Membership::unknown: return DegreeOne::unknown;
    }
  }
  return ideal_membership(u, i1) == Membership::member ? DegreeOne::integral : DegreeOne::unknown;
}

SemifilCertificate trivial_attach(const RingCertificate& c) { return {c, Semifiltration::trivial(c.base)}; }

RingCertificate trivial_detach(const SemifilCertificate& c) {
  if (c.semifiltration.rule() != Semifiltration::Rule::trivial)
    throw Error(ErrorCode::invalid_argument, "expected the trivial semifiltration, got " + c.semifiltration.str());
  return c.cert;
}

}  // namespace integra
