#include "integra/certificate.hpp"

namespace integra {

std::string Verdict::line() const {
  switch (kind) {
    case Kind::verified: return "VERIFIED";
    case Kind::refuted: return detail.empty() ? "REFUTED" : "REFUTED " + detail;
    case Kind::verified_modulo_membership: return "VERIFIED-MODULO-MEMBERSHIP";
  }
  return "?";
}

int Verdict::exit_code() const {
  switch (kind) {
    case Kind::verified: return 0;
    case Kind::refuted: return 1;
    case Kind::verified_modulo_membership: return 2;
  }
  return 3;
}

namespace {

Verdict refuted(std::string detail, std::optional<Element> value = std::nullopt) {
  return {Verdict::Kind::refuted, std::move(detail), std::move(value)};
}

const Ring* layer_with_var(const Ring& r, const std::string& var) {
  for (const Ring* p = &r; p->is_univariate(); p = &p->base())
    if (p->var() == var) return p;
  return nullptr;
}

}  // namespace

void check_well_formed(const RingCertificate& c) {
  if (c.coeffs.empty()) throw Error(ErrorCode::malformed_certificate, "empty coefficient list");
  for (std::size_t i = 0; i < c.coeffs.size(); ++i)
    if (!(c.coeffs[i].ring() == c.base))
      throw Error(ErrorCode::malformed_certificate,
                  "coefficient " + std::to_string(i) + " lies in " + c.coeffs[i].ring().str() + ", not " + c.base.str());
  if (!c.coeffs.back().is_one())
    throw Error(ErrorCode::malformed_certificate, "leading coefficient " + c.coeffs.back().str() + " is not 1");
  if (!(c.element.ring() == c.algebra))
    throw Error(ErrorCode::malformed_certificate,
                "element lies in " + c.element.ring().str() + ", not in the algebra " + c.algebra.str());
  for (const auto& b : c.bindings) {
    const Ring* layer = layer_with_var(c.base, b.var);
    if (!layer) throw Error(ErrorCode::malformed_certificate, "binding for unknown variable '" + b.var + "'");
    if (layer->is_monic_quotient()) {
      const Element image = evaluate(layer->quotient_modulus(), b.value, c.bindings);
      if (!image.is_zero())
        throw Error(ErrorCode::malformed_certificate,
                    "bound value of '" + b.var + "' does not satisfy its quotient relation");
    }
  }
}

Verdict verify_ring(const RingCertificate& c) {
  check_well_formed(c);
  const Element value = evaluate(c.coeffs, c.element, c.bindings);
  if (value.is_zero()) return {};
  return refuted("P(u) = " + value.str(), value);
}

Verdict verify_semifil(const SemifilCertificate& c) {
  if (!(c.semifiltration.ring() == c.cert.base))
    throw Error(ErrorCode::malformed_certificate, "semifiltration over " + c.semifiltration.ring().str() +
                                                      " for a certificate over " + c.cert.base.str());
  Verdict v = verify_ring(c.cert);
  if (v.refuted()) return v;
  const std::size_t n = c.cert.degree();
  bool unknown = false;
  for (std::size_t i = 0; i <= n; ++i) {
    const Ideal ideal = c.semifiltration.ideal_at(n - i);
    switch (ideal_membership(c.cert.coeffs[i], ideal)) {
      case Membership::not_member:
        return refuted("a_" + std::to_string(i) + " = " + c.cert.coeffs[i].str() + " not in I_" +
                           std::to_string(n - i) + " = " + ideal.str(),
                       c.cert.coeffs[i]);
      case Membership::unknown: unknown = true; break;
      case Membership::member: break;
    }
  }
  if (unknown) return {Verdict::Kind::verified_modulo_membership, {}, std::nullopt};
  return {};
}

RingCertificate pad(const RingCertificate& c, std::size_t p) {
  check_well_formed(c);
  const std::size_t n = c.degree();
  if (p < n)
    throw Error(ErrorCode::degree_too_small,
                "cannot pad a degree-" + std::to_string(n) + " certificate to degree " + std::to_string(p));
  RingCertificate out = c;
  out.coeffs.insert(out.coeffs.begin(), p - n, Element::zero(c.base));
  return out;
}

SemifilCertificate nilpotency_cert(const Ring& ring, const Element& u, std::size_t n) {
  if (!(u.ring() == ring)) throw Error(ErrorCode::ring_mismatch, "element " + u.str() + " is not in " + ring.str());
  std::vector<Element> coeffs(n + 1, Element::zero(ring));
  coeffs[n] = Element::one(ring);
  return {RingCertificate{ring, ring, u, std::move(coeffs), {}}, Semifiltration::powers(Ideal(ring))};
}

RingCertificate module_to_cert(const ModulePresentation& mp) {
  const std::size_t n = mp.generators.size();
  if (mp.action.rows() != n || mp.action.cols() != n)
    throw Error(ErrorCode::dimension_mismatch, std::to_string(n) + " generators with a " +
                                                   std::to_string(mp.action.rows()) + "x" +
                                                   std::to_string(mp.action.cols()) + " action matrix");
  if (!(mp.action.ring() == mp.base))
    throw Error(ErrorCode::ring_mismatch, "action matrix over " + mp.action.ring().str() + ", base " + mp.base.str());
  if (!(mp.element.ring() == mp.algebra))
    throw Error(ErrorCode::ring_mismatch, "element lies outside " + mp.algebra.str());
  for (std::size_t k = 0; k < n; ++k) {
    if (!(mp.generators[k].ring() == mp.algebra))
      throw Error(ErrorCode::ring_mismatch, "generator " + std::to_string(k) + " lies outside " + mp.algebra.str());
    Element rhs = Element::zero(mp.algebra);
    for (std::size_t i = 0; i < n; ++i) rhs += embed(mp.action(k, i), mp.algebra, mp.bindings) * mp.generators[i];
    if (!(mp.element * mp.generators[k] == rhs))
      throw Error(ErrorCode::relation_failed, "action row " + std::to_string(k) + " does not hold");
  }
  return {mp.base, mp.algebra, mp.element, charpoly(mp.action), mp.bindings};
}

RingCertificate forget_semifiltration(const SemifilCertificate& c) { return c.cert; }

}  // namespace integra
