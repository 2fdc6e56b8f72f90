#include "integra/ideal.hpp"

#include <algorithm>

namespace integra {

std::string_view to_string(Membership m) noexcept {
  switch (m) {
    case Membership::member: return "Member";
    case Membership::not_member: return "NotMember";
    case Membership::unknown: return "Unknown";
  }
  return "?";
}

Membership conjoin(Membership a, Membership b) {
  if (a == Membership::not_member || b == Membership::not_member) return Membership::not_member;
  if (a == Membership::unknown || b == Membership::unknown) return Membership::unknown;
  return Membership::member;
}

Ideal::Ideal(const Ring& ring) : ring_(ring), gens_{Element::zero(ring)} {}

Ideal::Ideal(const Ring& ring, std::vector<Element> generators) : ring_(ring) {
  for (auto& g : generators) {
    if (!(g.ring() == ring))
      throw Error(ErrorCode::ring_mismatch, "ideal generator " + g.str() + " is not in " + ring.str());
    if (g.is_zero()) continue;
    if (is_known_unit(g)) {
      gens_ = {Element::one(ring)};
      return;
    }
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
  }
  if (gens_.empty()) gens_.push_back(Element::zero(ring));
}

Ideal Ideal::unit(const Ring& ring) { return Ideal(ring, {Element::one(ring)}); }

std::string Ideal::str() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].str();
  }
  return s + ">";
}

namespace {

// Univariate polynomial arithmetic over a field, on coefficient lists.
using Coeffs = std::vector<Element>;

Element field_inverse(const Element& a) {
  const Ring& r = a.ring();
  if (r.is_rationals()) return Element::from_rational(r, 1 / a.rational());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), a.integer().get_mpz_t(), r.modulus().get_mpz_t());
  return Element::from_integer(r, inv);
}

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Coeffs make_monic(Coeffs c) {
  trim(c);
  if (c.empty()) return c;
  const Element inv = field_inverse(c.back());
  for (auto& x : c) x *= inv;
  return c;
}

Coeffs remainder(Coeffs a, const Coeffs& monic_b) {
  trim(a);
  return reduce_monic(std::move(a), monic_b);
}

Coeffs poly_gcd(Coeffs a, Coeffs b) {
  a = make_monic(std::move(a));
  b = make_monic(std::move(b));
  while (!b.empty()) {
    Coeffs r = make_monic(remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Membership from_bool(bool b) { return b ? Membership::member : Membership::not_member; }

Membership constant_generator_membership(const Element& x, const Ideal& ideal) {
  const Ring& r = ideal.ring();
  std::vector<Element> base_gens;
  for (const auto& g : ideal.generators()) {
    if (g.degree() > 0) return Membership::unknown;
    base_gens.push_back(g.coeff(0));
  }
  const Ideal base_ideal(r.base(), std::move(base_gens));
  Membership result = Membership::member;
  for (const auto& c : x.coeffs()) {
    result = conjoin(result, ideal_membership(c, base_ideal));
    if (result == Membership::not_member) break;
  }
  return result;
}

}  // namespace

Membership ideal_membership(const Element& x, const Ideal& ideal) {
  const Ring& r = ideal.ring();
  if (!(x.ring() == r))
    throw Error(ErrorCode::ring_mismatch, "element of " + x.ring().str() + " tested against ideal of " + r.str());
  if (x.is_zero() || ideal.is_unit()) return Membership::member;
  if (ideal.is_zero()) return Membership::not_member;

  switch (r.kind()) {
    case Ring::Kind::integers: {
      mpz_class g = 0;
      for (const auto& gen : ideal.generators()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gen.integer().get_mpz_t());
      return from_bool(mpz_divisible_p(x.integer().get_mpz_t(), g.get_mpz_t()) != 0);
    }
    case Ring::Kind::modular: {
      mpz_class g = r.modulus();
      for (const auto& gen : ideal.generators()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gen.integer().get_mpz_t());
      return from_bool(mpz_divisible_p(x.integer().get_mpz_t(), g.get_mpz_t()) != 0);
    }
    case Ring::Kind::rationals:
      // A nonzero generator is a unit, so normalization already made this <1>.
      return Membership::not_member;
    default: break;
  }

  if (std::find(ideal.generators().begin(), ideal.generators().end(), x) != ideal.generators().end())
    return Membership::member;

  if (r.base().is_field() && !r.base().is_univariate()) {
    Coeffs g = r.is_monic_quotient() ? r.quotient_modulus() : Coeffs{};
    for (const auto& gen : ideal.generators()) g = poly_gcd(std::move(g), gen.coeffs());
    return from_bool(remainder(x.coeffs(), g).empty());
  }
  return constant_generator_membership(x, ideal);
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring()))
    throw Error(ErrorCode::ring_mismatch, "product of ideals of " + a.ring().str() + " and " + b.ring().str());
  std::vector<Element> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(g * h);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_extend(const Ideal& ideal, const Ring& target, std::span<const Binding> bindings) {
  std::vector<Element> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, target, bindings));
  return Ideal(target, std::move(gens));
}

}  // namespace integra
