#pragma once

// Computable commutative rings with unity and their elements.
//
// A Ring is an immutable, shareable descriptor of one of
//   Z, Z/m, Q, R[v] (univariate polynomials over R), R[v]/(f) (f monic over R).
// Multivariate rings are nested univariate towers. Every Element stores its
// payload in canonical form, so structural equality is ring equality.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "integra/error.hpp"

namespace integra {

class Element;

class Ring {
 public:
  enum class Kind { integers, modular, rationals, polynomial, monic_quotient };

  /// The integers.
  Ring();

  static Ring integers();
  static Ring modular(const mpz_class& m);
  static Ring rationals();
  static Ring polynomial(const Ring& base, std::string var);
  /// `modulus` is lowest-degree-first over `base`; it must be monic of degree >= 1.
  static Ring monic_quotient(const Ring& base, std::vector<Element> modulus, std::string var);

  Kind kind() const noexcept;
  bool is_integers() const noexcept { return kind() == Kind::integers; }
  bool is_modular() const noexcept { return kind() == Kind::modular; }
  bool is_rationals() const noexcept { return kind() == Kind::rationals; }
  bool is_polynomial() const noexcept { return kind() == Kind::polynomial; }
  bool is_monic_quotient() const noexcept { return kind() == Kind::monic_quotient; }
  /// Polynomial or monic quotient: elements are coefficient lists over base().
  bool is_univariate() const noexcept { return is_polynomial() || is_monic_quotient(); }

  const mpz_class& modulus() const;
  const Ring& base() const;
  const std::string& var() const;
  const std::vector<Element>& quotient_modulus() const;
  std::size_t quotient_degree() const;

  /// Innermost coefficient ring (Z, Z/m or Q).
  const Ring& ground() const;
  bool has_var(std::string_view name) const;
  std::vector<std::string> vars() const;
  /// Ground ring is a field whose primality is certain (Q, or Z/p with p proven prime).
  bool is_field() const;

  std::string str() const;

  friend bool operator==(const Ring& a, const Ring& b);

  struct Node;

 private:
  explicit Ring(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Returns `hint`, or `hint` followed by a number, so that the name is not a
/// variable of any of the given rings.
std::string fresh_var(std::string_view hint, std::initializer_list<const Ring*> rings);

class Element {
 public:
  /// The integer 0.
  Element();

  static Element zero(const Ring& ring);
  static Element one(const Ring& ring);
  /// n * 1 in `ring`.
  static Element from_integer(const Ring& ring, const mpz_class& n);
  static Element from_rational(const Ring& ring, const mpq_class& q);
  /// Polynomial ring or monic quotient element from lowest-first coefficients;
  /// the result is normalized (trailing zeros stripped, reduced mod the modulus).
  static Element from_coeffs(const Ring& ring, std::vector<Element> coeffs);
  /// The class of the variable: X in R[X] or in R[X]/(f).
  static Element generator(const Ring& ring);
  /// Constant `c` (an element of ring.base()) viewed inside `ring`.
  static Element constant(const Ring& ring, const Element& c);
  /// c * X^k in a polynomial ring (or its reduction in a quotient).
  static Element monomial(const Ring& ring, const Element& c, std::size_t k);

  const Ring& ring() const noexcept { return ring_; }

  /// Integers and modular rings (the residue in [0, m)).
  const mpz_class& integer() const;
  const mpq_class& rational() const;
  /// Polynomial and monic-quotient rings.
  const std::vector<Element>& coeffs() const;
  /// i-th coefficient, zero past the end.
  Element coeff(std::size_t i) const;
  /// Degree of the coefficient list; -1 for zero.
  long degree() const;

  bool is_zero() const;
  bool is_one() const;

  Element operator-() const;
  Element pow(std::size_t e) const;

  std::string str() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }
  friend bool operator==(const Element& a, const Element& b);

 private:
  using Payload = std::variant<mpz_class, mpq_class, std::vector<Element>>;
  Element(Ring ring, Payload value) : ring_(std::move(ring)), value_(std::move(value)) {}

  Ring ring_;
  Payload value_;
};

enum class ArithOp { add, sub, mul, neg };

/// Dispatching form of the ring operations; `b` is ignored for neg.
Element ring_arith(ArithOp op, const Element& a, const Element& b);
Element ring_arith(ArithOp op, const Element& a);

/// Evaluation data for non-canonical maps: a polynomial variable of a base
/// ring is sent to a chosen element (typically of the algebra).
struct Binding {
  std::string var;
  Element value;

  friend bool operator==(const Binding&, const Binding&) = default;
};

using Bindings = std::vector<Binding>;

const Binding* find_binding(std::span<const Binding> bindings, std::string_view var);

/// Image of `a` under the canonical homomorphism into `target`.
///
/// Recognized maps: identity; Z into any ring (n * 1); Z/m into Z/m' for m' | m;
/// coefficient-wise maps between univariate rings over the same variable
/// (including the projection R[v] -> R'[v]/(f)); inclusion of a base ring as
/// constants. A variable listed in `bindings` is instead evaluated at its bound
/// value.
std::optional<Element> try_embed(const Element& a, const Ring& target,
                                 std::span<const Binding> bindings = {});
Element embed(const Element& a, const Ring& target, std::span<const Binding> bindings = {});
bool embeds_into(const Ring& source, const Ring& target, std::span<const Binding> bindings = {});

/// sum_k embed(coeffs[k]) * u^k by Horner's scheme.
Element evaluate(std::span<const Element> coeffs, const Element& u,
                 std::span<const Binding> bindings = {});
/// Evaluates an element of a polynomial ring at `u`.
Element poly_eval(const Element& p, const Element& u, std::span<const Binding> bindings = {});

/// Unit test that never answers true for a non-unit.
bool is_known_unit(const Element& a);

/// Remainder of `p` modulo a monic polynomial (both coefficient lists over the
/// same ring); division-free.
std::vector<Element> reduce_monic(std::vector<Element> p, std::span<const Element> monic);

}  // namespace integra
