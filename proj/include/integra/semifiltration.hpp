#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "integra/ideal.hpp"

namespace integra {

/// A sequence of ideals (I_0 = A, I_1, I_2, ...) with I_a I_b contained in
/// I_{a+b}, described by a finite rule tree and evaluated lazily.
class Semifiltration {
 public:
  enum class Rule { powers, constant, trivial, explicit_prefix, product, accelerated, extended };

  /// The trivial semifiltration of Z.
  Semifiltration();

  /// (I^rho).
  static Semifiltration powers(const Ideal& ideal);
  /// (A, I, I, ...).
  static Semifiltration constant(const Ideal& ideal);
  /// (A, A, A, ...).
  static Semifiltration trivial(const Ring& ring);
  /// prefix[rho] for rho < prefix.size(), tail's rho-th ideal afterwards.
  static Semifiltration explicit_prefix(std::vector<Ideal> prefix, const Semifiltration& tail);
  /// (I_rho J_rho).
  static Semifiltration product(const Semifiltration& left, const Semifiltration& right);
  /// (I_{lambda rho}).
  static Semifiltration accelerated(const Semifiltration& inner, std::size_t lambda);
  /// (I_rho A') for a ring A' that A maps into canonically.
  static Semifiltration extended(const Semifiltration& inner, const Ring& target);

  const Ring& ring() const noexcept;
  Rule rule() const noexcept;

  const Ideal& ideal() const;
  const std::vector<Ideal>& prefix() const;
  const Semifiltration& tail() const;
  const Semifiltration& left() const;
  const Semifiltration& right() const;
  const Semifiltration& inner() const;
  std::size_t lambda() const;

  Ideal ideal_at(std::size_t rho) const;

  std::string str() const;

  friend bool operator==(const Semifiltration& a, const Semifiltration& b);

  struct Node;

 private:
  explicit Semifiltration(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Validation {
  enum class Kind { valid, invalid, unknown };
  Kind kind = Kind::valid;
  std::size_t a = 0;
  std::size_t b = 0;
  std::optional<Element> witness;

  std::string str() const;
};

/// Checks I_0 = A and I_a I_b within I_{a+b} for all a + b <= bound, on
/// generator products. The first failing product is reported.
Validation validate(const Semifiltration& s, std::size_t bound);

/// The Rees algebra sum_i I_i Y^i, inside A[Y].
struct ReesHandle {
  Semifiltration semifiltration;
  std::string var;

  /// A[Y] for the handle's variable.
  Ring ambient() const { return Ring::polynomial(semifiltration.ring(), var); }

  friend bool operator==(const ReesHandle&, const ReesHandle&) = default;
};

/// Coefficient-wise test that the i-th coefficient of p lies in I_i.
Membership rees_member(const ReesHandle& h, const Element& p);
/// rees_member(p * q), for members p and q.
Membership rees_product_witness(const ReesHandle& h, const Element& p, const Element& q);

}  // namespace integra
