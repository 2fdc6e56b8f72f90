#pragma once

#include <span>
#include <vector>

#include "integra/ring.hpp"

namespace integra {

enum class Membership { member, not_member, unknown };

std::string_view to_string(Membership m) noexcept;

/// Finitely generated ideal. Generators are normalized on construction: zero
/// generators and duplicates are dropped, the zero ideal is <0>, and an ideal
/// containing a recognizable unit is <1>.
class Ideal {
 public:
  Ideal() : Ideal(Ring()) {}
  /// The zero ideal of `ring`.
  explicit Ideal(const Ring& ring);
  Ideal(const Ring& ring, std::vector<Element> generators);

  static Ideal unit(const Ring& ring);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Element>& generators() const noexcept { return gens_; }
  bool is_zero() const { return gens_.size() == 1 && gens_[0].is_zero(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  std::string str() const;

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  Ring ring_;
  std::vector<Element> gens_;
};

/// Three-valued membership oracle. Exact over Z, Z/m, Q, and univariate
/// polynomial rings/monic quotients over a field; ideals generated by
/// constants are decided coefficient-wise over any base. Unknown otherwise.
Membership ideal_membership(const Element& x, const Ideal& ideal);

Ideal ideal_product(const Ideal& a, const Ideal& b);

/// Image ideal under the canonical map into `target` (generators embedded).
Ideal ideal_extend(const Ideal& ideal, const Ring& target, std::span<const Binding> bindings = {});

/// Conjunction of tri-state answers: any NotMember wins, then Unknown.
Membership conjoin(Membership a, Membership b);

}  // namespace integra
