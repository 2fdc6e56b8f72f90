#pragma once

#include <optional>

#include "integra/constructive.hpp"

namespace integra {

/// Certificate for u Y^lambda in B[Y] over A[Y] whose coefficients are meant
/// to lie in the Rees algebra of `handle`. With `inner` = J, coefficient k is
/// additionally meant to lie in J_{n-k} times that Rees algebra.
struct ReesCertificate {
  RingCertificate cert;
  ReesHandle handle;
  std::optional<Semifiltration> inner;
  Element u;
  std::size_t lambda = 1;

  friend bool operator==(const ReesCertificate&, const ReesCertificate&) = default;
};

Verdict verify_rees(const ReesCertificate& rc);

/// p_k = a_k Y^{n-k}, element uY.
ReesCertificate lift(const SemifilCertificate& c, const Options& opts = {});
/// For a certificate over Product(I, J): handle I, inner J.
ReesCertificate lift_two(const SemifilCertificate& c, const Options& opts = {});
/// p_k = a_k Y^{lambda(n-k)}, element uY^lambda. For lambda != 1 the
/// semifiltration must be Accelerated(I, lambda) or Product(Accelerated(I, lambda), J).
ReesCertificate lift_accel(const SemifilCertificate& c, std::size_t lambda, const Options& opts = {});

/// a_k = coefficient of Y^{lambda(n-k)} in p_k. Without an explicit target the
/// semifiltration is rebuilt from the handle, inner part and lambda.
SemifilCertificate drop(const ReesCertificate& rc, const std::optional<Semifiltration>& target = std::nullopt,
                        const Options& opts = {});

SemifilCertificate semifil_sum(const SemifilCertificate& cx, const SemifilCertificate& cy, const Options& opts = {});
SemifilCertificate semifil_mixed_product(const SemifilCertificate& cx, const RingCertificate& cy,
                                         const Options& opts = {});
/// Output over Product(I, J) for cx over I and cy over J.
SemifilCertificate semifil_product(const SemifilCertificate& cx, const SemifilCertificate& cy,
                                   const Options& opts = {});
/// cu lives over A[w] (w bound to v) with semifiltration Extended(I, A[w]).
SemifilCertificate semifil_transitivity(const RingCertificate& cv, const SemifilCertificate& cu,
                                        const Options& opts = {});
/// Relation coefficients with a_i in I_{n-i}; output over Accelerated(I, n-k).
SemifilCertificate semifil_truncation(const Relation& rel, const Semifiltration& s, std::size_t k,
                                      const Options& opts = {});

enum class DegreeOne { integral, not_integral, unknown };
std::string_view to_string(DegreeOne d) noexcept;

/// Decides whether u * 1_B is 1-integral over (A, s): u 1_B in I_1 1_B.
DegreeOne degree_one_test(const Ring& algebra, const Semifiltration& s, const Element& u);

SemifilCertificate trivial_attach(const RingCertificate& c);
/// Requires the Trivial semifiltration.
RingCertificate trivial_detach(const SemifilCertificate& c);

}  // namespace integra
