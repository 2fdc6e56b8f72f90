#pragma once

#include <vector>

#include "integra/certificate.hpp"

namespace integra {

struct Options {
  /// Re-verify every derived certificate before returning it.
  bool paranoid = true;
};

/// Coefficients a_0..a_n over `base` with sum a_i v^i = 0 in `algebra`; not
/// necessarily monic.
struct Relation {
  Ring base;
  Ring algebra;
  Element v;
  std::vector<Element> coeffs;
  Bindings bindings;
};

/// Hypotheses u = sum s_i v^i and sum t_i v^{beta-i} = u v^beta.
struct TwoSidedData {
  Ring base;
  Ring algebra;
  Element v;
  Element u;
  std::vector<Element> s;
  std::vector<Element> t;
  Bindings bindings;
};

/// u = sum b_i v^i, together with a certificate for v u over the same base.
struct InverseLikeData {
  Ring base;
  Ring algebra;
  Element v;
  std::vector<Element> b;
  Bindings bindings;
};

/// Characteristic polynomial over `base` of multiplication by z, where the
/// ring of z is a tower of monic quotients over `base`.
std::vector<Element> frame_charpoly(const Element& z, const Ring& base);
/// Coordinates of `e` in the monomial basis of a monic-quotient tower over `base`.
std::vector<Element> flatten(const Element& e, const Ring& base);
/// Rank of a monic-quotient tower over `base`.
std::size_t frame_rank(const Ring& tower, const Ring& base);

/// Union of two binding lists; a variable bound to two different values is
/// a RingMismatch.
Bindings merge_bindings(const Bindings& a, const Bindings& b);

/// Throws UnverifiedInput unless the certificate verifies.
void require_verified(const RingCertificate& c, const char* what);

/// [-a, 1] for a * 1_B.
RingCertificate scalar_cert(const Ring& base, const Ring& algebra, const Element& a, const Bindings& bindings = {});
/// P(X - x), coefficients in the ring of x.
std::vector<Element> shift_monic(std::span<const Element> p, const Element& x, std::span<const Binding> bindings = {});

RingCertificate sum_cert(const RingCertificate& cx, const RingCertificate& cy, const Options& opts = {});
RingCertificate product_cert(const RingCertificate& cx, const RingCertificate& cy, const Options& opts = {});
RingCertificate negate_cert(const RingCertificate& c, const Options& opts = {});
RingCertificate diff_cert(const RingCertificate& cx, const RingCertificate& cy, const Options& opts = {});
/// cu lives over A itself or over A[w] (a polynomial ring, or the quotient by
/// cv's polynomial) with w bound to cv's element; w-degrees must stay below deg cv.
RingCertificate transitivity_cert(const RingCertificate& cv, const RingCertificate& cu, const Options& opts = {});
/// Certificate of degree n for u = sum_{i <= n-k} a_{i+k} v^i.
RingCertificate truncation_cert(const Relation& rel, std::size_t k, const Options& opts = {});
RingCertificate two_sided_cert(const TwoSidedData& data, const Options& opts = {});
RingCertificate inverse_like_cert(const InverseLikeData& data, const RingCertificate& cvu, const Options& opts = {});

/// View a certificate over new_base / new_algebra through the canonical maps.
RingCertificate change_base(const RingCertificate& c, const Ring& new_base, const Ring& new_algebra);

}  // namespace integra
