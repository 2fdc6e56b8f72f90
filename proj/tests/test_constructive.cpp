#include <doctest.h>

#include "support.hpp"

using namespace integra;
using support::ints;
using support::num;

namespace {

struct SqrtPair {
  Ring z;
  Ring b;
  RingCertificate cx;
  RingCertificate cy;
};

SqrtPair sqrt2_sqrt3() {
  const Ring z;
  const Ring b1 = Ring::monic_quotient(z, ints(z, {-2, 0, 1}), "a");
  const Ring b = Ring::monic_quotient(b1, ints(b1, {-3, 0, 1}), "b");
  const Element x = embed(Element::generator(b1), b);
  const Element y = Element::generator(b);
  return {z, b, {z, b, x, ints(z, {-2, 0, 1}), {}}, {z, b, y, ints(z, {-3, 0, 1}), {}}};
}

}  // namespace

TEST_CASE("sum, product, negation and difference") {
  const auto p = sqrt2_sqrt3();
  CHECK(sum_cert(p.cx, p.cy).coeffs == ints(p.z, {1, 0, -10, 0, 1}));
  CHECK(product_cert(p.cx, p.cy).coeffs == ints(p.z, {36, 0, -12, 0, 1}));
  CHECK(diff_cert(p.cx, p.cy).coeffs == ints(p.z, {1, 0, -10, 0, 1}));
  const RingCertificate n = negate_cert(p.cx);
  CHECK(n.element == -p.cx.element);
  CHECK(verify_ring(n).verified());
}

TEST_CASE("sum against the resultant oracle on random pairs") {
  support::Rng rng(21);
  const Ring z;
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(support::uniform(rng, 1, 3));
    const auto m = static_cast<std::size_t>(support::uniform(rng, 1, 2));
    const auto pp = support::random_monic(rng, z, n);
    const auto qq = support::random_monic(rng, z, m);
    const Ring b1 = Ring::monic_quotient(z, pp, "a");
    const Ring b = Ring::monic_quotient(b1, [&] {
      std::vector<Element> v;
      for (const auto& c : qq) v.push_back(embed(c, b1));
      return v;
    }(), "b");
    const RingCertificate cx{z, b, embed(Element::generator(b1), b), pp, {}};
    const RingCertificate cy{z, b, Element::generator(b), qq, {}};
    CHECK(support::to_int_poly(sum_cert(cx, cy).coeffs) ==
          oracle::sum_polynomial(support::to_int_poly(pp), support::to_int_poly(qq)));
    CHECK(support::to_int_poly(product_cert(cx, cy).coeffs) ==
          oracle::product_polynomial(support::to_int_poly(pp), support::to_int_poly(qq)));
  }
}

TEST_CASE("scalars and monic shift") {
  const Ring z;
  const Ring b = Ring::monic_quotient(z, ints(z, {-2, 0, 1}), "s");
  const RingCertificate c = scalar_cert(z, b, num(z, 5));
  CHECK(c.coeffs == ints(z, {-5, 1}));
  CHECK(verify_ring(c).verified());
  CHECK(shift_monic(ints(z, {-2, 0, 1}), num(z, 1)) == ints(z, {-1, -2, 1}));
}

TEST_CASE("truncation of a relation") {
  const Ring z;
  const Ring q = Ring::monic_quotient(z, ints(z, {1, -3, 1}), "X");
  const Relation rel{z, q, Element::generator(q), ints(z, {1, -3, 1}), {}};
  const RingCertificate c = truncation_cert(rel, 1);
  CHECK(c.coeffs == ints(z, {1, 3, 1}));
  CHECK(verify_ring(c).verified());
  for (std::size_t k = 0; k <= 2; ++k) CHECK(truncation_cert(rel, k).degree() == 2);
  CHECK_THROWS_AS(truncation_cert(rel, 3), Error);
  Relation broken = rel;
  broken.coeffs = ints(z, {2, -3, 1});
  CHECK_THROWS_AS(truncation_cert(broken, 1), Error);
}

TEST_CASE("transitivity for the fourth root of 2") {
  const Ring z;
  const Ring c1 = Ring::monic_quotient(z, ints(z, {-2, 0, 1}), "v");
  const Ring c = Ring::monic_quotient(c1, {-Element::generator(c1), Element::zero(c1), Element::one(c1)}, "u");
  const Element v = embed(Element::generator(c1), c);
  const RingCertificate cv{z, c, v, ints(z, {-2, 0, 1}), {}};
  const Ring zw = Ring::polynomial(z, "w");
  const RingCertificate cu{zw, c, Element::generator(c), {-Element::generator(zw), Element::zero(zw), Element::one(zw)},
                           {{"w", v}}};
  const RingCertificate t = transitivity_cert(cv, cu);
  CHECK(t.coeffs == ints(z, {-2, 0, 0, 0, 1}));
  RingCertificate high = cu;
  high.coeffs[0] = -Element::generator(zw).pow(2);
  CHECK_THROWS_AS(transitivity_cert(cv, high), Error);
}

TEST_CASE("two-sided expansion and inverse-like data") {
  const Ring q = Ring::rationals();
  const Ring s = Ring::monic_quotient(q, ints(q, {-2, 0, 1}), "s");
  const Element v = Element::generator(s);
  const RingCertificate ts = two_sided_cert({q, s, v, Element::one(s) + v, ints(q, {1, 1}), ints(q, {1, 2}), {}});
  CHECK(ts.coeffs == ints(q, {-1, -2, 1}));
  CHECK(verify_ring(ts).verified());
  CHECK_THROWS_AS(two_sided_cert({q, s, v, Element::one(s) + v, ints(q, {1, 1}), ints(q, {1, 3}), {}}), Error);

  const InverseLikeData d{q, s, v, {Element::zero(q), Element::from_rational(q, mpq_class(1, 2))}, {}};
  const RingCertificate il = inverse_like_cert(d, scalar_cert(q, s, Element::one(q)));
  CHECK(il.coeffs == std::vector<Element>{Element::from_rational(q, mpq_class(-1, 2)), Element::zero(q), Element::one(q)});
  CHECK(il.element.str() == "1/2*s");
}

TEST_CASE("rejects unverified inputs") {
  const auto p = sqrt2_sqrt3();
  RingCertificate bad = p.cx;
  bad.coeffs = ints(p.z, {-5, 0, 1});
  CHECK_THROWS_AS(sum_cert(bad, p.cy), Error);
}
