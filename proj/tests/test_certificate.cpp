#include <doctest.h>

#include "support.hpp"

using namespace integra;
using support::ints;
using support::num;

TEST_CASE("verify sqrt 2") {
  const Ring z;
  const Ring b = Ring::monic_quotient(z, ints(z, {-2, 0, 1}), "s");
  const RingCertificate c{z, b, Element::generator(b), ints(z, {-2, 0, 1}), {}};
  CHECK(verify_ring(c).line() == "VERIFIED");
  RingCertificate bad = c;
  bad.coeffs = ints(z, {-3, 0, 1});
  const Verdict v = verify_ring(bad);
  CHECK(v.refuted());
  CHECK(v.line() == "REFUTED P(u) = -1");
  CHECK(v.exit_code() == 1);
}

TEST_CASE("malformed certificates") {
  const Ring z;
  const Ring b = Ring::monic_quotient(z, ints(z, {-2, 0, 1}), "s");
  CHECK_THROWS_AS(verify_ring({z, b, Element::generator(b), ints(z, {-2, 0, 2}), {}}), Error);
  CHECK_THROWS_AS(verify_ring({z, b, Element::generator(b), {}, {}}), Error);
  CHECK_THROWS_AS(verify_ring({z, b, num(z, 1), ints(z, {-1, 1}), {}}), Error);
}

TEST_CASE("padding keeps validity") {
  const Ring z;
  const Ring b = Ring::monic_quotient(z, ints(z, {-2, 0, 1}), "s");
  const RingCertificate c{z, b, Element::generator(b), ints(z, {-2, 0, 1}), {}};
  const RingCertificate p = pad(c, 4);
  CHECK(p.coeffs == ints(z, {0, 0, -2, 0, 1}));
  CHECK(verify_ring(p).verified());
  CHECK_THROWS_AS(pad(c, 1), Error);
}

TEST_CASE("semifiltration certificates") {
  const Ring z;
  const Semifiltration p2 = Semifiltration::powers(Ideal(z, {num(z, 2)}));
  const SemifilCertificate ok{{z, z, num(z, 2), ints(z, {-2, 1}), {}}, p2};
  CHECK(verify_semifil(ok).verified());
  const SemifilCertificate bad{{z, z, num(z, 3), ints(z, {-3, 1}), {}}, p2};
  CHECK(verify_semifil(bad).line() == "REFUTED a_0 = -3 not in I_1 = <2>");
  const Ring zx = Ring::polynomial(z, "x");
  const Semifiltration px = Semifiltration::powers(Ideal(zx, {Element::generator(zx)}));
  const SemifilCertificate unk{{zx, zx, Element::generator(zx), {-Element::generator(zx), Element::one(zx)}, {}}, px};
  CHECK(verify_semifil(unk).line() == "VERIFIED-MODULO-MEMBERSHIP");
  CHECK(verify_semifil(unk).exit_code() == 2);
}

TEST_CASE("nilpotency certificates") {
  const Ring z8 = Ring::modular(8);
  CHECK(verify_semifil(nilpotency_cert(z8, num(z8, 2), 3)).verified());
  CHECK(verify_semifil(nilpotency_cert(z8, num(z8, 2), 2)).refuted());
}

TEST_CASE("module presentation to certificate") {
  const Ring z;
  const Ring b = Ring::monic_quotient(z, ints(z, {-2, 0, 1}), "s");
  const Element s = Element::generator(b);
  // u = 1 + s acting on generators (1, s).
  const ModulePresentation mp{z, b, num(b, 1) + s, {num(b, 1), s}, Matrix::from_integers(z, {{1, 1}, {2, 1}}), {}};
  const RingCertificate c = module_to_cert(mp);
  CHECK(c.coeffs == ints(z, {-1, -2, 1}));
  CHECK(verify_ring(c).verified());
  ModulePresentation wrong = mp;
  wrong.action = Matrix::from_integers(z, {{1, 1}, {1, 1}});
  CHECK_THROWS_AS(module_to_cert(wrong), Error);
}
