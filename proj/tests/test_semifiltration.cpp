#include <doctest.h>

#include "support.hpp"

using namespace integra;
using support::ints;
using support::num;

TEST_CASE("ideal sequences") {
  const Ring z;
  const Ideal two(z, {num(z, 2)});
  const Ideal three(z, {num(z, 3)});
  const auto p2 = Semifiltration::powers(two);
  CHECK(p2.ideal_at(0).is_unit());
  CHECK(p2.ideal_at(3) == Ideal(z, {num(z, 8)}));
  CHECK(Semifiltration::accelerated(p2, 2).ideal_at(3) == Ideal(z, {num(z, 64)}));
  CHECK(Semifiltration::constant(two).ideal_at(5) == two);
  CHECK(Semifiltration::constant(two).ideal_at(0).is_unit());
  CHECK(Semifiltration::trivial(z).ideal_at(7).is_unit());
  CHECK(Semifiltration::product(p2, Semifiltration::powers(three)).ideal_at(2) == Ideal(z, {num(z, 36)}));
  const auto ex = Semifiltration::explicit_prefix({Ideal::unit(z), three}, p2);
  CHECK(ex.ideal_at(1) == three);
  CHECK(ex.ideal_at(2) == Ideal(z, {num(z, 4)}));
  const Ring zx = Ring::polynomial(z, "x");
  CHECK(Semifiltration::extended(p2, zx).ideal_at(2) == Ideal(zx, {num(zx, 4)}));
  CHECK_THROWS_AS(Semifiltration::extended(Semifiltration::trivial(zx), z), Error);
  CHECK(Semifiltration::accelerated(p2, 2).str() == "Accelerated(Powers(<2>), 2)");
}

TEST_CASE("bounded validation") {
  const Ring z;
  const auto p2 = Semifiltration::powers(Ideal(z, {num(z, 2)}));
  CHECK(validate(p2, 6).kind == Validation::Kind::valid);
  CHECK(validate(Semifiltration::product(p2, Semifiltration::constant(Ideal(z, {num(z, 3)}))), 6).kind ==
        Validation::Kind::valid);
  CHECK(validate(Semifiltration::accelerated(p2, 3), 4).kind == Validation::Kind::valid);
  // (Z, <4>, <2>, ...) breaks I_1 I_1 within I_2? 16 in <2>: fine. (Z, <2>, <8>) does not.
  const auto bad = Semifiltration::explicit_prefix({Ideal::unit(z), Ideal(z, {num(z, 2)}), Ideal(z, {num(z, 8)})},
                                                   Semifiltration::powers(Ideal(z, {num(z, 8)})));
  const Validation v = validate(bad, 4);
  CHECK(v.kind == Validation::Kind::invalid);
  CHECK(v.str() == "Invalid(1, 1, 4)");
  const auto no_unit = Semifiltration::explicit_prefix({Ideal(z, {num(z, 2)})}, p2);
  CHECK(validate(no_unit, 3).kind == Validation::Kind::invalid);
  CHECK_THROWS_AS(validate(p2, 0), Error);
}

TEST_CASE("Rees algebra membership") {
  const Ring z;
  const ReesHandle h{Semifiltration::powers(Ideal(z, {num(z, 2)})), "Y"};
  const Ring zy = h.ambient();
  const Element y = Element::generator(zy);
  CHECK(rees_member(h, num(zy, 3) + num(zy, 2) * y + num(zy, 4) * y * y) == Membership::member);
  CHECK(rees_member(h, num(zy, 2) * y * y) == Membership::not_member);
  CHECK(rees_product_witness(h, num(zy, 2) * y, num(zy, 6) * y) == Membership::member);
  CHECK_THROWS_AS(rees_member(h, num(z, 1)), Error);
}
