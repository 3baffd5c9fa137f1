#include "doctest.h"

#include "sfs/error.hpp"
#include "sfs/orbifold.hpp"

using namespace sfs;

TEST_CASE("euler characteristic of closed surfaces") {
  CHECK(orbifold_euler_characteristic(Orbifold(true, 2, {})) == Rational(-2));
  CHECK(orbifold_euler_characteristic(Orbifold(true, 0, {})) == Rational(2));
  CHECK(orbifold_euler_characteristic(Orbifold(false, 2, {})) == Rational(0));  // Klein bottle
  CHECK(orbifold_euler_characteristic(Orbifold(false, 1, {})) == Rational(1));  // RP^2
}

TEST_CASE("euler characteristic with cone points") {
  // 2 - (1/2 + 2/3 + 6/7) = -1/42
  CHECK(orbifold_euler_characteristic(Orbifold(true, 0, {2, 3, 7})) == Rational(-1, 42));
  CHECK(orbifold_euler_characteristic(Orbifold(true, 0, {2, 3, 6})) == Rational(0));
  CHECK(orbifold_euler_characteristic(Orbifold(true, 0, {2, 3, 5})) == Rational(1, 30));
  CHECK(orbifold_euler_characteristic(Orbifold(true, 0, {5, 5, 5})) == Rational(-2, 5));
}

TEST_CASE("geometry classification") {
  CHECK(classify_geometry(Orbifold(true, 0, {5})) == Geometry::Bad);
  CHECK(classify_geometry(Orbifold(true, 0, {2, 3})) == Geometry::Bad);
  CHECK(classify_geometry(Orbifold(true, 0, {3, 3})) == Geometry::Elliptic);  // equal orders: good
  CHECK(classify_geometry(Orbifold(true, 0, {2, 3, 7})) == Geometry::Hyperbolic);
  CHECK(classify_geometry(Orbifold(true, 0, {2, 3, 6})) == Geometry::Parabolic);
  CHECK(classify_geometry(Orbifold(true, 0, {2, 3, 5})) == Geometry::Elliptic);
  CHECK(classify_geometry(Orbifold(true, 1, {})) == Geometry::Parabolic);
  CHECK(classify_geometry(Orbifold(true, 2, {})) == Geometry::Hyperbolic);
  CHECK(classify_geometry(Orbifold(false, 1, {})) == Geometry::Elliptic);
  CHECK(classify_geometry(Orbifold(false, 1, {2})) == Geometry::Elliptic);  // RP^2(2) is good
}

TEST_CASE("geometry agrees with the sign of chi^orb away from the bad list") {
  for (long long g = 0; g <= 3; ++g)
    for (long long a = 2; a <= 9; ++a)
      for (long long b = 2; b <= 9; ++b) {
        Orbifold o(true, g, {a, b, 7});
        Geometry geo = classify_geometry(o);
        int s = orbifold_euler_characteristic(o).sign();
        CHECK(geo == (s < 0   ? Geometry::Hyperbolic
                      : s == 0 ? Geometry::Parabolic
                               : Geometry::Elliptic));
      }
}

TEST_CASE("turnover detection") {
  CHECK(is_turnover(Orbifold(true, 0, {2, 3, 7})));
  CHECK(is_turnover(Orbifold(true, 0, {2, 2, 2})));
  CHECK_FALSE(is_turnover(Orbifold(true, 0, {2, 3})));
  CHECK_FALSE(is_turnover(Orbifold(true, 1, {2, 3, 7})));
  CHECK_FALSE(is_turnover(Orbifold(false, 1, {2, 3, 7})));
  CHECK_FALSE(is_turnover(Orbifold(true, 0, {2, 3, 7, 11})));
}

TEST_CASE("orbifold validation") {
  CHECK_THROWS_AS(Orbifold(true, 0, {1}), Error);
  CHECK_THROWS_AS(Orbifold(true, -1, {}), Error);
  CHECK_THROWS_AS(Orbifold(false, 0, {}), Error);
}
