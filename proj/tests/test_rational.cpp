#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "revlab/rational.hpp"
#include "revlab/theta.hpp"

using namespace revlab;

TEST_CASE("rational auto-reduction") {
  Rational r(6, 4);
  CHECK(r.num() == 3);
  CHECK(r.den() == 2);
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(3, -2).num() == -3);
  CHECK(Rational(3, -2).den() == 2);
  CHECK(Rational(0, 7) == Rational(0, 1));
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 4);
  CHECK(a + b == Rational(7, 12));
  CHECK(a - b == Rational(1, 12));
  CHECK(a * b == Rational(1, 12));
  CHECK(a / b == Rational(4, 3));
  CHECK((-a) == Rational(-1, 3));
  CHECK(Rational(5, 4).pow(3) == Rational(125, 64));
}

TEST_CASE("rational mod-one reduction") {
  CHECK(Rational(7, 3).mod_one() == Rational(1, 3));
  CHECK(Rational(-1, 4).mod_one() == Rational(3, 4));
  CHECK(Rational(8, 4).mod_one() == Rational(0, 1));
  CHECK(Rational(-9, 4).mod_one() == Rational(3, 4));
}

TEST_CASE("rational overflow is reported, not wrapped") {
  int128 big = int128(1) << 100;
  Rational huge(big, 1);
  CHECK_THROWS_AS(huge * huge, overflow_error);
  CHECK_THROWS_AS(huge + Rational(1, (int128(1) << 26) + 1) * Rational(1, (int128(1) << 26) + 3),
                  overflow_error);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("12") == Rational(12, 1));
  CHECK_THROWS_AS(Rational::parse("a/4"), std::invalid_argument);
}

TEST_CASE("rational ordering and value round trip") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  for (int i = 0; i < 200; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    CHECK(((a < b) == (a.to_double() < b.to_double() - 1e-12) ||
           std::abs(a.to_double() - b.to_double()) < 1e-9));
    Rational sum = a + b;
    CHECK(sum.to_double() == Catch::Approx(a.to_double() + b.to_double()).margin(1e-12));
  }
}

TEST_CASE("theta grammar accepts the three forms") {
  auto quarter = ThetaValue::parse("1/4");
  CHECK(quarter.is_rational());
  CHECK(quarter.value() == 0.25);
  CHECK(quarter.as_rational() == Rational(1, 4));

  auto root2 = ThetaValue::parse("sqrt(2)/4");
  CHECK_FALSE(root2.is_rational());
  CHECK(root2.value() == Catch::Approx(std::sqrt(2.0) / 4.0));

  auto dec = ThetaValue::parse("0.318309886");
  CHECK_FALSE(dec.is_rational());
  CHECK(dec.value() == 0.318309886);
}

TEST_CASE("theta sqrt form with perfect square collapses to rational") {
  auto t = ThetaValue::parse("sqrt(9)/4");
  CHECK(t.is_rational());
  CHECK(t.as_rational() == Rational(3, 4));
}

TEST_CASE("theta rejects values outside (0,1)") {
  CHECK_THROWS_AS(ThetaValue::parse("0/4"), std::invalid_argument);
  CHECK_THROWS_AS(ThetaValue::parse("5/4"), std::invalid_argument);
  CHECK_THROWS_AS(ThetaValue::parse("1.0"), std::invalid_argument);
  CHECK_THROWS_AS(ThetaValue::parse("4/4"), std::invalid_argument);
  CHECK_THROWS_AS(ThetaValue::parse("sqrt(16)/4"), std::invalid_argument);
  CHECK_THROWS_AS(ThetaValue::parse("bogus"), std::invalid_argument);
  CHECK_NOTHROW(ThetaValue::unchecked(0.0));
}

TEST_CASE("rational time reduces and converts") {
  RationalTime rt(2, 6);
  CHECK(rt.p == 1);
  CHECK(rt.q == 3);
  CHECK(rt.seconds() == Catch::Approx(kTwoPi / 3.0));
  CHECK_THROWS_AS(RationalTime(0, 3), std::invalid_argument);

  auto t = TimeValue::rational(RationalTime(1, 3));
  CHECK(t.is_rational());
  CHECK(t.as_turns() == Rational(1, 3));
  CHECK_FALSE(TimeValue::raw(1.0).is_rational());
}
