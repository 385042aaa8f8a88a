#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apogen/rational.hpp"
#include "test_util.hpp"

using apogen::Rational;

TEST_CASE("construction is canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(0, 7) == Rational());
  CHECK(Rational(0, -7).to_string() == "0");
  CHECK(Rational(1, -2).to_string() == "-1/2");  // sign on the numerator
  CHECK(Rational(6, 2).to_string() == "3");      // unit denominator elided
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts exactly p or p/q") {
  CHECK(Rational::parse("0") == Rational());
  CHECK(Rational::parse("-7/3") == Rational(-7, 3));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("+3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1 / 2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("serialization round-trips") {
  testutil::SplitMix64 rng(0x5eed0001);
  for (int i = 0; i < 500; ++i) {
    Rational q = testutil::rand_rational(rng, 1000);
    CHECK(Rational::parse(q.to_string()) == q);
  }
}

TEST_CASE("field axioms on random triples") {
  testutil::SplitMix64 rng(0x5eed0002);
  for (int i = 0; i < 1000; ++i) {
    Rational a = testutil::rand_rational(rng);
    Rational b = testutil::rand_rational(rng);
    Rational c = testutil::rand_rational(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rational() == a);
    CHECK(a * Rational(1) == a);
    CHECK(a - a == Rational());
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}

TEST_CASE("powers and inversion") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(0).pow(5) == Rational(0));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("ordering and helpers") {
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
  CHECK(Rational(-5, 7).sign() == -1);
  CHECK(Rational(3).sign() == 1);
  CHECK(Rational().sign() == 0);
}
