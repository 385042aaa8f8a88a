#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apogen/detail/qpoly_gcd.hpp"
#include "apogen/ratfun.hpp"
#include "test_util.hpp"

using apogen::Poly;
using apogen::QPoly;
using apogen::Rational;
using apogen::RatFun;

static QPoly P(std::vector<long> ints) {
  std::vector<Rational> c;
  c.reserve(ints.size());
  for (long v : ints) c.emplace_back(v);
  return QPoly(std::move(c));
}

static void check_canonical(const RatFun& f) {
  // canonical form: monic denominator, coprime num/den, zero == 0/1
  CHECK(!f.den().is_zero());
  CHECK(f.den().coeff(f.den().degree()) == Rational(1));
  if (f.num().is_zero()) {
    CHECK(f.den() == QPoly::one());
  } else {
    CHECK(gcd_euclid(f.num(), f.den()) == QPoly::one());
  }
}

TEST_CASE("normalization") {
  // (2L+2)/(L^2+2L+1) reduces to 2/(L+1)
  RatFun f(P({2, 2}), P({1, 2, 1}));
  CHECK(f.num() == P({2}));
  CHECK(f.den() == P({1, 1}));
  check_canonical(f);

  // zero numerator collapses to 0/1
  RatFun z(QPoly(), P({1, 1}));
  CHECK(z.is_zero());
  CHECK(z.den() == QPoly::one());

  // (3L)/3 is the polynomial L
  RatFun p(P({0, 3}), P({3}));
  CHECK(p.num() == P({0, 1}));
  CHECK(p.den() == QPoly::one());

  // non-monic denominator: L/(2L+2) -> (1/2 L)/(L+1)
  RatFun h(P({0, 1}), P({2, 2}));
  CHECK(h.den() == P({1, 1}));
  CHECK(h.num() == QPoly(std::vector<Rational>{Rational(0), Rational(1, 2)}));

  CHECK_THROWS_AS(RatFun(P({1}), QPoly()), std::domain_error);
}

TEST_CASE("qpoly_gcd agrees with the classical Euclid gcd") {
  using apogen::detail::qpoly_gcd;
  testutil::SplitMix64 rng(0x5eed0010);
  for (int i = 0; i < 200; ++i) {
    QPoly a = testutil::rand_qpoly(rng, 7);
    QPoly b = testutil::rand_qpoly(rng, 7);
    CHECK(qpoly_gcd(a, b) == gcd_euclid(a, b));
  }
  // structured inputs with a forced common factor
  for (int i = 0; i < 120; ++i) {
    QPoly g = testutil::rand_nonzero_qpoly(rng, 4);
    QPoly a = g * testutil::rand_qpoly(rng, 5);
    QPoly b = g * testutil::rand_qpoly(rng, 5);
    CHECK(qpoly_gcd(a, b) == gcd_euclid(a, b));
  }
  CHECK(qpoly_gcd(QPoly(), QPoly()) == QPoly());
  CHECK(qpoly_gcd(P({0, 2}), QPoly()) == P({0, 1}));
}

TEST_CASE("field axioms on random elements") {
  testutil::SplitMix64 rng(0x5eed0011);
  for (int i = 0; i < 150; ++i) {
    RatFun a = testutil::rand_ratfun(rng);
    RatFun b = testutil::rand_ratfun(rng);
    RatFun c = testutil::rand_ratfun(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + RatFun::zero() == a);
    CHECK(a * RatFun::one() == a);
    CHECK(a - a == RatFun::zero());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == RatFun::one());
      CHECK(a / a == RatFun::one());
    }
    check_canonical(a + b);
    check_canonical(a * b);
    check_canonical(a - c);
    if (!b.is_zero()) check_canonical(a / b);
  }
}

TEST_CASE("arithmetic matches cross-multiplied forms") {
  testutil::SplitMix64 rng(0x5eed0012);
  for (int i = 0; i < 150; ++i) {
    RatFun a = testutil::rand_ratfun(rng);
    RatFun b = testutil::rand_ratfun(rng);
    RatFun s = a + b;
    // s(den_a den_b) == num_a den_b + num_b den_a as polynomials
    CHECK(s.num() * (a.den() * b.den()) ==
          s.den() * (a.num() * b.den() + b.num() * a.den()));
    RatFun m = a * b;
    CHECK(m.num() * (a.den() * b.den()) == m.den() * (a.num() * b.num()));
  }
}

TEST_CASE("powers including negative exponents") {
  RatFun L = RatFun::symbol();
  RatFun f = (L + RatFun::one());
  CHECK(f.pow(3).num() == P({1, 3, 3, 1}));
  CHECK(f.pow(-2) == RatFun::one() / (f * f));
  CHECK(f.pow(0) == RatFun::one());
  CHECK(RatFun::zero().pow(3) == RatFun::zero());
  CHECK_THROWS_AS(RatFun::zero().pow(-1), std::domain_error);
  CHECK_THROWS_AS(RatFun::zero().inverse(), std::domain_error);
  CHECK_THROWS_AS(f / RatFun::zero(), std::domain_error);
}

TEST_CASE("substituting a power of the variable") {
  testutil::SplitMix64 rng(0x5eed0013);
  for (int i = 0; i < 80; ++i) {
    RatFun f = testutil::rand_ratfun(rng);
    RatFun g = f.subst_power(3);
    check_canonical(g);
    Rational c = testutil::rand_rational(rng, 6);
    Rational c3 = c * c * c;
    bool pole = f.den().eval(c3).is_zero();
    if (!pole) CHECK(g.eval(c) == f.eval(c3));
    CHECK(f.subst_power(1) == f);
  }
  // homomorphism property: subst_power distributes over + and *
  for (int i = 0; i < 60; ++i) {
    RatFun a = testutil::rand_ratfun(rng);
    RatFun b = testutil::rand_ratfun(rng);
    CHECK((a + b).subst_power(2) == a.subst_power(2) + b.subst_power(2));
    CHECK((a * b).subst_power(2) == a.subst_power(2) * b.subst_power(2));
  }
}

TEST_CASE("evaluation and rational detection") {
  RatFun L = RatFun::symbol();
  RatFun f = (L * L - RatFun::one()) / (L + RatFun::one());  // reduces to L-1
  CHECK(f.is_rational() == false);
  CHECK(f.num() == P({-1, 1}));
  CHECK(f.eval(Rational(5)) == Rational(4));

  RatFun g = RatFun::from_rational(Rational(7, 3));
  CHECK(g.is_rational());
  CHECK(g.as_rational() == Rational(7, 3));

  RatFun h = RatFun::one() / (L - RatFun::from_int(2));
  CHECK_THROWS_AS(h.eval(Rational(2)), std::domain_error);
  CHECK(h.eval(Rational(3)) == Rational(1));
}

TEST_CASE("printing") {
  RatFun L = RatFun::symbol();
  CHECK(L.to_string() == "L");
  CHECK((L + RatFun::one()).to_string() == "L+1");
  CHECK((RatFun::from_int(2) / (L + RatFun::one())).to_string() == "2/(L+1)");
  CHECK(RatFun::zero().to_string() == "0");
  CHECK(RatFun::from_rational(Rational(-1, 2)).to_string() == "-1/2");
  RatFun q = (L + L) / (L * L + RatFun::from_int(2) * L + RatFun::one());
  CHECK(q.to_string() == "2*L/(L^2+2*L+1)");
}
