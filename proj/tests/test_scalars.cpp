#include <catch_amalgamated.hpp>

#include "casorati/random.hpp"
#include "casorati/scalars.hpp"
#include "oracles.hpp"

using namespace casorati;

TEST_CASE("superfactorial small values") {
  CHECK(superfactorial(0) == Rational(1));
  CHECK(superfactorial(3) == Rational(12));
  CHECK(superfactorial(4) == Rational(288));
  CHECK(superfactorial(5) == Rational(34560));
}

TEST_CASE("superfactorial recurrence and big values") {
  for (unsigned n = 1; n <= 20; ++n) CHECK(superfactorial(n) == superfactorial(n - 1) * Rational(factorial(n)));
  for (unsigned n = 0; n <= 12; ++n) CHECK(superfactorial(n) == oracle::direct_superfactorial(n));
  // past 64 bits
  CHECK(superfactorial(12).str() == "127313963299399416749559771247411200000000000");
}

TEST_CASE("stirling_sum") {
  CHECK(stirling_sum(2, 1) == Rational(0));
  CHECK(stirling_sum(2, 2) == Rational(1));
  // S(5, 3) = 25
  Rational direct;
  for (int r = 0; r <= 3; ++r) {
    Rational term(BigInt(r * r * r * r * r), factorial(r) * factorial(3 - r));
    if ((3 - r) % 2) term = -term;
    direct += term;
  }
  CHECK(stirling_sum(3, 5) == direct);
  CHECK(direct == Rational(25));
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned k = 0; k < n; ++k) CHECK(stirling_sum(n, k).is_zero());
    CHECK(stirling_sum(n, n) == Rational(1));
  }
}

TEST_CASE("falling factorial and binomial values") {
  CHECK(falling_factorial(Rational(4), 0) == Rational(1));
  CHECK(falling_factorial(Rational(4), 2) == Rational(12));
  CHECK(falling_factorial(Rational(1, 2), 2) == Rational(-1, 4));
  CHECK(binomial_value(Rational(5), 3) == Rational(10));
  CHECK(std::abs(binomial_value(Complex{5.0, 0.0}, 3) - Complex{10.0, 0.0}) < 1e-14);
}

TEST_CASE("rational normalization") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational::parse("10/-4") == Rational(-5, 2));
  CHECK(Rational::parse("010/03") == Rational(10, 3));
  CHECK_THROWS_AS(Rational(1, 0), numeric_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), numeric_error);
  CHECK_THROWS_AS(Rational::parse("1/x"), argument_error);
}

TEST_CASE("rational field axioms on random fractions") {
  SampleSource src(default_seed());
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = src.rational(), b = src.rational(), c = src.rational();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.str()) == a);
    CHECK(a.den() > 0);
    CHECK(gcd(a.num(), a.den()) == 1);
  }
}

TEST_CASE("non-finite complex values are errors") {
  CHECK_THROWS_AS(checked(Complex{std::nan(""), 0.0}), numeric_error);
  CHECK_THROWS_AS(checked(HUGE_VAL), numeric_error);
  CHECK(checked(Complex{1.0, 2.0}) == Complex{1.0, 2.0});
}

TEST_CASE("seed comes from the environment when numeric") {
  ::setenv("CASORATI_SEED", "77", 1);
  CHECK(default_seed() == 77u);
  ::setenv("CASORATI_SEED", "seven", 1);
  CHECK(default_seed() == kDefaultSeed);
  ::unsetenv("CASORATI_SEED");
  CHECK(default_seed() == kDefaultSeed);
}
