#include <catch_amalgamated.hpp>

#include <algorithm>

#include "casorati/casoratian.hpp"
#include "casorati/functions.hpp"
#include "casorati/random.hpp"
#include "casorati/theory.hpp"
#include "oracles.hpp"

using namespace casorati;

namespace {

Complex at(double x) { return {x, 0.0}; }

std::vector<BasisFunction> float_zoo() {
  return {
      monomial(3),
      poly(Polynomial::parse("1/2*x^2 - 3*x + 1")),
      binom_exp(2, {2.0, 0.0}),
      binom_exp(3, {0.5, 0.25}),
      exp_poly(2, {0.3, -0.7}),
      exp_trig(1, {0.2, 0.0}, 1.5, TrigPhase::cos),
      exp_trig(2, {-0.1, 0.0}, 0.7, TrigPhase::sin),
      hyperbolic(1, {0.8, 0.0}, HypPhase::cosh),
      hyperbolic(2, {1.1, 0.0}, HypPhase::sinh),
  };
}

}  // namespace

TEST_CASE("evaluate examples") {
  CHECK(evaluate(monomial(2), Rational(3)) == Rational(9));
  CHECK(evaluate(binom_exp(1, {2.0, 0.0}), at(0.0)) == Complex{});
  CHECK(evaluate(exp_trig(0, {}, 1.0, TrigPhase::cos), at(0.0)) == Complex{1.0, 0.0});
  CHECK(std::abs(evaluate(tabulated_ln(), at(std::exp(2.0))) - at(2.0)) < 1e-15);
  CHECK_THROWS_AS(evaluate(tabulated_ln(), at(0.0)), domain_error);
  CHECK_THROWS_AS(evaluate(tabulated_ln(), at(-1.0)), domain_error);
  CHECK_THROWS_AS(evaluate(exp_poly(0, {1.0, 0.0}), Rational(1)), unsupported_operation);
}

TEST_CASE("invalid members") {
  CHECK_THROWS_AS(binom_exp(1, {}), argument_error);
  CHECK_THROWS_AS(FunctionFamily<Rational>({exp_poly(0, {1.0, 0.0})}), argument_error);
  CHECK_THROWS_AS(FunctionFamily<Complex>(std::vector<BasisFunction>{}), argument_error);
}

TEST_CASE("derivative examples") {
  auto d3 = derivative<Rational>(monomial(3));
  REQUIRE(d3.terms().size() == 1);
  CHECK(d3.terms()[0].coeff == Rational(3));
  CHECK(d3.terms()[0].fn == monomial(2));

  Complex m{0.4, 1.3};
  auto de = derivative<Complex>(exp_poly(0, m));
  REQUIRE(de.terms().size() == 1);
  CHECK(de.terms()[0].coeff == m);

  Complex mh{0.9, 0.0};
  auto dh = derivative<Complex>(hyperbolic(1, mh, HypPhase::cosh));
  Combination<Complex> expect(hyperbolic(0, mh, HypPhase::cosh));
  expect += Combination<Complex>(mh, hyperbolic(1, mh, HypPhase::sinh));
  for (double x : {-1.0, 0.3, 2.0}) CHECK(oracle::close(dh.evaluate(at(x)), expect.evaluate(at(x)), 1e-14));

  CHECK_THROWS_AS(derivative<Complex>(tabulated_ln()), unsupported_operation);
}

TEST_CASE("binomial derivative is not the lowered index") {
  // D binom(x, 2) = x - 1/2, whereas binom(x, 1) = x
  auto d = derivative<Complex>(binom_exp(2, {1.0, 0.0}));
  CHECK(std::abs(d.evaluate(at(3.0)) - at(2.5)) < 1e-14);
}

TEST_CASE("derivative matches central differences at second order") {
  auto hs = dyadic_steps(3, 10);
  for (const auto& f : float_zoo()) {
    auto d = derivative<Complex>(f);
    for (double x : {0.37, 1.6}) {
      Complex exact = d.evaluate(at(x));
      std::vector<double> errs;
      for (double h : hs) {
        Complex cd = (evaluate(f, at(x + h)) - evaluate(f, at(x - h))) / (2.0 * h);
        errs.push_back(std::abs(cd - exact));
      }
      INFO(describe(f) << " at " << x);
      // exact for polynomials of degree <= 2, leaving only rounding to fit
      if (*std::max_element(errs.begin(), errs.end()) < 1e-10 * std::max(1.0, std::abs(exact)))
        continue;
      CHECK(fitted_order(hs, errs) >= 1.9);
    }
  }
}

TEST_CASE("derivative is linear") {
  SampleSource src(default_seed());
  auto zoo = float_zoo();
  for (int trial = 0; trial < 20; ++trial) {
    const auto& f = zoo[src.integer(0, zoo.size() - 1)];
    const auto& g = zoo[src.integer(0, zoo.size() - 1)];
    Complex a{src.real(-2, 2), src.real(-2, 2)}, b{src.real(-2, 2), 0.0};
    Combination<Complex> comb = a * Combination<Complex>(f) + b * Combination<Complex>(g);
    auto lhs = derivative(comb);
    auto rhs = a * derivative<Complex>(f) + b * derivative<Complex>(g);
    Complex x = at(src.real(-1.5, 1.5));
    CHECK(oracle::close(lhs.evaluate(x), rhs.evaluate(x), 1e-12));
  }
}

TEST_CASE("shift examples") {
  auto s = shift<Rational>(monomial(2), Rational(1));
  CHECK(to_polynomial(s) == Polynomial::parse("x^2 + 2*x + 1"));

  Complex m{0.7, -0.2};
  auto se = shift<Complex>(exp_poly(0, m), at(1.0));
  REQUIRE(se.terms().size() == 1);
  CHECK(oracle::close(se.terms()[0].coeff, std::exp(m), 1e-15));

  Complex a{2.0, 0.0};
  auto sb = shift<Complex>(binom_exp(1, a), at(1.0));
  Combination<Complex> expect = a * (Combination<Complex>(binom_exp(1, a)) + Combination<Complex>(binom_exp(0, a)));
  SampleSource src(default_seed());
  for (int i = 0; i < 5; ++i) {
    Complex x = at(src.real(-3, 3));
    CHECK(oracle::close(sb.evaluate(x), expect.evaluate(x), 1e-13));
    CHECK(oracle::close(sb.evaluate(x), evaluate(binom_exp(1, a), x + 1.0), 1e-13));
  }
}

TEST_CASE("shift is a homomorphism and shift by zero is the identity") {
  // relative away from zero, absolute near a root, where summation order dominates
  auto near = [](Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); };
  SampleSource src(default_seed() + 5);
  for (const auto& f : float_zoo()) {
    Complex h1 = at(src.real(-1, 1)), h2 = at(src.real(-1, 1));
    auto twice = shift(shift<Complex>(f, h1), h2);
    auto once = shift<Complex>(f, h1 + h2);
    auto zero = shift<Complex>(f, at(0.0));
    for (int i = 0; i < 10; ++i) {
      Complex x = at(src.real(-2, 2));
      INFO(describe(f));
      CHECK(near(twice.evaluate(x), once.evaluate(x), 1e-12));
      CHECK(near(once.evaluate(x), evaluate(f, x + h1 + h2), 1e-12));
      CHECK(near(zero.evaluate(x), evaluate(f, x), 1e-14));
    }
  }
  // exact path: equality, not closeness
  for (int i = 0; i < 10; ++i) {
    Rational h1 = src.rational(), h2 = src.rational(), x = src.rational();
    auto p = poly(Polynomial({src.rational(), src.rational(), src.rational(), src.rational()}));
    CHECK(shift(shift<Rational>(p, h1), h2).evaluate(x) == shift<Rational>(p, h1 + h2).evaluate(x));
    CHECK(shift<Rational>(monomial(4), Rational(0)).evaluate(x) == pow(x, 4));
  }
}

TEST_CASE("tabulated shift moves the evaluator") {
  auto s = shift<Complex>(tabulated_ln(), at(2.0));
  CHECK(oracle::close(s.evaluate(at(1.0)), at(std::log(3.0)), 1e-15));
  CHECK_THROWS_AS(shift<Rational>(tabulated_ln(), Rational(1)), unsupported_operation);
}

TEST_CASE("polynomial coefficient matrix") {
  FunctionFamily<Rational> std3{monomial(0), monomial(1), monomial(2)};
  CHECK(polynomial_coeff_matrix(std3) == Matrix<Rational>::identity(3));
  FunctionFamily<Rational> b{poly(Polynomial::parse("1 + x")), monomial(1)};
  CHECK(polynomial_coeff_matrix(b) == Matrix<Rational>{{1, 1}, {0, 1}});
  FunctionFamily<Rational> rev{monomial(2), monomial(1), monomial(0)};
  CHECK(polynomial_coeff_matrix(rev) == Matrix<Rational>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("exp-trig and hyperbolic rewritten as exponential polynomials") {
  auto fam = exp_trig_family(2, {0.3, 0.0}, 1.2);
  auto hyp = hyperbolic_family(1, {0.6, 0.0});
  for (const auto* f : {&fam, &hyp}) {
    std::vector<Combination<Complex>> rewritten;
    for (const auto& m : f->members()) rewritten.push_back(as_exponential_polynomials(m.terms()[0].fn));
    FunctionFamily<Complex> g(rewritten);
    for (double x : {-1.0, 0.0, 0.5}) {
      CHECK(oracle::close(g[0].evaluate(at(x)), (*f)[0].evaluate(at(x)), 1e-14));
      CHECK(oracle::close(casoratian(g, at(x)), casoratian(*f, at(x)), 1e-10));
      CHECK(oracle::close(wronskian(g, at(x)), wronskian(*f, at(x)), 1e-10));
    }
  }
}
