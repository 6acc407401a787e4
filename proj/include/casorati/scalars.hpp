#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "casorati/errors.hpp"
#include "casorati/rational.hpp"

namespace casorati {

using Complex = std::complex<double>;

inline bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Returns z, or throws numeric_error if either component is NaN/inf.
inline Complex checked(const Complex& z, const char* what = "complex value") {
  if (!is_finite(z)) throw numeric_error(std::string("non-finite ") + what);
  return z;
}

inline double checked(double v, const char* what = "value") {
  if (!std::isfinite(v)) throw numeric_error(std::string("non-finite ") + what);
  return v;
}

// --- scalar fields -----------------------------------------------------------

template <class T>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "exact";
  static Rational from_rational(const Rational& r) { return r; }
  static Rational from_int(long v) { return Rational(v); }
  static double magnitude(const Rational& r) { return std::abs(r.to_double()); }
  static bool is_zero(const Rational& r) { return r.is_zero(); }
};

template <>
struct field_traits<Complex> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "float";
  static Complex from_rational(const Rational& r) { return {r.to_double(), 0.0}; }
  static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static double magnitude(const Complex& z) { return std::abs(z); }
  static bool is_zero(const Complex& z) { return z == Complex{}; }
};

/// The two scalar fields every determinant is computed over.
template <class T>
concept Field = std::same_as<T, Rational> || std::same_as<T, Complex>;

/// Real or complex double, for the floating-point kernels.
template <class T>
concept FloatScalar = std::same_as<T, double> || std::same_as<T, long double> || std::same_as<T, Complex>;

template <Field F>
F field_pow(const F& base, long e) {
  if constexpr (std::same_as<F, Rational>) {
    return pow(base, e);
  } else {
    F r{1.0, 0.0};
    F b = e < 0 ? F{1.0, 0.0} / base : base;
    for (long k = e < 0 ? -e : e; k > 0; k >>= 1) {
      if (k & 1) r *= b;
      b *= b;
    }
    return r;
  }
}

// --- combinatorics -----------------------------------------------------------

inline BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// sf(n) = 0! 1! ... n!
inline Rational superfactorial(unsigned n) {
  BigInt acc = 1;
  BigInt fact = 1;
  for (unsigned k = 1; k <= n; ++k) {
    fact *= k;
    acc *= fact;
  }
  return Rational(acc);
}

/// F(n, k) = sum_{r=0}^{n} (-1)^{n-r} r^k / (r! (n-r)!).
/// This is the Stirling number of the second kind S(k, n): 0 for k < n, 1 for k = n.
inline Rational stirling_sum(unsigned n, unsigned k) {
  Rational sum;
  for (unsigned r = 0; r <= n; ++r) {
    BigInt rk;
    mpz_ui_pow_ui(rk.get_mpz_t(), r, k);
    Rational term(rk, factorial(r) * factorial(n - r));
    if ((n - r) % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

/// (x)_r = x (x-1) ... (x-r+1); 1 when r = 0.
template <Field F>
F falling_factorial(const F& x, unsigned r) {
  F acc = field_traits<F>::from_int(1);
  for (unsigned i = 0; i < r; ++i) acc *= x - field_traits<F>::from_int(static_cast<long>(i));
  return acc;
}

/// Generalized binomial coefficient binom(x, k) = (x)_k / k!.
template <Field F>
F binomial_value(const F& x, unsigned k) {
  return falling_factorial(x, k) / field_traits<F>::from_rational(Rational(factorial(k)));
}

}  // namespace casorati
