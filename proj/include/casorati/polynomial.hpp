#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "casorati/errors.hpp"
#include "casorati/scalars.hpp"

namespace casorati {

/// Univariate polynomial with exact rational coefficients; coefficient i
/// multiplies x^i. Trailing zero coefficients are always trimmed, so the zero
/// polynomial has an empty coefficient list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& v) { return Polynomial({v}); }
  static Polynomial monomial(unsigned k, const Rational& coeff = 1) {
    std::vector<Rational> c(k + 1);
    c[k] = coeff;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }

  template <Field F>
  F evaluate(const F& x) const {
    F acc = field_traits<F>::from_int(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + field_traits<F>::from_rational(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  /// p(x + h), expanded by the binomial theorem.
  Polynomial shifted(const Rational& h) const {
    std::vector<Rational> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      Rational hp = 1;  // h^(i-j), j running down from i
      for (std::size_t j = i + 1; j-- > 0;) {
        out[j] += c_[i] * Rational(binomial(static_cast<unsigned>(i), static_cast<unsigned>(j))) * hp;
        hp *= h;
      }
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  Polynomial& operator*=(const Rational& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Human-readable form, highest power first: "x^2 + x", "1/2*x - 3", "0".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Rational& v = c_[i];
      if (v.is_zero()) continue;
      Rational mag = abs(v);
      if (out.empty()) {
        if (v.sign() < 0) out += "-";
      } else {
        out += v.sign() < 0 ? " - " : " + ";
      }
      bool unit = mag == Rational(1);
      if (i == 0) {
        out += mag.str();
      } else {
        if (!unit) out += mag.str() + "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  /// Parses sums of terms like "3/2*x^2 - x + 1". Whitespace is ignored.
  static Polynomial parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw argument_error("empty polynomial expression");
    Polynomial result;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
      throw argument_error("polynomial '" + std::string(text) + "': " + why + " at offset " + std::to_string(pos));
    };
    while (pos < s.size()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (pos != 0) {
        fail("expected '+' or '-'");
      }
      Rational coeff = 1;
      std::size_t start = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
      bool has_coeff = pos > start;
      if (has_coeff) coeff = Rational::parse(s.substr(start, pos - start));
      unsigned power = 0;
      if (pos < s.size() && s[pos] == '*') {
        if (!has_coeff) fail("dangling '*'");
        ++pos;
        if (pos >= s.size() || s[pos] != 'x') fail("expected 'x' after '*'");
      }
      if (pos < s.size() && s[pos] == 'x') {
        ++pos;
        power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          std::size_t ps = pos;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
          if (pos == ps) fail("expected exponent");
          power = static_cast<unsigned>(std::stoul(s.substr(ps, pos - ps)));
        }
      } else if (!has_coeff) {
        fail("expected a term");
      }
      result += monomial(power, sign < 0 ? -coeff : coeff);
    }
    return result;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// binom(x, k) = x (x-1) ... (x-k+1) / k! as a degree-k polynomial.
inline Polynomial binomial_poly(unsigned k) {
  Polynomial p = Polynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) p = p * Polynomial({Rational(-static_cast<long>(i)), Rational(1)});
  return p * (Rational(1) / Rational(factorial(k)));
}

/// Exact interpolating polynomial through (xs[i], ys[i]) (Newton form).
inline Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw argument_error("interpolate: size mismatch or empty");
  std::vector<Rational> dd = ys;
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational gap = xs[i] - xs[i - level];
      if (gap.is_zero()) throw argument_error("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  Polynomial result;
  Polynomial basis = Polynomial::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    result += basis * dd[i];
    basis = basis * Polynomial({-xs[i], Rational(1)});
  }
  return result;
}

}  // namespace casorati
