#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "casorati/errors.hpp"
#include "casorati/matrix.hpp"
#include "casorati/polynomial.hpp"
#include "casorati/scalars.hpp"

namespace casorati {

enum class TrigPhase { cos, sin };
enum class HypPhase { cosh, sinh };

/// x^k
struct Monomial {
  unsigned k = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Arbitrary rational polynomial.
struct Poly {
  Polynomial p;
  friend bool operator==(const Poly&, const Poly&) = default;
};

/// binom(x, k) a^x, a != 0. a^x uses the principal logarithm of a.
struct BinomExp {
  unsigned k = 0;
  Complex a{1.0, 0.0};
  friend bool operator==(const BinomExp&, const BinomExp&) = default;
};

/// x^k e^{m x}
struct ExpPoly {
  unsigned k = 0;
  Complex m{};
  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;
};

/// x^k e^{m x} cos(w x) or x^k e^{m x} sin(w x)
struct ExpTrig {
  unsigned k = 0;
  Complex m{};
  double omega = 1.0;
  TrigPhase phase = TrigPhase::cos;
  friend bool operator==(const ExpTrig&, const ExpTrig&) = default;
};

/// x^k cosh(m x) or x^k sinh(m x)
struct Hyperbolic {
  unsigned k = 0;
  Complex m{1.0, 0.0};
  HypPhase phase = HypPhase::cosh;
  friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};

struct Interval {
  double lo = -HUGE_VAL;
  double hi = HUGE_VAL;
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(double x) const {
    return (lo_closed ? x >= lo : x > lo) && (hi_closed ? x <= hi : x < hi);
  }
};

/// Real function known only through an evaluator, e.g. ln. Shifting records
/// an offset; there is no exact derivative.
struct Tabulated {
  std::string name;
  std::shared_ptr<const std::function<double(double)>> fn;
  Interval domain;
  double offset = 0.0;

  friend bool operator==(const Tabulated& a, const Tabulated& b) {
    return a.name == b.name && a.fn == b.fn && a.offset == b.offset;
  }
};

using BasisFunction = std::variant<Monomial, Poly, BinomExp, ExpPoly, ExpTrig, Hyperbolic, Tabulated>;

// --- construction ------------------------------------------------------------

inline BasisFunction monomial(unsigned k) { return Monomial{k}; }
inline BasisFunction poly(Polynomial p) { return Poly{std::move(p)}; }
inline BasisFunction binom_exp(unsigned k, Complex a) {
  if (a == Complex{}) throw argument_error("binomial-exponential base a must be nonzero");
  return BinomExp{k, a};
}
inline BasisFunction exp_poly(unsigned k, Complex m) { return ExpPoly{k, m}; }
inline BasisFunction exp_trig(unsigned k, Complex m, double omega, TrigPhase phase) {
  return ExpTrig{k, m, omega, phase};
}
inline BasisFunction hyperbolic(unsigned k, Complex m, HypPhase phase) { return Hyperbolic{k, m, phase}; }
inline BasisFunction tabulated(std::string name, std::function<double(double)> fn, Interval domain) {
  return Tabulated{std::move(name), std::make_shared<const std::function<double(double)>>(std::move(fn)), domain, 0.0};
}

/// Natural logarithm on (0, inf).
inline BasisFunction tabulated_ln() {
  static const BasisFunction ln = tabulated("ln", [](double x) { return std::log(x); }, Interval{0.0, HUGE_VAL});
  return ln;
}

inline bool supports_exact(const BasisFunction& f) {
  return std::holds_alternative<Monomial>(f) || std::holds_alternative<Poly>(f);
}

inline bool is_tabulated(const BasisFunction& f) { return std::holds_alternative<Tabulated>(f); }

namespace detail {

inline std::string fmt_complex(const Complex& z) {
  std::ostringstream os;
  os.precision(17);
  if (z.imag() == 0.0) {
    os << z.real();
  } else {
    os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
  }
  return os.str();
}

inline std::string xpow(unsigned k) {
  if (k == 0) return "";
  if (k == 1) return "x*";
  return "x^" + std::to_string(k) + "*";
}

}  // namespace detail

/// Short text form used in reports, e.g. "x^2", "x*exp(2*x)".
inline std::string describe(const BasisFunction& f) {
  using detail::fmt_complex;
  return std::visit(
      [](const auto& g) -> std::string {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Monomial>) {
          return g.k == 0 ? "1" : (g.k == 1 ? "x" : "x^" + std::to_string(g.k));
        } else if constexpr (std::is_same_v<G, Poly>) {
          return "(" + g.p.str() + ")";
        } else if constexpr (std::is_same_v<G, BinomExp>) {
          return "binom(x," + std::to_string(g.k) + ")*" + fmt_complex(g.a) + "^x";
        } else if constexpr (std::is_same_v<G, ExpPoly>) {
          return detail::xpow(g.k) + "exp(" + fmt_complex(g.m) + "*x)";
        } else if constexpr (std::is_same_v<G, ExpTrig>) {
          std::ostringstream w;
          w.precision(17);
          w << g.omega;
          return detail::xpow(g.k) + "exp(" + fmt_complex(g.m) + "*x)*" + (g.phase == TrigPhase::cos ? "cos(" : "sin(") +
                 w.str() + "*x)";
        } else if constexpr (std::is_same_v<G, Hyperbolic>) {
          return detail::xpow(g.k) + (g.phase == HypPhase::cosh ? "cosh(" : "sinh(") + fmt_complex(g.m) + "*x)";
        } else {
          if (g.offset == 0.0) return g.name + "(x)";
          std::ostringstream os;
          os.precision(17);
          os << g.name << "(x" << (g.offset < 0 ? "-" : "+") << std::abs(g.offset) << ")";
          return os.str();
        }
      },
      f);
}

// --- evaluation --------------------------------------------------------------

template <Field F>
F evaluate(const BasisFunction& f, const F& x) {
  if constexpr (std::is_same_v<F, Rational>) {
    if (const auto* m = std::get_if<Monomial>(&f)) return pow(x, static_cast<long>(m->k));
    if (const auto* p = std::get_if<Poly>(&f)) return p->p.evaluate(x);
    throw unsupported_operation("exact evaluation of " + describe(f) + " is not supported");
  } else {
    Complex v = std::visit(
        [&x](const auto& g) -> Complex {
          using G = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<G, Monomial>) {
            return field_pow(x, static_cast<long>(g.k));
          } else if constexpr (std::is_same_v<G, Poly>) {
            return g.p.evaluate(x);
          } else if constexpr (std::is_same_v<G, BinomExp> && std::is_same_v<F, Complex>) {
            return binomial_value(x, g.k) * std::exp(x * std::log(g.a));
          } else if constexpr (std::is_same_v<G, ExpPoly> && std::is_same_v<F, Complex>) {
            return field_pow(x, static_cast<long>(g.k)) * std::exp(g.m * x);
          } else if constexpr (std::is_same_v<G, ExpTrig> && std::is_same_v<F, Complex>) {
            Complex t = g.phase == TrigPhase::cos ? std::cos(g.omega * x) : std::sin(g.omega * x);
            return field_pow(x, static_cast<long>(g.k)) * std::exp(g.m * x) * t;
          } else if constexpr (std::is_same_v<G, Hyperbolic> && std::is_same_v<F, Complex>) {
            Complex t = g.phase == HypPhase::cosh ? std::cosh(g.m * x) : std::sinh(g.m * x);
            return field_pow(x, static_cast<long>(g.k)) * t;
          } else {
            if (x.imag() != 0.0) throw domain_error(g.name + ": complex argument");
            double at = x.real() + g.offset;
            if (!g.domain.contains(at)) throw domain_error(g.name + ": argument " + std::to_string(at) + " outside domain");
            return {(*g.fn)(at), 0.0};
          }
        },
        f);
    return checked(v, "function value");
  }
}

// --- linear combinations -----------------------------------------------------

template <Field F>
struct Term {
  F coeff;
  BasisFunction fn;
};

/// Finite sum of coefficient * BasisFunction. Terms with an identical basis
/// function are merged; exactly-zero coefficients are dropped.
template <Field F>
class Combination {
 public:
  Combination() = default;
  Combination(BasisFunction f) { add(field_traits<F>::from_int(1), std::move(f)); }  // NOLINT
  Combination(F c, BasisFunction f) { add(std::move(c), std::move(f)); }

  const std::vector<Term<F>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const F& c, const BasisFunction& f) {
    if (field_traits<F>::is_zero(c)) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->fn == f) {
        it->coeff += c;
        if (field_traits<F>::is_zero(it->coeff)) terms_.erase(it);
        return;
      }
    }
    terms_.push_back({c, f});
  }

  Combination& operator+=(const Combination& o) {
    for (const auto& t : o.terms_) add(t.coeff, t.fn);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& t : o.terms_) add(-t.coeff, t.fn);
    return *this;
  }
  Combination& operator*=(const F& s) {
    if (field_traits<F>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.coeff *= s;
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const F& s, Combination a) { return a *= s; }

  F evaluate(const F& x) const {
    F acc = field_traits<F>::from_int(0);
    for (const auto& t : terms_) acc += t.coeff * casorati::evaluate(t.fn, x);
    return acc;
  }

  bool has_tabulated() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term<F>& t) { return is_tabulated(t.fn); });
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) out += " + ";
      const auto& t = terms_[i];
      if (t.coeff != field_traits<F>::from_int(1)) {
        if constexpr (std::is_same_v<F, Rational>) {
          out += t.coeff.str() + "*";
        } else {
          out += detail::fmt_complex(t.coeff) + "*";
        }
      }
      out += describe(t.fn);
    }
    return out;
  }

 private:
  std::vector<Term<F>> terms_;
};

namespace detail {

template <Field F>
F cplx(const Complex& z) {
  if constexpr (std::is_same_v<F, Complex>) {
    return z;
  } else {
    throw unsupported_operation("complex coefficient in exact field");
  }
}

template <Field F>
F from_big(const BigInt& v) {
  return field_traits<F>::from_rational(Rational(v));
}

/// sum_j binom(k, j) h^{k-j} * make(j), scaled by `outer`.
template <Field F, class Make>
void binomial_expand(Combination<F>& out, unsigned k, const F& h, const F& outer, Make make) {
  F hp = field_traits<F>::from_int(1);
  for (unsigned j = k + 1; j-- > 0;) {
    F c = outer * from_big<F>(binomial(k, j)) * hp;
    make(out, j, c);
    hp *= h;
  }
}

}  // namespace detail

// --- calculus ----------------------------------------------------------------

/// Exact derivative, expressed in the same kind of basis function.
template <Field F>
Combination<F> derivative(const BasisFunction& f) {
  if (is_tabulated(f)) throw unsupported_operation("tabulated function " + describe(f) + " has no exact derivative");
  if (std::is_same_v<F, Rational> && !supports_exact(f))
    throw unsupported_operation("exact derivative of " + describe(f) + " is not supported");
  using detail::cplx;
  Combination<F> out;
  auto kf = [](unsigned k) { return field_traits<F>::from_int(static_cast<long>(k)); };
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Monomial>) {
          if (g.k > 0) out.add(kf(g.k), Monomial{g.k - 1});
        } else if constexpr (std::is_same_v<G, Poly>) {
          Polynomial d = g.p.derivative();
          if (!d.is_zero()) out.add(field_traits<F>::from_int(1), Poly{std::move(d)});
        } else if constexpr (std::is_same_v<G, BinomExp> && std::is_same_v<F, Complex>) {
          // D binom(x,k) = sum_{j=1}^{k} (-1)^{j+1}/j binom(x,k-j)
          out.add(cplx<F>(std::log(g.a)), g);
          for (unsigned j = 1; j <= g.k; ++j) {
            double c = (j % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(j);
            out.add(cplx<F>({c, 0.0}), BinomExp{g.k - j, g.a});
          }
        } else if constexpr (std::is_same_v<G, ExpPoly> && std::is_same_v<F, Complex>) {
          if (g.k > 0) out.add(kf(g.k), ExpPoly{g.k - 1, g.m});
          out.add(cplx<F>(g.m), g);
        } else if constexpr (std::is_same_v<G, ExpTrig> && std::is_same_v<F, Complex>) {
          TrigPhase other = g.phase == TrigPhase::cos ? TrigPhase::sin : TrigPhase::cos;
          double sgn = g.phase == TrigPhase::cos ? -1.0 : 1.0;
          if (g.k > 0) out.add(kf(g.k), ExpTrig{g.k - 1, g.m, g.omega, g.phase});
          out.add(cplx<F>(g.m), g);
          out.add(cplx<F>({sgn * g.omega, 0.0}), ExpTrig{g.k, g.m, g.omega, other});
        } else if constexpr (std::is_same_v<G, Hyperbolic> && std::is_same_v<F, Complex>) {
          HypPhase other = g.phase == HypPhase::cosh ? HypPhase::sinh : HypPhase::cosh;
          if (g.k > 0) out.add(kf(g.k), Hyperbolic{g.k - 1, g.m, g.phase});
          out.add(cplx<F>(g.m), Hyperbolic{g.k, g.m, other});
        }
      },
      f);
  return out;
}

template <Field F>
Combination<F> derivative(const Combination<F>& c) {
  Combination<F> out;
  for (const auto& t : c.terms()) out += t.coeff * derivative<F>(t.fn);
  return out;
}

/// f(x + h), expanded in the function's own kind where a closed form exists.
template <Field F>
Combination<F> shift(const BasisFunction& f, const F& h) {
  if (std::is_same_v<F, Rational> && !supports_exact(f))
    throw unsupported_operation("exact shift of " + describe(f) + " is not supported");
  using detail::cplx;
  const F one = field_traits<F>::from_int(1);
  Combination<F> out;
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Monomial>) {
          detail::binomial_expand<F>(out, g.k, h, one, [](Combination<F>& o, unsigned j, const F& c) {
            o.add(c, Monomial{j});
          });
        } else if constexpr (std::is_same_v<G, Poly>) {
          if constexpr (std::is_same_v<F, Rational>) {
            out.add(one, Poly{g.p.shifted(h)});
          } else {
            const auto& cs = g.p.coefficients();
            for (std::size_t i = 0; i < cs.size(); ++i) {
              F ci = field_traits<F>::from_rational(cs[i]);
              detail::binomial_expand<F>(out, static_cast<unsigned>(i), h, ci,
                                         [](Combination<F>& o, unsigned j, const F& c) { o.add(c, Monomial{j}); });
            }
          }
        } else if constexpr (std::is_same_v<G, BinomExp> && std::is_same_v<F, Complex>) {
          // binom(x+h, k) = sum_j binom(h, j) binom(x, k-j)
          F ah = cplx<F>(std::exp(h * std::log(g.a)));
          for (unsigned j = 0; j <= g.k; ++j) out.add(ah * binomial_value(h, j), BinomExp{g.k - j, g.a});
        } else if constexpr (std::is_same_v<G, ExpPoly> && std::is_same_v<F, Complex>) {
          F emh = cplx<F>(std::exp(g.m * h));
          detail::binomial_expand<F>(out, g.k, h, emh, [&g](Combination<F>& o, unsigned j, const F& c) {
            o.add(c, ExpPoly{j, g.m});
          });
        } else if constexpr (std::is_same_v<G, ExpTrig> && std::is_same_v<F, Complex>) {
          Complex hc = h;
          Complex emh = std::exp(g.m * hc);
          Complex co = std::cos(g.omega * hc), si = std::sin(g.omega * hc);
          // cos(w(x+h)) = cos(wx)cos(wh) - sin(wx)sin(wh); sin(w(x+h)) = sin(wx)cos(wh) + cos(wx)sin(wh)
          Complex same = co;
          Complex cross = g.phase == TrigPhase::cos ? -si : si;
          TrigPhase other = g.phase == TrigPhase::cos ? TrigPhase::sin : TrigPhase::cos;
          detail::binomial_expand<F>(out, g.k, h, cplx<F>(emh), [&](Combination<F>& o, unsigned j, const F& c) {
            o.add(c * cplx<F>(same), ExpTrig{j, g.m, g.omega, g.phase});
            o.add(c * cplx<F>(cross), ExpTrig{j, g.m, g.omega, other});
          });
        } else if constexpr (std::is_same_v<G, Hyperbolic> && std::is_same_v<F, Complex>) {
          Complex hc = h;
          Complex ch = std::cosh(g.m * hc), sh = std::sinh(g.m * hc);
          HypPhase other = g.phase == HypPhase::cosh ? HypPhase::sinh : HypPhase::cosh;
          detail::binomial_expand<F>(out, g.k, h, one, [&](Combination<F>& o, unsigned j, const F& c) {
            o.add(c * cplx<F>(ch), Hyperbolic{j, g.m, g.phase});
            o.add(c * cplx<F>(sh), Hyperbolic{j, g.m, other});
          });
        } else if constexpr (std::is_same_v<G, Tabulated> && std::is_same_v<F, Complex>) {
          const Complex& hc = h;
          if (hc.imag() != 0.0) throw domain_error(g.name + ": complex shift");
          Tabulated moved = g;
          moved.offset += hc.real();
          out.add(one, moved);
        }
      },
      f);
  return out;
}

template <Field F>
Combination<F> shift(const Combination<F>& c, const F& h) {
  Combination<F> out;
  for (const auto& t : c.terms()) out += t.coeff * shift<F>(t.fn, h);
  return out;
}

/// Delta_h^n f = (E^h - I)^n f, applied term-wise in closed form.
template <Field F>
Combination<F> forward_difference(const Combination<F>& c, const F& h, unsigned n) {
  Combination<F> cur = c;
  for (unsigned i = 0; i < n; ++i) cur = shift(cur, h) - cur;
  return cur;
}

/// Rewrites exp-trig and hyperbolic functions over complex exponentials
/// x^k e^{(m +- i w) x} / x^k e^{+-m x}; other kinds are returned unchanged.
inline Combination<Complex> as_exponential_polynomials(const BasisFunction& f) {
  Combination<Complex> out;
  const Complex half{0.5, 0.0};
  if (const auto* t = std::get_if<ExpTrig>(&f)) {
    Complex mp = t->m + Complex{0.0, t->omega};
    Complex mm = t->m - Complex{0.0, t->omega};
    if (t->phase == TrigPhase::cos) {
      out.add(half, ExpPoly{t->k, mp});
      out.add(half, ExpPoly{t->k, mm});
    } else {
      out.add(Complex{0.0, -0.5}, ExpPoly{t->k, mp});
      out.add(Complex{0.0, 0.5}, ExpPoly{t->k, mm});
    }
  } else if (const auto* hy = std::get_if<Hyperbolic>(&f)) {
    out.add(half, ExpPoly{hy->k, hy->m});
    out.add(hy->phase == HypPhase::cosh ? half : -half, ExpPoly{hy->k, -hy->m});
  } else {
    out.add(Complex{1.0, 0.0}, f);
  }
  return out;
}

/// The polynomial a combination of Monomial/Poly terms equals.
inline Polynomial to_polynomial(const Combination<Rational>& c) {
  Polynomial p;
  for (const auto& t : c.terms()) {
    if (const auto* m = std::get_if<Monomial>(&t.fn)) {
      p += Polynomial::monomial(m->k, t.coeff);
    } else if (const auto* q = std::get_if<Poly>(&t.fn)) {
      p += q->p * t.coeff;
    } else {
      throw unsupported_operation("not a polynomial: " + describe(t.fn));
    }
  }
  return p;
}

// --- families ----------------------------------------------------------------

/// Ordered, nonempty list of functions over one scalar field.
template <Field F>
class FunctionFamily {
 public:
  FunctionFamily(std::vector<Combination<F>> members) : members_(std::move(members)) { validate(); }  // NOLINT
  FunctionFamily(const std::vector<BasisFunction>& fns) {  // NOLINT
    for (const auto& f : fns) members_.emplace_back(f);
    validate();
  }
  FunctionFamily(std::initializer_list<BasisFunction> fns) : FunctionFamily(std::vector<BasisFunction>(fns)) {}

  static constexpr std::string_view field_tag() { return field_traits<F>::name; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Combination<F>>& members() const { return members_; }
  const Combination<F>& operator[](std::size_t i) const { return members_[i]; }

  bool has_tabulated() const {
    return std::any_of(members_.begin(), members_.end(), [](const auto& m) { return m.has_tabulated(); });
  }

 private:
  void validate() const {
    if (members_.empty()) throw argument_error("function family must be nonempty");
    if constexpr (std::is_same_v<F, Rational>) {
      for (const auto& m : members_)
        for (const auto& t : m.terms())
          if (!supports_exact(t.fn))
            throw argument_error(describe(t.fn) + " cannot be used in an exact-field family");
    }
  }

  std::vector<Combination<F>> members_;
};

/// Row i holds the coefficients of member i in the standard basis 1, x, x^2, ...
/// Columns run to the highest degree present.
inline Matrix<Rational> polynomial_coeff_matrix(const FunctionFamily<Rational>& family) {
  std::vector<Polynomial> ps;
  int deg = 0;
  for (const auto& m : family.members()) {
    ps.push_back(to_polynomial(m));
    deg = std::max(deg, ps.back().degree());
  }
  Matrix<Rational> a(ps.size(), static_cast<std::size_t>(deg) + 1);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = ps[i].coeff(j);
  return a;
}

/// {1, x, ..., x^n}
template <Field F>
FunctionFamily<F> power_family(unsigned n) {
  std::vector<BasisFunction> fs;
  for (unsigned k = 0; k <= n; ++k) fs.push_back(Monomial{k});
  return FunctionFamily<F>(fs);
}

/// {binom(x, k) a^x : k = 0..n}
inline FunctionFamily<Complex> binomial_exponential_family(unsigned n, Complex a) {
  std::vector<BasisFunction> fs;
  for (unsigned k = 0; k <= n; ++k) fs.push_back(binom_exp(k, a));
  return FunctionFamily<Complex>(fs);
}

/// {x^k e^{mx} cos(wx), x^k e^{mx} sin(wx) : k = 0..n}, cos/sin interleaved.
inline FunctionFamily<Complex> exp_trig_family(unsigned n, Complex m, double omega) {
  std::vector<BasisFunction> fs;
  for (unsigned k = 0; k <= n; ++k) {
    fs.push_back(ExpTrig{k, m, omega, TrigPhase::cos});
    fs.push_back(ExpTrig{k, m, omega, TrigPhase::sin});
  }
  return FunctionFamily<Complex>(fs);
}

/// {x^k cosh(mx), x^k sinh(mx) : k = 0..n}
inline FunctionFamily<Complex> hyperbolic_family(unsigned n, Complex m) {
  std::vector<BasisFunction> fs;
  for (unsigned k = 0; k <= n; ++k) {
    fs.push_back(Hyperbolic{k, m, HypPhase::cosh});
    fs.push_back(Hyperbolic{k, m, HypPhase::sinh});
  }
  return FunctionFamily<Complex>(fs);
}

/// One block {x^k e^{m x} : k = 0..n} of a generalized exponential polynomial space.
struct ExpBlock {
  Complex m;
  unsigned n = 0;
};

inline FunctionFamily<Complex> exp_poly_family(const std::vector<ExpBlock>& blocks) {
  std::vector<BasisFunction> fs;
  for (const auto& b : blocks)
    for (unsigned k = 0; k <= b.n; ++k) fs.push_back(ExpPoly{k, b.m});
  return FunctionFamily<Complex>(fs);
}

}  // namespace casorati
