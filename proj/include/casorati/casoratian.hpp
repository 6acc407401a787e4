#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "casorati/determinants.hpp"
#include "casorati/errors.hpp"
#include "casorati/functions.hpp"
#include "casorati/matrix.hpp"
#include "casorati/scalars.hpp"

namespace casorati {

/// Entry (i, j) is the i-th derivative of member j at x.
template <Field F>
Matrix<F> wronskian_matrix(const FunctionFamily<F>& family, const F& x) {
  const std::size_t n = family.size();
  Matrix<F> w(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Combination<F> d = family[j];
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) d = derivative(d);
      w(i, j) = d.evaluate(x);
    }
  }
  return w;
}

/// Entry (i, j) is member j at x + i h.
template <Field F>
Matrix<F> casoratian_matrix(const FunctionFamily<F>& family, const F& x, const F& h = field_traits<F>::from_int(1)) {
  const std::size_t n = family.size();
  Matrix<F> c(n, n);
  F xi = x;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c(i, j) = family[j].evaluate(xi);
    xi += h;
  }
  return c;
}

template <Field F>
F wronskian(const FunctionFamily<F>& family, const F& x) {
  return determinant(wronskian_matrix(family, x));
}

template <Field F>
F casoratian(const FunctionFamily<F>& family, const F& x, const F& h = field_traits<F>::from_int(1)) {
  return determinant(casoratian_matrix(family, x, h));
}

/// Delta^k f(x) = sum_r binom(k, r) (-1)^{k-r} f(x + r), from samples
/// values[r] = f(x + r).
template <Field F>
F forward_difference_value(std::span<const F> values, unsigned k) {
  F acc = field_traits<F>::from_int(0);
  for (unsigned r = 0; r <= k; ++r) {
    F term = field_traits<F>::from_rational(Rational(binomial(k, r))) * values[r];
    if ((k - r) % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

/// Determinant of the matrix with rows Delta^i f_j(x), i = 0..n-1.
template <Field F>
F casoratian_delta_form(const FunctionFamily<F>& family, const F& x) {
  const std::size_t n = family.size();
  Matrix<F> d(n, n);
  std::vector<F> samples(n);
  for (std::size_t j = 0; j < n; ++j) {
    F xi = x;
    for (std::size_t r = 0; r < n; ++r) {
      samples[r] = family[j].evaluate(xi);
      xi += field_traits<F>::from_int(1);
    }
    for (std::size_t i = 0; i < n; ++i) d(i, j) = forward_difference_value<F>(samples, static_cast<unsigned>(i));
  }
  return determinant(d);
}

enum class ScaledRoute {
  automatic,           ///< difference quotients unless a member is tabulated
  difference_quotient, ///< rows (Delta_h^i f_j)(x) / h^i, closed-form shifts
  direct,              ///< det of the h-step Casorati matrix over h^{n(n-1)/2}
};

/// C_n^h(x) / h^{n(n-1)/2}. Subtracting earlier rows from later ones turns
/// the h-step Casorati matrix into rows Delta_h^i f_j(x) without changing the
/// determinant, and dividing row i by h^i spreads the power of h; the
/// difference-quotient route evaluates exactly that matrix, which stays well
/// conditioned as h -> 0.
template <Field F>
F scaled_casoratian(const FunctionFamily<F>& family, const F& x, const F& h,
                    ScaledRoute route = ScaledRoute::automatic) {
  if (field_traits<F>::is_zero(h)) throw argument_error("scaled_casoratian: step h must be nonzero");
  const std::size_t n = family.size();
  if (route == ScaledRoute::automatic)
    route = family.has_tabulated() ? ScaledRoute::direct : ScaledRoute::difference_quotient;
  if (route == ScaledRoute::direct) {
    long e = static_cast<long>(n * (n - 1) / 2);
    return casoratian(family, x, h) / field_pow(h, e);
  }
  Matrix<F> q(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Combination<F> cur = family[j];
    F hp = field_traits<F>::from_int(1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) {
        cur = shift(cur, h) - cur;
        hp *= h;
      }
      q(i, j) = cur.evaluate(x) / hp;
    }
  }
  return determinant(q);
}

/// Delta_h^n f(x) / h^n with Delta_h applied in closed form.
template <Field F>
F difference_quotient(const Combination<F>& f, const F& x, const F& h, unsigned n) {
  if (field_traits<F>::is_zero(h)) throw argument_error("difference_quotient: step h must be nonzero");
  return forward_difference(f, h, n).evaluate(x) / field_pow(h, static_cast<long>(n));
}

/// Product of the Euclidean row norms: an upper bound for |det|.
template <Field F>
double hadamard_bound(const Matrix<F>& m) {
  double bound = 1.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      double v = field_traits<F>::magnitude(m(i, j));
      s += v * v;
    }
    bound *= std::sqrt(s);
  }
  return bound;
}

/// |det| relative to the Hadamard bound after equilibrating rows and columns
/// (alternating 2-norm scaling), in [0, 1]. Members can differ in scale by
/// many orders of magnitude (x^k against 1), and so can shifted rows (a^{x+i}),
/// without the matrix being close to singular; neither kind of scaling
/// changes the measure.
template <Field F>
double degeneracy_measure(const Matrix<F>& m, const F& det) {
  const std::size_t n = m.rows();
  double mag = field_traits<F>::magnitude(det);
  if (n == 0) return 1.0;
  if (mag == 0.0) return 0.0;
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = field_traits<F>::magnitude(m(i, j));
  double logrel = std::log(mag);
  for (int sweep = 0; sweep < 20; ++sweep) {
    double moved = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += a[i * n + j] * a[i * n + j];
      if (s == 0.0) return 0.0;
      double c = std::sqrt(s);
      for (std::size_t i = 0; i < n; ++i) a[i * n + j] /= c;
      logrel -= std::log(c);
      moved = std::max(moved, std::abs(std::log(c)));
    }
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += a[i * n + j] * a[i * n + j];
      double r = std::sqrt(s);
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] /= r;
      logrel -= std::log(r);
      moved = std::max(moved, std::abs(std::log(r)));
    }
    if (moved < 1e-6) break;
  }
  // rows now have unit norm, so the Hadamard bound is 1
  return std::min(1.0, std::exp(logrel));
}

inline constexpr double kDegeneracyFloor = 1e-12;
inline constexpr double kConstancyTolerance = 1e-9;

template <Field F>
struct RatioOptions {
  double constancy_tolerance = kConstancyTolerance;
  double degeneracy_floor = kDegeneracyFloor;
  /// Analytic Wronskian, for families (e.g. with ln) that have no exact derivative.
  std::function<F(const F&)> wronskian_override;
};

/// W/C over a grid. ratios[i] is empty where C(grid[i]) fell under the
/// degeneracy floor (degeneracy_measure < floor; exact field: C = 0).
template <Field F>
struct RatioReport {
  std::vector<F> grid;
  std::vector<F> w_values;
  std::vector<F> c_values;
  std::vector<std::optional<F>> ratios;
  std::vector<std::size_t> excluded;
  F ratio_mean{};
  double ratio_relative_spread = 0.0;
  bool constant_verdict = false;
};

template <Field F>
RatioReport<F> ratio_sweep(const FunctionFamily<F>& family, std::span<const F> grid, const RatioOptions<F>& opts = {}) {
  if (grid.empty()) throw argument_error("ratio_sweep: empty grid");
  RatioReport<F> rep;
  std::vector<F> kept;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const F& x = grid[i];
    F w = opts.wronskian_override ? opts.wronskian_override(x) : wronskian(family, x);
    Matrix<F> cm = casoratian_matrix(family, x);
    F c = determinant(cm);
    bool degenerate;
    if constexpr (field_traits<F>::exact) {
      degenerate = c.is_zero();
    } else {
      degenerate = degeneracy_measure(cm, c) < opts.degeneracy_floor;
    }
    rep.grid.push_back(x);
    rep.w_values.push_back(w);
    rep.c_values.push_back(c);
    if (degenerate) {
      rep.ratios.push_back(std::nullopt);
      rep.excluded.push_back(i);
    } else {
      rep.ratios.push_back(w / c);
      kept.push_back(w / c);
    }
  }
  if (kept.empty()) throw degenerate_sweep("ratio_sweep: every grid point is degenerate (C ~ 0)");

  F sum = field_traits<F>::from_int(0);
  for (const auto& r : kept) sum += r;
  rep.ratio_mean = sum / field_traits<F>::from_int(static_cast<long>(kept.size()));

  bool all_equal = true;
  double diameter = 0.0;
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = a + 1; b < kept.size(); ++b) {
      if (!(kept[a] == kept[b])) all_equal = false;
      diameter = std::max(diameter, field_traits<F>::magnitude(kept[a] - kept[b]));
    }
  double scale = field_traits<F>::magnitude(rep.ratio_mean);
  if (all_equal) {
    rep.ratio_relative_spread = 0.0;
  } else {
    rep.ratio_relative_spread = scale > 0.0 ? diameter / scale : HUGE_VAL;
  }
  bool constant = field_traits<F>::exact ? all_equal : rep.ratio_relative_spread <= opts.constancy_tolerance;
  rep.constant_verdict = constant && rep.excluded.empty();
  return rep;
}

}  // namespace casorati
