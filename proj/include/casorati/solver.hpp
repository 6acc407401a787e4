#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "casorati/casoratian.hpp"
#include "casorati/determinants.hpp"
#include "casorati/errors.hpp"
#include "casorati/functions.hpp"
#include "casorati/matrix.hpp"
#include "casorati/scalars.hpp"

namespace casorati {

// General solution of (E - lambda I)^m y = 0:
//   y(x) = (mu_1(x) + mu_2(x) x + ... + mu_m(x) x^{m-1}) |lambda|^x
// with mu_i 1-periodic for lambda > 0 and 1-antiperiodic for lambda < 0.
// Profiles are sampled at x0 + t/q, t = 0..q-1; a unit shift maps that grid to
// itself, so values at x0 + t/q + k follow from the parity.

enum class Parity { periodic, antiperiodic };

inline std::string_view to_string(Parity p) { return p == Parity::periodic ? "periodic" : "antiperiodic"; }

inline Parity parity_for(double lambda) { return lambda > 0 ? Parity::periodic : Parity::antiperiodic; }

struct PeriodicProfile {
  std::size_t q = 1;
  std::vector<double> samples;  ///< mu(x0 + t/q), t = 0..q-1
  Parity parity = Parity::periodic;

  /// mu(x0 + t/q + k)
  double at(std::size_t t, long k) const {
    double v = samples.at(t);
    if (parity == Parity::antiperiodic && (k % 2 != 0)) v = -v;
    return v;
  }
};

struct SolverProblem {
  double lambda = 1.0;
  unsigned m = 1;
  double x0 = 0.0;
  std::size_t q = 1;
  std::size_t horizon = 1;  ///< unit steps k = 0..horizon-1

  void validate() const {
    if (lambda == 0.0 || !std::isfinite(lambda)) throw argument_error("solver: lambda must be finite and nonzero");
    if (m < 1) throw argument_error("solver: operator power m must be >= 1");
    if (q < 1) throw argument_error("solver: resolution q must be >= 1");
    if (horizon < m) throw argument_error("solver: horizon must be >= m");
    if (!std::isfinite(x0)) throw argument_error("solver: x0 must be finite");
  }

  double point(std::size_t t, std::size_t k) const {
    return x0 + static_cast<double>(t) / static_cast<double>(q) + static_cast<double>(k);
  }
};

struct SolverSolution {
  std::vector<PeriodicProfile> profiles;
  Matrix<double> values;  ///< values(t, k) = y(x0 + t/q + k)
  double max_residual = 0.0;
  double max_abs = 0.0;
  bool accepted = false;  ///< max_residual <= kResidualTolerance * max_abs
};

inline constexpr double kResidualTolerance = 1e-9;
inline constexpr double kParityTolerance = 1e-8;
inline constexpr double kDetTolerance = 1e-9;

/// M_ij = |lambda|^x lambda^{i-1} (x + i - 1)^{j-1}, i, j = 1..m. The signed
/// lambda^{i-1} carries mu(x + i) = sign(lambda)^i mu(x), so M maps
/// (mu_1(x), ..., mu_m(x)) to (y(x), ..., y(x + m - 1)).
inline Matrix<double> build_M(double lambda, unsigned m, double x) {
  if (lambda == 0.0) throw argument_error("build_M: lambda must be nonzero");
  Matrix<double> M(m, m, 0.0);
  const double base = std::pow(std::abs(lambda), x);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j)
      M(i, j) = base * std::pow(lambda, static_cast<double>(i)) * std::pow(x + i, static_cast<double>(j));
  return M;
}

/// |lambda|^{m x} lambda^{m(m-1)/2} sf(m-1)
inline double det_M_closed_form(double lambda, unsigned m, double x) {
  return std::pow(std::abs(lambda), m * x) * std::pow(lambda, m * (m - 1) / 2.0) * superfactorial(m - 1).to_double();
}

namespace detail {

/// Solves for (mu_1..mu_m)(x) from y(x + i), i = 0..m-1. Row i is divided
/// by |lambda|^{x+i}, leaving sign(lambda)^i (x+i)^j, whose determinant is
/// sign(lambda)^{m(m-1)/2} sf(m-1).
inline std::vector<double> solve_window(double lambda, unsigned m, double x, std::span<const double> y) {
  const double s = lambda > 0 ? 1.0 : -1.0;
  Matrix<double> a(m, m, 0.0);
  std::vector<double> rhs(m);
  for (unsigned i = 0; i < m; ++i) {
    double sign_i = (i % 2 == 1) ? s : 1.0;
    for (unsigned j = 0; j < m; ++j) a(i, j) = sign_i * std::pow(x + i, static_cast<double>(j));
    rhs[i] = y[i] / std::pow(std::abs(lambda), x + i);
  }
  double expected = ((m * (m - 1) / 2) % 2 == 1 ? s : 1.0) * superfactorial(m - 1).to_double();
  double d = det_float(a);
  if (std::abs(d - expected) > kDetTolerance * std::abs(expected))
    throw numeric_error("solver: det M disagrees with its closed form at x = " + std::to_string(x));
  auto sol = solve_float<double>(a, rhs);
  return sol.x;
}

}  // namespace detail

/// Recovers mu_1..mu_m from samples y(t, k) = y(x0 + t/q + k), k = 0..K-1,
/// K >= m. With K >= m + 1 the recovered values are re-solved on the windows
/// starting at k = 1..min(m, K - m) and must reproduce the parity.
inline std::vector<PeriodicProfile> recover_profiles(const SolverProblem& problem, const Matrix<double>& y_samples) {
  problem.validate();
  const unsigned m = problem.m;
  if (y_samples.rows() != problem.q) throw argument_error("recover_profiles: need one sample row per residue t");
  if (y_samples.cols() < m) throw argument_error("recover_profiles: need at least m unit-step samples per residue");
  const std::size_t K = y_samples.cols();
  const Parity parity = parity_for(problem.lambda);
  const double s = problem.lambda > 0 ? 1.0 : -1.0;

  std::vector<PeriodicProfile> profiles(m);
  for (auto& p : profiles) {
    p.q = problem.q;
    p.parity = parity;
    p.samples.assign(problem.q, 0.0);
  }
  // The parity tolerance scales with the largest recovered value over all
  // residues: a profile that vanishes at one residue is just rounding noise there.
  std::vector<std::vector<double>> first(problem.q);
  double scale = 0.0;
  for (std::size_t t = 0; t < problem.q; ++t) {
    first[t] = detail::solve_window(problem.lambda, m, problem.point(t, 0), y_samples.row(t).subspan(0, m));
    for (double v : first[t]) scale = std::max(scale, std::abs(v));
  }
  const std::size_t windows = std::min<std::size_t>(m, K - m);
  for (std::size_t t = 0; t < problem.q; ++t) {
    auto row = y_samples.row(t);
    for (std::size_t k = 1; k <= windows; ++k) {
      auto xk = detail::solve_window(problem.lambda, m, problem.point(t, k), row.subspan(k, m));
      double sign_k = (k % 2 == 1) ? s : 1.0;
      for (unsigned i = 0; i < m; ++i)
        if (std::abs(xk[i] - sign_k * first[t][i]) > kParityTolerance * std::max(scale, 1e-300))
          throw inconsistent_input("recover_profiles: samples are not a solution (parity broken at residue " +
                                   std::to_string(t) + ", shift " + std::to_string(k) + ")");
    }
    for (unsigned i = 0; i < m; ++i) profiles[i].samples[t] = first[t][i];
  }
  return profiles;
}

/// y on the grid x0 + t/q + k, k < horizon, plus the residual of (E - lambda)^m y
/// expanded as sum_r binom(m, r) (-lambda)^{m-r} E^r.
inline SolverSolution synthesize(const SolverProblem& problem, const std::vector<PeriodicProfile>& profiles) {
  problem.validate();
  if (profiles.size() != problem.m) throw argument_error("synthesize: need exactly m profiles");
  const Parity parity = parity_for(problem.lambda);
  for (const auto& p : profiles) {
    if (p.q != problem.q || p.samples.size() != problem.q) throw argument_error("synthesize: profile resolution mismatch");
    if (p.parity != parity)
      throw argument_error(std::string("synthesize: lambda ") + (problem.lambda > 0 ? "> 0" : "< 0") + " needs " +
                           std::string(to_string(parity)) + " profiles");
  }
  SolverSolution sol;
  sol.profiles = profiles;
  sol.values = Matrix<double>(problem.q, problem.horizon, 0.0);
  const double lam = std::abs(problem.lambda);
  for (std::size_t t = 0; t < problem.q; ++t)
    for (std::size_t k = 0; k < problem.horizon; ++k) {
      double x = problem.point(t, k);
      double poly = 0.0, xp = 1.0;
      for (unsigned i = 0; i < problem.m; ++i) {
        poly += profiles[i].at(t, static_cast<long>(k)) * xp;
        xp *= x;
      }
      double y = checked(poly * std::pow(lam, x), "solution value");
      sol.values(t, k) = y;
      sol.max_abs = std::max(sol.max_abs, std::abs(y));
    }
  std::vector<double> coeff(problem.m + 1);
  for (unsigned r = 0; r <= problem.m; ++r)
    coeff[r] = binomial(problem.m, r).get_d() * std::pow(-problem.lambda, static_cast<double>(problem.m - r));
  for (std::size_t t = 0; t < problem.q; ++t)
    for (std::size_t k = 0; k + problem.m < problem.horizon; ++k) {
      double acc = 0.0;
      for (unsigned r = 0; r <= problem.m; ++r) acc += coeff[r] * sol.values(t, k + r);
      sol.max_residual = std::max(sol.max_residual, std::abs(acc));
    }
  sol.accepted = sol.max_residual <= kResidualTolerance * sol.max_abs;
  return sol;
}

/// {x^{i-1} |lambda|^x : i = 1..m} as exponential polynomials with rate ln|lambda|.
inline FunctionFamily<Complex> solution_basis(double lambda, unsigned m) {
  if (lambda == 0.0) throw argument_error("solution_basis: lambda must be nonzero");
  std::vector<BasisFunction> fs;
  for (unsigned i = 0; i < m; ++i) fs.push_back(ExpPoly{i, Complex{std::log(std::abs(lambda)), 0.0}});
  return FunctionFamily<Complex>(fs);
}

template <Field F>
struct FundamentalReport {
  bool fundamental = false;
  F witness_x{};
  F witness_c{};  ///< Casoratian where the degeneracy measure (exact: |C|) is smallest
};

/// True iff the Casoratian clears the degeneracy floor at every grid point.
template <Field F>
FundamentalReport<F> is_fundamental_set(const FunctionFamily<F>& family, std::span<const F> grid,
                                        double floor = kDegeneracyFloor) {
  if (grid.empty()) throw argument_error("is_fundamental_set: empty grid");
  FundamentalReport<F> rep;
  rep.fundamental = true;
  double worst = HUGE_VAL;
  for (const auto& x : grid) {
    Matrix<F> cm = casoratian_matrix(family, x);
    F c = determinant(cm);
    double mag = field_traits<F>::magnitude(c);
    double rel = degeneracy_measure(cm, c);
    bool ok = field_traits<F>::exact ? !field_traits<F>::is_zero(c) : rel >= floor;
    if (!ok) rep.fundamental = false;
    double key = field_traits<F>::exact ? mag : rel;
    if (key < worst) {
      worst = key;
      rep.witness_x = x;
      rep.witness_c = c;
    }
  }
  return rep;
}

}  // namespace casorati
