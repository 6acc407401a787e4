#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "casorati/casoratian.hpp"
#include "casorati/determinants.hpp"
#include "casorati/errors.hpp"
#include "casorati/functions.hpp"
#include "casorati/polynomial.hpp"
#include "casorati/random.hpp"
#include "casorati/scalars.hpp"

namespace casorati {

// --- {1, x, ..., x^n} and its bases --------------------------------------------

struct PowerEqualityReport {
  unsigned n = 0;
  std::uint64_t seed = 0;
  Rational expected;  ///< sf(n)
  std::vector<Rational> xs, wronskians, casoratians;
  bool holds = false;
};

/// W = C = sf(n) on {1, x, ..., x^n}, checked exactly at `samples` random rational x.
inline PowerEqualityReport verify_power_equality(unsigned n, std::uint64_t seed = kDefaultSeed,
                                                 std::size_t samples = 5) {
  PowerEqualityReport rep;
  rep.n = n;
  rep.seed = seed;
  rep.expected = superfactorial(n);
  SampleSource src(seed);
  auto family = power_family<Rational>(n);
  rep.holds = true;
  for (std::size_t s = 0; s < samples; ++s) {
    Rational x = src.rational();
    Rational w = wronskian(family, x);
    Rational c = casoratian(family, x);
    rep.xs.push_back(x);
    rep.wronskians.push_back(w);
    rep.casoratians.push_back(c);
    if (w != rep.expected || c != rep.expected) rep.holds = false;
  }
  return rep;
}

struct BasisEqualityReport {
  unsigned n = 0;
  std::uint64_t seed = 0;
  Rational det_a;
  Rational value;  ///< det(A) sf(n)
  std::vector<Rational> xs, wronskians, casoratians;
  bool holds = false;
};

/// Member i of the basis is p_i(x) = sum_j A(i, j) x^j.
inline FunctionFamily<Rational> basis_from_matrix(const Matrix<Rational>& a) {
  std::vector<BasisFunction> members;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Rational> c(a.row(i).begin(), a.row(i).end());
    members.push_back(poly(Polynomial(std::move(c))));
  }
  return FunctionFamily<Rational>(members);
}

/// W[p] = C[p] = det(A) sf(n) for the basis p_i = sum_j A_ij x^{j-1} of P_n.
inline BasisEqualityReport verify_basis_equality(const Matrix<Rational>& a, unsigned n,
                                                 std::uint64_t seed = kDefaultSeed, std::size_t samples = 5) {
  if (!a.square() || a.rows() != n + 1)
    throw argument_error("verify_basis_equality: A must be (n+1)x(n+1) with n = " + std::to_string(n));
  BasisEqualityReport rep;
  rep.n = n;
  rep.seed = seed;
  rep.det_a = det_exact(a);
  if (rep.det_a.is_zero()) throw argument_error("verify_basis_equality: A is singular, rows are not a basis of P_n");
  rep.value = rep.det_a * superfactorial(n);
  auto family = basis_from_matrix(a);
  SampleSource src(seed);
  rep.holds = true;
  for (std::size_t s = 0; s < samples; ++s) {
    Rational x = src.rational();
    Rational w = wronskian(family, x);
    Rational c = casoratian(family, x);
    rep.xs.push_back(x);
    rep.wronskians.push_back(w);
    rep.casoratians.push_back(c);
    if (w != rep.value || c != rep.value) rep.holds = false;
  }
  return rep;
}

// --- subsets of P_n ---------------------------------------------------------------

enum class SubsetCase { equal_nonzero, both_zero_dependent, unequal, not_covered };

inline std::string_view to_string(SubsetCase c) {
  switch (c) {
    case SubsetCase::equal_nonzero: return "equal_nonzero";
    case SubsetCase::both_zero_dependent: return "both_zero_dependent";
    case SubsetCase::unequal: return "unequal";
    case SubsetCase::not_covered: return "not_covered";
  }
  return "?";
}

struct ClassificationVerdict {
  SubsetCase case_tag = SubsetCase::not_covered;
  Polynomial w;  ///< W[S] as a polynomial in x
  Polynomial c;  ///< C[S] as a polynomial in x
  std::size_t rank = 0;
  bool span_is_full_Pm = false;
};

/// Exact W and C of a polynomial list, as polynomials in x. Both have degree
/// at most the sum of member degrees, so that many + 1 samples pin them down.
inline std::pair<Polynomial, Polynomial> wronskian_casoratian_polynomials(const std::vector<Polynomial>& s) {
  std::vector<BasisFunction> members;
  long bound = 0;
  for (const auto& p : s) {
    members.push_back(poly(p));
    bound += std::max(p.degree(), 0);
  }
  FunctionFamily<Rational> family(members);
  std::vector<Rational> xs, ws, cs;
  for (long i = 0; i <= bound; ++i) {
    Rational x(i);
    xs.push_back(x);
    ws.push_back(wronskian(family, x));
    cs.push_back(casoratian(family, x));
  }
  return {interpolate(xs, ws), interpolate(xs, cs)};
}

inline ClassificationVerdict classify_subset(const std::vector<Polynomial>& s) {
  if (s.empty()) throw argument_error("classify_subset: empty set");
  ClassificationVerdict v;
  int deg = 0;
  for (const auto& p : s) deg = std::max(deg, p.degree());
  Matrix<Rational> coeffs(s.size(), static_cast<std::size_t>(deg) + 1);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < coeffs.cols(); ++j) coeffs(i, j) = s[i].coeff(j);
  v.rank = rank_exact(coeffs);
  v.span_is_full_Pm = v.rank == s.size() && static_cast<std::size_t>(deg) + 1 == s.size();
  auto [w, c] = wronskian_casoratian_polynomials(s);
  v.w = w;
  v.c = c;
  if (v.rank < s.size()) {
    if (!w.is_zero() || !c.is_zero()) throw std::logic_error("dependent set with nonzero W or C");
    v.case_tag = SubsetCase::both_zero_dependent;
  } else if (v.span_is_full_Pm) {
    if (!(w == c)) throw std::logic_error("basis of P_m with W != C");
    v.case_tag = SubsetCase::equal_nonzero;
  } else {
    v.case_tag = w == c ? SubsetCase::not_covered : SubsetCase::unequal;
  }
  return v;
}

// --- invariance and kappa ---------------------------------------------------------

namespace detail {

/// Relative distance of g from the column span of `cols` (modified
/// Gram-Schmidt, applied twice). Columns that are numerically dependent on
/// earlier ones are dropped.
inline double span_residual(const std::vector<std::vector<Complex>>& cols, std::vector<Complex> g) {
  auto dot = [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    Complex s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
  };
  auto norm = [&](const std::vector<Complex>& a) { return std::sqrt(std::abs(dot(a, a))); };
  std::vector<std::vector<Complex>> q;
  for (auto c : cols) {
    double before = norm(c);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& e : q) {
        Complex p = dot(e, c);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= p * e[i];
      }
    double after = norm(c);
    if (before == 0.0 || after <= 1e-13 * before) continue;
    for (auto& v : c) v /= after;
    q.push_back(std::move(c));
  }
  double gn = norm(g);
  if (gn == 0.0) return 0.0;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& e : q) {
      Complex p = dot(e, g);
      for (std::size_t i = 0; i < g.size(); ++i) g[i] -= p * e[i];
    }
  return norm(g) / gn;
}

inline bool in_span_exact(const Matrix<Rational>& basis_cols, const std::vector<Rational>& g) {
  Matrix<Rational> aug(basis_cols.rows(), basis_cols.cols() + 1);
  for (std::size_t i = 0; i < basis_cols.rows(); ++i) {
    for (std::size_t j = 0; j < basis_cols.cols(); ++j) aug(i, j) = basis_cols(i, j);
    aug(i, basis_cols.cols()) = g[i];
  }
  return rank_exact(basis_cols) == rank_exact(aug);
}

}  // namespace detail

inline constexpr double kInvarianceTolerance = 1e-9;

/// Nine points, step 1/8, around x = -(n-1)/4: halfway between the origin,
/// where a single-point Wronskian of e^{+-mx}-type members is best
/// conditioned, and -(n-1)/2, where the Casorati rows x..x+n-1 straddle 0.
/// Far from the origin such members turn nearly collinear.
template <Field F>
std::vector<F> centered_sweep_grid(std::size_t n) {
  std::vector<F> g;
  const long c = -2 * (static_cast<long>(n) - 1);  // centre in eighths
  for (long i = -4; i <= 4; ++i) g.push_back(field_traits<F>::from_rational(Rational(c + i, 8)));
  return g;
}

template <Field F>
struct InvarianceReport {
  bool d_invariant = false;
  bool shift_invariant = false;
  double d_residual = 0.0;      ///< worst relative residual (float field)
  double shift_residual = 0.0;
  std::optional<F> kappa;
  bool kappa_is_constant = false;
  std::optional<RatioReport<F>> sweep;
};

/// Decides D(V) ⊆ V and E(V) ⊆ V for V = span(family) by linear solves on a
/// sample grid of 2n + 1 points; when both hold, measures kappa = W/C.
template <Field F>
InvarianceReport<F> check_invariance(const FunctionFamily<F>& family, std::span<const F> sweep_grid = {}) {
  if (family.has_tabulated())
    throw unsupported_operation("check_invariance: tabulated members have no structural derivative");
  const std::size_t n = family.size();
  const std::size_t npts = 2 * n + 1;
  std::vector<F> pts;
  for (std::size_t p = 0; p < npts; ++p) {
    if constexpr (field_traits<F>::exact) {
      pts.push_back(Rational(static_cast<long>(p)));
    } else {
      pts.push_back(Complex{-1.0 + 2.0 * static_cast<double>(p) / static_cast<double>(npts - 1), 0.0});
    }
  }
  const F one = field_traits<F>::from_int(1);

  InvarianceReport<F> rep;
  rep.d_invariant = rep.shift_invariant = true;
  if constexpr (field_traits<F>::exact) {
    Matrix<Rational> cols(npts, n);
    for (std::size_t p = 0; p < npts; ++p)
      for (std::size_t j = 0; j < n; ++j) cols(p, j) = family[j].evaluate(pts[p]);
    for (std::size_t j = 0; j < n; ++j) {
      auto d = derivative(family[j]);
      auto e = shift(family[j], one);
      std::vector<Rational> gd, ge;
      for (const auto& x : pts) {
        gd.push_back(d.evaluate(x));
        ge.push_back(e.evaluate(x));
      }
      if (!detail::in_span_exact(cols, gd)) rep.d_invariant = false;
      if (!detail::in_span_exact(cols, ge)) rep.shift_invariant = false;
    }
  } else {
    std::vector<std::vector<Complex>> cols(n);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& x : pts) cols[j].push_back(family[j].evaluate(x));
    for (std::size_t j = 0; j < n; ++j) {
      auto d = derivative(family[j]);
      auto e = shift(family[j], one);
      std::vector<Complex> gd, ge;
      for (const auto& x : pts) {
        gd.push_back(d.evaluate(x));
        ge.push_back(e.evaluate(x));
      }
      rep.d_residual = std::max(rep.d_residual, detail::span_residual(cols, gd));
      rep.shift_residual = std::max(rep.shift_residual, detail::span_residual(cols, ge));
    }
    rep.d_invariant = rep.d_residual <= kInvarianceTolerance;
    rep.shift_invariant = rep.shift_residual <= kInvarianceTolerance;
  }

  if (rep.d_invariant && rep.shift_invariant) {
    std::vector<F> grid = sweep_grid.empty() ? centered_sweep_grid<F>(family.size()) : std::vector<F>(sweep_grid.begin(), sweep_grid.end());
    rep.sweep = ratio_sweep<F>(family, grid);
    rep.kappa_is_constant = rep.sweep->constant_verdict;
    if (rep.kappa_is_constant) rep.kappa = rep.sweep->ratio_mean;
  }
  return rep;
}

// --- proportionality constants ----------------------------------------------------

enum class FamilyKind { binomial_exponential, exp_trig, hyperbolic, exp_poly };

inline std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::binomial_exponential: return "binomexp";
    case FamilyKind::exp_trig: return "exptrig";
    case FamilyKind::hyperbolic: return "hyperbolic";
    case FamilyKind::exp_poly: return "exppoly";
  }
  return "?";
}

struct ProportionalityParams {
  FamilyKind kind = FamilyKind::binomial_exponential;
  unsigned n = 0;
  Complex a{2.0, 0.0};        ///< binomial-exponential base
  Complex m{};                ///< exp-trig / hyperbolic rate
  double omega = 1.0;         ///< exp-trig frequency
  std::vector<ExpBlock> blocks;  ///< exp-poly blocks
};

struct ProportionalityReport {
  ProportionalityParams params;
  std::optional<Complex> predicted;   ///< independently derived closed form
  Complex measured{};                 ///< mean W/C over the grid
  double spread = 0.0;
  bool x_independent = false;
  std::optional<bool> agrees;         ///< |predicted - measured| <= 1e-9 |predicted|
  std::optional<Complex> stated;      ///< constant in its published form (annotation only)
  std::optional<Complex> stated_prefactor;
  std::optional<Complex> implied_k;   ///< measured / stated_prefactor
  std::optional<double> asymptotic_ratio;  ///< log|c| / ((n^2/2) log|1/a|), -> 1
  std::vector<std::string> warnings;
  RatioReport<Complex> sweep;
};

inline constexpr double kAgreementTolerance = 1e-9;

inline FunctionFamily<Complex> family_for(const ProportionalityParams& p) {
  switch (p.kind) {
    case FamilyKind::binomial_exponential:
      if (p.a == Complex{}) throw argument_error("binomial-exponential family needs a != 0");
      return binomial_exponential_family(p.n, p.a);
    case FamilyKind::exp_trig:
      if (p.omega == 0.0) throw argument_error("exp-trig family needs omega != 0 (sin(0 x) = 0)");
      return exp_trig_family(p.n, p.m, p.omega);
    case FamilyKind::hyperbolic:
      if (p.m == Complex{}) throw argument_error("hyperbolic family with m = 0 is linearly dependent");
      return hyperbolic_family(p.n, p.m);
    case FamilyKind::exp_poly:
      if (p.blocks.empty()) throw argument_error("exp-poly family needs at least one block");
      for (std::size_t i = 0; i < p.blocks.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (p.blocks[i].m == p.blocks[j].m) throw argument_error("exp-poly rates m_j must be distinct");
      return exp_poly_family(p.blocks);
  }
  throw argument_error("unknown family kind");
}

/// W/C for the blocks {x^k e^{m_j x} : k = 0..n_j}. The Wronskian and the
/// Casoratian share a confluent Vandermonde structure in the nodes m_j and
/// e^{m_j}; their quotient is
///   prod_j e^{-m_j n_j (n_j+1)/2} * prod_{i<j} ((m_j - m_i) / (e^{m_j} - e^{m_i}))^{(n_i+1)(n_j+1)}.
/// Any basis of the same space has the same quotient, which covers the
/// exp-trig (rates m +- i w) and hyperbolic (rates +-m) families.
inline Complex exp_poly_constant(const std::vector<ExpBlock>& blocks) {
  Complex log_k{};
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const double nj = blocks[j].n;
    log_k -= blocks[j].m * (nj * (nj + 1.0) / 2.0);
    for (std::size_t i = 0; i < j; ++i) {
      Complex f = (blocks[j].m - blocks[i].m) / (std::exp(blocks[j].m) - std::exp(blocks[i].m));
      log_k += (blocks[i].n + 1.0) * (nj + 1.0) * std::log(f);
    }
  }
  return std::exp(log_k);
}

namespace detail {
inline std::string fmt17(const Complex& z) { return fmt_complex(z); }
}  // namespace detail

inline ProportionalityReport proportionality_constant(const ProportionalityParams& p,
                                                      std::span<const Complex> grid = {}) {
  auto family = family_for(p);
  std::vector<Complex> g = grid.empty() ? centered_sweep_grid<Complex>(family.size()) : std::vector<Complex>(grid.begin(), grid.end());
  ProportionalityReport rep;
  rep.params = p;
  rep.sweep = ratio_sweep<Complex>(family, g);
  rep.measured = rep.sweep.ratio_mean;
  rep.spread = rep.sweep.ratio_relative_spread;
  rep.x_independent = rep.spread <= kConstancyTolerance;
  if (!rep.sweep.excluded.empty())
    rep.warnings.push_back(std::to_string(rep.sweep.excluded.size()) + " grid point(s) excluded: Casoratian under the degeneracy floor");

  const double n = static_cast<double>(p.n);
  switch (p.kind) {
    case FamilyKind::binomial_exponential: {
      const double e = n * (n + 1.0) / 2.0;
      Complex c = std::exp(-e * std::log(p.a));
      rep.predicted = c;
      rep.stated = c;
      double la = std::log(std::abs(p.a));
      if (p.n > 0 && la != 0.0) rep.asymptotic_ratio = std::log(std::abs(rep.measured)) / ((n * n / 2.0) * -la);
      break;
    }
    case FamilyKind::exp_trig: {
      const Complex iw{0.0, p.omega};
      rep.predicted = exp_poly_constant({{p.m + iw, p.n}, {p.m - iw, p.n}});
      Complex pre = std::exp(-p.m * (2.0 * n + 1.0) * (n + 1.0));
      rep.stated_prefactor = pre;
      rep.implied_k = rep.measured / pre;
      break;
    }
    case FamilyKind::hyperbolic: {
      rep.predicted = exp_poly_constant({{p.m, p.n}, {-p.m, p.n}});
      Complex pre = std::exp(-p.m * (2.0 * n + 1.0) * (n + 1.0));
      rep.stated_prefactor = pre;
      rep.stated = pre * p.m / std::sinh(p.m);
      rep.implied_k = rep.measured / pre;
      break;
    }
    case FamilyKind::exp_poly: {
      rep.predicted = exp_poly_constant(p.blocks);
      Complex s{};
      for (const auto& b : p.blocks) s += b.m * (static_cast<double>(b.n) * (b.n + 1.0) / 2.0);
      Complex pre = std::exp(-s);
      rep.stated_prefactor = pre;
      rep.implied_k = rep.measured / pre;
      break;
    }
  }
  if (rep.predicted) {
    rep.agrees = std::abs(*rep.predicted - rep.measured) <= kAgreementTolerance * std::abs(*rep.predicted);
  }
  if (rep.stated && std::abs(*rep.stated - rep.measured) > kAgreementTolerance * std::abs(rep.measured)) {
    rep.warnings.push_back("stated constant " + detail::fmt17(*rep.stated) + " disagrees with measured W/C " +
                           detail::fmt17(rep.measured));
  }
  if (!rep.x_independent) rep.warnings.push_back("measured W/C is not constant over the grid");
  return rep;
}

// --- binomial matrix lemmas -------------------------------------------------------

struct BinomLemmaReport {
  unsigned n = 0;
  std::uint64_t seed = 0;
  std::vector<Rational> xs;
  std::vector<double> operator_dets;   ///< det((D + ln a)^i binom(x, j))
  bool operator_exact = false;         ///< a = 1: computed over Q
  std::vector<Rational> shift_dets;    ///< det(binom(x + i, j)), exact
  bool holds = false;
};

inline constexpr double kLemmaTolerance = 1e-12;

namespace detail {

inline long double to_long_double(const Rational& r) {
  const auto& q = r.raw();
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p())
    return static_cast<long double>(q.get_num().get_si()) / static_cast<long double>(q.get_den().get_si());
  return static_cast<long double>(q.get_d());
}

}  // namespace detail

/// det((D + ln a)^i binom(x, j))_{i,j=0..n} = 1 and det(binom(x + i, j)) = 1.
inline BinomLemmaReport verify_binom_matrix_lemmas(unsigned n, double a, std::uint64_t seed = kDefaultSeed,
                                                   std::size_t samples = 5) {
  if (!(a > 0.0)) throw argument_error("verify_binom_matrix_lemmas: a must be real and positive");
  BinomLemmaReport rep;
  rep.n = n;
  rep.seed = seed;
  rep.operator_exact = a == 1.0;
  const long double la = std::log(static_cast<long double>(a));
  const std::size_t size = n + 1;

  // dk[k][j] = D^k binom(x, j)
  std::vector<std::vector<Polynomial>> dk(size, std::vector<Polynomial>(size));
  for (std::size_t j = 0; j < size; ++j) {
    Polynomial p = binomial_poly(static_cast<unsigned>(j));
    for (std::size_t k = 0; k < size; ++k) {
      dk[k][j] = p;
      p = p.derivative();
    }
  }

  SampleSource src(seed);
  rep.holds = true;
  for (std::size_t s = 0; s < samples; ++s) {
    Rational x = src.rational(8, 4);
    rep.xs.push_back(x);

    if (rep.operator_exact) {
      Matrix<Rational> m(size, size);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) m(i, j) = dk[i][j].evaluate(x);
      Rational d = det_exact(m);
      rep.operator_dets.push_back(d.to_double());
      if (d != Rational(1)) rep.holds = false;
    } else {
      // Entries grow like x^n and the elimination loses about cond(M) ulps,
      // so the matrix is assembled and reduced in extended precision.
      Matrix<long double> m(size, size, 0.0L);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
          long double acc = 0.0L;
          for (std::size_t k = 0; k <= i; ++k)
            acc += static_cast<long double>(binomial(static_cast<unsigned>(i), static_cast<unsigned>(k)).get_d()) *
                   std::pow(la, static_cast<long double>(i - k)) * detail::to_long_double(dk[k][j].evaluate(x));
          m(i, j) = acc;
        }
      double d = static_cast<double>(det_float(m));
      rep.operator_dets.push_back(d);
      if (std::abs(d - 1.0) > kLemmaTolerance) rep.holds = false;
    }

    Matrix<Rational> b(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        b(i, j) = binomial_value(x + Rational(static_cast<long>(i)), static_cast<unsigned>(j));
    Rational d2 = det_exact(b);
    rep.shift_dets.push_back(d2);
    if (d2 != Rational(1)) rep.holds = false;
  }
  return rep;
}

// --- limits -------------------------------------------------------------------------

/// Least-squares slope of log(err) against log(h), over points with err > 0.
/// NaN when fewer than two such points exist.
inline double fitted_order(std::span<const double> hs, std::span<const double> errs) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t cnt = 0;
  for (std::size_t i = 0; i < hs.size() && i < errs.size(); ++i) {
    if (!(errs[i] > 0.0) || !(hs[i] > 0.0)) continue;
    double lx = std::log(hs[i]), ly = std::log(errs[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++cnt;
  }
  if (cnt < 2) return std::numeric_limits<double>::quiet_NaN();
  double c = static_cast<double>(cnt);
  return (c * sxy - sx * sy) / (c * sxx - sx * sx);
}

/// h = 2^{-lo}, ..., 2^{-hi}
inline std::vector<double> dyadic_steps(int lo, int hi) {
  std::vector<double> hs;
  for (int e = lo; e <= hi; ++e) hs.push_back(std::ldexp(1.0, -e));
  return hs;
}

struct LimitReport {
  std::vector<double> hs;
  std::vector<Complex> values;
  Complex target{};
  std::vector<double> errors;
  double order = 0.0;
};

/// Delta_h^n f(x) / h^n against the exact n-th derivative, for each h.
inline LimitReport derivative_limit(const BasisFunction& f, double x, unsigned n, std::span<const double> hs) {
  LimitReport rep;
  Combination<Complex> fc(f);
  Combination<Complex> d = fc;
  for (unsigned i = 0; i < n; ++i) d = derivative(d);
  const Complex xc{x, 0.0};
  rep.target = d.evaluate(xc);
  for (double h : hs) {
    Complex q = difference_quotient(fc, xc, Complex{h, 0.0}, n);
    rep.hs.push_back(h);
    rep.values.push_back(q);
    rep.errors.push_back(std::abs(q - rep.target));
  }
  rep.order = fitted_order(rep.hs, rep.errors);
  return rep;
}

/// C_n^h(x) / h^{n(n-1)/2} against W_n(x), for each h.
inline LimitReport casoratian_limit(const FunctionFamily<Complex>& family, double x, std::span<const double> hs,
                                    ScaledRoute route = ScaledRoute::automatic) {
  LimitReport rep;
  const Complex xc{x, 0.0};
  rep.target = wronskian(family, xc);
  for (double h : hs) {
    Complex v = scaled_casoratian(family, xc, Complex{h, 0.0}, route);
    rep.hs.push_back(h);
    rep.values.push_back(v);
    rep.errors.push_back(std::abs(v - rep.target));
  }
  rep.order = fitted_order(rep.hs, rep.errors);
  return rep;
}

struct SignCorollaryReport {
  int wronskian_sign = 0;
  double h_matched = 0.0;   ///< first h (by halving) where sign(C^h) = sign(W)
  int halvings = 0;
  bool stable = false;      ///< sign kept for the extra halvings
  bool holds = false;
};

/// Halve h from h0 until sign(C^h(x)) = sign(W(x)), then require the sign to
/// persist for `extra` more halvings. Real-valued families only.
inline SignCorollaryReport sign_corollary(const FunctionFamily<Complex>& family, double x, double h0 = 1.0,
                                          int max_halvings = 40, int extra = 3) {
  SignCorollaryReport rep;
  const Complex xc{x, 0.0};
  double w = wronskian(family, xc).real();
  rep.wronskian_sign = (w > 0) - (w < 0);
  if (rep.wronskian_sign == 0) return rep;
  auto sign_at = [&](double h) {
    double c = casoratian(family, xc, Complex{h, 0.0}).real();
    return (c > 0) - (c < 0);
  };
  double h = h0;
  for (int k = 0; k <= max_halvings; ++k, h /= 2.0) {
    if (sign_at(h) == rep.wronskian_sign) {
      rep.h_matched = h;
      rep.halvings = k;
      rep.stable = true;
      double hh = h;
      for (int e = 0; e < extra; ++e) {
        hh /= 2.0;
        if (sign_at(hh) != rep.wronskian_sign) rep.stable = false;
      }
      rep.holds = rep.stable;
      return rep;
    }
  }
  return rep;
}

}  // namespace casorati
