#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#include "casorati/errors.hpp"
#include "casorati/matrix.hpp"
#include "casorati/scalars.hpp"

namespace casorati {

/// Exact determinant. Each row is scaled to integers by the lcm of its
/// denominators, then Bareiss fraction-free elimination runs over Z.
inline Rational det_exact(const Matrix<Rational>& m) {
  if (!m.square()) throw argument_error("det_exact: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  Matrix<BigInt> a(n, n);
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) {
      BigInt d = m(i, j).den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j).num() * (l / m(i, j).den());
    scale *= l;
  }

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  BigInt d = a(n - 1, n - 1);
  if (sign < 0) d = -d;
  return Rational(d, scale);
}

namespace detail {

template <FloatScalar T>
double modulus(const T& v) {
  return static_cast<double>(std::abs(v));
}

template <FloatScalar T>
bool finite(const T& v) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::isfinite(v);
  } else {
    return is_finite(v);
  }
}

/// In-place LU with partial pivoting (largest modulus). Returns the
/// permutation sign, or 0 when a column has no nonzero pivot.
template <FloatScalar T>
int lu_in_place(Matrix<T>& a, std::vector<std::size_t>& perm) {
  const std::size_t n = a.rows();
  perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = modulus(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = modulus(a(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (!std::isfinite(best)) throw numeric_error("non-finite matrix entry in elimination");
    if (best == 0.0) return 0;
    if (p != k) {
      a.swap_rows(p, k);
      std::swap(perm[p], perm[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      T f = a(i, k) / a(k, k);
      a(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return sign;
}

}  // namespace detail

/// Floating-point determinant by partially pivoted elimination.
template <FloatScalar T>
T det_float(Matrix<T> m) {
  if (!m.square()) throw argument_error("det_float: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return T{1};
  std::vector<std::size_t> perm;
  int sign = detail::lu_in_place(m, perm);
  if (sign == 0) return T{0};
  T d = static_cast<T>(sign);
  for (std::size_t k = 0; k < n; ++k) d *= m(k, k);
  if (!detail::finite(d)) throw numeric_error("non-finite determinant");
  return d;
}

/// Result of a pivoted float solve. `pivot_ratio` = min|u_kk| / max|u_kk|, a
/// cheap singularity indicator.
template <FloatScalar T>
struct FloatSolve {
  std::vector<T> x;
  double pivot_ratio = 0.0;
};

template <FloatScalar T>
FloatSolve<T> solve_float(Matrix<T> a, std::span<const T> b) {
  if (!a.square() || a.rows() != b.size()) throw argument_error("solve_float: shape mismatch");
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm;
  if (detail::lu_in_place(a, perm) == 0) throw numeric_error("solve_float: singular matrix");
  std::vector<T> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    T s = b[perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= a(i, j) * y[j];
    y[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    T s = y[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * y[j];
    y[i] = s / a(i, i);
    if (!detail::finite(y[i])) throw numeric_error("solve_float: non-finite solution");
  }
  double lo = detail::modulus(a(0, 0)), hi = lo;
  for (std::size_t k = 1; k < n; ++k) {
    lo = std::min(lo, detail::modulus(a(k, k)));
    hi = std::max(hi, detail::modulus(a(k, k)));
  }
  return {std::move(y), hi > 0 ? lo / hi : 0.0};
}

template <Field F>
F determinant(const Matrix<F>& m) {
  if constexpr (std::is_same_v<F, Rational>) {
    return det_exact(m);
  } else {
    return det_float(m);
  }
}

/// prod_{j < i} (x_i - x_j)
template <Field F>
F vandermonde_product(std::span<const F> nodes) {
  if (nodes.empty()) throw argument_error("vandermonde_product: no nodes");
  F acc = field_traits<F>::from_int(1);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) acc *= nodes[i] - nodes[j];
  return acc;
}

/// Row i is (1, x_i, x_i^2, ..., x_i^{n-1}).
template <Field F>
Matrix<F> moment_matrix(std::span<const F> nodes) {
  const std::size_t n = nodes.size();
  Matrix<F> v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    F p = field_traits<F>::from_int(1);
    for (std::size_t j = 0; j < n; ++j) {
      v(i, j) = p;
      p *= nodes[i];
    }
  }
  return v;
}

/// Rank over Q by Gaussian elimination.
inline std::size_t rank_exact(Matrix<Rational> a) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t p = rank;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, rank);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      Rational f = a(i, col) / a(rank, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace casorati
