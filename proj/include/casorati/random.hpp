#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "casorati/matrix.hpp"
#include "casorati/rational.hpp"

namespace casorati {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Seed from $CASORATI_SEED when set and numeric, else kDefaultSeed.
inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("CASORATI_SEED")) {
    try {
      std::size_t used = 0;
      std::uint64_t v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultSeed;
}

/// Deterministic source of sample points and test matrices.
class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed) : rng_(seed) {}

  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(long max_num = 50, long max_den = 20) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    long p = num(rng_);
    long q = den(rng_);
    return Rational(p, q);
  }

  std::vector<Rational> rationals(std::size_t count, long max_num = 50, long max_den = 20) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(rational(max_num, max_den));
    return out;
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Matrix<Rational> integer_matrix(std::size_t n, long lo, long hi) {
    Matrix<Rational> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(integer(lo, hi));
    return a;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace casorati
