#pragma once

#include <cmath>
#include <random>

namespace heseq::test {

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Deterministic generator; fixed seed keeps the property tests reproducible.
inline std::mt19937_64 make_rng(std::uint64_t seed = 0x5eed5eedULL) {
  return std::mt19937_64{seed};
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>{lo, hi}(rng);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

}  // namespace heseq::test
