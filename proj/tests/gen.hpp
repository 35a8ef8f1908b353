#pragma once

#include <random>

#include "qwave/poly.hpp"

namespace qwave::testing {

// Fixed seed so property failures reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed2024);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long bound = 9) {
  const long den = uniform(1, bound);
  return make_rational(uniform(-bound, bound), den);
}

/// Degree exactly `degree` (nonzero leading coefficient).
inline Poly random_poly(unsigned degree, long bound = 9) {
  std::vector<Rational> c(degree + 1);
  for (auto& v : c) v = random_rational(bound);
  while (sgn(c.back()) == 0) c.back() = random_rational(bound);
  return Poly(std::move(c));
}

}  // namespace qwave::testing
