#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "kahler/clifford.hpp"

namespace testing_support {

using kahler::EvenElement;

inline double rel_err(EvenElement got, EvenElement want) {
  return kahler::abs(got - want) / std::max(kahler::abs(want), 1e-300);
}

// Relative error with an absolute floor for values near zero.
inline double scaled_err(EvenElement got, EvenElement want, double floor = 1.0) {
  return kahler::abs(got - want) / std::max(kahler::abs(want), floor);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline EvenElement random_even(std::mt19937_64& rng, double lo = -2.0, double hi = 2.0) {
  return {uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

}  // namespace testing_support
