#pragma once

#include <random>

#include "cl3exp/multivector.hpp"

namespace cl3::testing {

inline Multivector random_mv(Signature sig, std::mt19937_64& rng, double lo = -2.0,
                             double hi = 2.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Coefficients c{};
  for (double& x : c) x = u(rng);
  return Multivector(sig, c);
}

/// Random multivector restricted to the given blades (storage indices).
inline Multivector random_on(Signature sig, std::mt19937_64& rng,
                             std::initializer_list<std::size_t> blades, double lo = -2.0,
                             double hi = 2.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Coefficients c{};
  for (std::size_t i : blades) c[i] = u(rng);
  return Multivector(sig, c);
}

inline Multivector mv(Signature sig, const Coefficients& c) { return Multivector(sig, c); }

inline Multivector one(Signature sig) { return Multivector::scalar(sig, 1.0); }

/// Random invertible multivector whose determinant is not tiny relative to
/// its size, so that products with the inverse stay well conditioned.
inline Multivector random_invertible(Signature sig, std::mt19937_64& rng, double lo = -1.0,
                                     double hi = 1.0) {
  for (;;) {
    Multivector v = random_mv(sig, rng, lo, hi);
    const double m = max_abs(v);
    if (std::abs(determinant(v)) > 0.05 * m * m * m * m) return v;
  }
}

}  // namespace cl3::testing
