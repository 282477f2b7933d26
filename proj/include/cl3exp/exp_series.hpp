#pragma once

#include "cl3exp/multivector.hpp"

namespace cl3 {

struct SeriesConfig {
  int max_terms = 200;
  /// Max-abs size of an added series term that counts as settled.
  double target_tol = 1e-16;
  /// Arguments are halved until their max-abs coefficient is at most this.
  double scale_threshold = 1.0;

  /// Throws InvalidArgument on a non-positive field.
  void validate() const;
};

struct SeriesResult {
  Multivector value;
  int terms = 0;
  int scaling_exponent = 0;
  double last_correction = 0.0;
};

/// Degree-n truncated exponential by nested (Horner) evaluation,
/// B <- 1 + B A / s for s = n, ..., 1. No scaling.
Multivector exp_horner(const Multivector& a, int n);

/// exp(a) = exp(a / 2^k)^(2^k) with the inner exponential summed term by
/// term until two consecutive terms drop below cfg.target_tol.
/// Throws ConvergenceError if cfg.max_terms is reached first.
SeriesResult exp_series_report(const Multivector& a, const SeriesConfig& cfg = {});

inline Multivector exp_series_scaled(const Multivector& a, const SeriesConfig& cfg = {}) {
  return exp_series_report(a, cfg).value;
}

}  // namespace cl3
