#include "cl3exp/exp_series.hpp"

#include <cmath>
#include <string>

#include "cl3exp/error.hpp"

namespace cl3 {

void SeriesConfig::validate() const {
  if (max_terms < 1) throw InvalidArgument("series: max_terms must be >= 1");
  if (!(target_tol > 0.0)) throw InvalidArgument("series: target_tol must be > 0");
  if (!(scale_threshold > 0.0)) throw InvalidArgument("series: scale_threshold must be > 0");
}

Multivector exp_horner(const Multivector& a, int n) {
  if (n < 1) throw InvalidArgument("exp_horner: n must be >= 1");
  Multivector b = Multivector::scalar(a.sig(), 1.0);
  for (int s = n; s > 0; --s) b = 1.0 + b * (a / static_cast<double>(s));
  return b;
}

SeriesResult exp_series_report(const Multivector& a, const SeriesConfig& cfg) {
  cfg.validate();
  if (!a.is_finite()) throw InvalidArgument("exp_series: non-finite input");

  int k = 0;
  const double m = max_abs(a);
  if (m > cfg.scale_threshold) k = static_cast<int>(std::ceil(std::log2(m / cfg.scale_threshold)));
  const Multivector scaled = std::ldexp(1.0, -k) * a;

  Multivector sum = Multivector::scalar(a.sig(), 1.0);
  Multivector term = sum;
  double correction = 1.0;
  int small_in_a_row = 0;
  int n = 0;
  // Convergence is not monotone for large arguments, so one small term is
  // not enough to stop.
  while (small_in_a_row < 2) {
    if (n >= cfg.max_terms) {
      throw ConvergenceError("exp_series: no convergence after " + std::to_string(n) +
                                 " terms (last correction " + std::to_string(correction) + ")",
                             correction, n);
    }
    ++n;
    term = term * scaled / static_cast<double>(n);
    sum += term;
    correction = max_abs(term);
    small_in_a_row = correction < cfg.target_tol ? small_in_a_row + 1 : 0;
  }

  for (int i = 0; i < k; ++i) sum = sum * sum;
  if (!sum.is_finite()) throw InvalidArgument("exp_series: result overflows double precision");
  return SeriesResult{sum, n, k, correction};
}

}  // namespace cl3
