#include "cl3exp/trig.hpp"

#include <cmath>
#include <string>

#include "cl3exp/error.hpp"
#include "cl3exp/exp_closed.hpp"

namespace cl3 {
namespace {

// cos and sin of `a` by their power series, assuming a is small enough for
// fast factorial convergence.
CosSin cos_sin_series(const Multivector& a, const SeriesConfig& cfg) {
  const Multivector a_sq = a * a;
  Multivector c = Multivector::scalar(a.sig(), 1.0);
  Multivector s = a;
  Multivector c_term = c;
  Multivector s_term = s;
  int small_in_a_row = 0;
  double correction = 1.0;
  int k = 0;
  while (small_in_a_row < 2) {
    if (k >= cfg.max_terms) {
      throw ConvergenceError("cos_sin: no convergence after " + std::to_string(k) + " terms",
                             correction, k);
    }
    ++k;
    const double two_k = 2.0 * k;
    c_term = c_term * a_sq * (-1.0 / ((two_k - 1.0) * two_k));
    s_term = s_term * a_sq * (-1.0 / (two_k * (two_k + 1.0)));
    c += c_term;
    s += s_term;
    correction = std::max(max_abs(c_term), max_abs(s_term));
    small_in_a_row = correction < cfg.target_tol ? small_in_a_row + 1 : 0;
  }
  return CosSin{c, s};
}

CosSin cos_sin_split(const Multivector& a, const SeriesConfig& cfg) {
  cfg.validate();
  int k = 0;
  const double m = max_abs(a);
  if (m > cfg.scale_threshold) k = static_cast<int>(std::ceil(std::log2(m / cfg.scale_threshold)));
  CosSin r = cos_sin_series(std::ldexp(1.0, -k) * a, cfg);
  for (int i = 0; i < k; ++i) {
    const Multivector c2 = r.cos * r.cos - r.sin * r.sin;
    r.sin = 2.0 * (r.sin * r.cos);
    r.cos = c2;
  }
  return r;
}

CosSin cos_sin_via_exp(const Multivector& a) {
  const Multivector pss = Multivector::pseudoscalar(a.sig());
  const Multivector ia = pss * a;
  const Multivector ep = exp_closed(ia);
  const Multivector em = exp_closed(-ia);
  return CosSin{0.5 * (ep + em), (ep - em) * inverse(2.0 * pss)};
}

}  // namespace

Multivector cosh_mv(const Multivector& a) {
  return 0.5 * (exp_closed(a) + exp_closed(-a));
}

Multivector sinh_mv(const Multivector& a) {
  return 0.5 * (exp_closed(a) - exp_closed(-a));
}

CosSin cos_sin_mv(const Multivector& a, const SeriesConfig& cfg) {
  if (!a.is_finite()) throw InvalidArgument("cos_sin: non-finite input");
  CosSin r = a.sig().pseudoscalar_square() < 0 ? cos_sin_via_exp(a) : cos_sin_split(a, cfg);
  if (!r.cos.is_finite() || !r.sin.is_finite()) {
    throw InvalidArgument("cos_sin: result overflows double precision");
  }
  return r;
}

Multivector cos_mv(const Multivector& a, const SeriesConfig& cfg) {
  return cos_sin_mv(a, cfg).cos;
}

Multivector sin_mv(const Multivector& a, const SeriesConfig& cfg) {
  return cos_sin_mv(a, cfg).sin;
}

}  // namespace cl3
