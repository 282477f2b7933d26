#include "cl3exp/exp_closed.hpp"

#include <algorithm>
#include <cmath>

#include "cl3exp/error.hpp"

namespace cl3 {
namespace {

void require_algebra(const Multivector& a, bool ok, const char* who) {
  if (!ok) {
    throw InvalidArgument(std::string(who) + ": unsupported algebra Cl(" +
                          a.sig().to_string() + ")");
  }
  if (!a.is_finite()) throw InvalidArgument(std::string(who) + ": non-finite input");
}

double inner_square_sum(const Multivector& a) {
  return quadratic_scalar(a, 1) + quadratic_scalar(a, 2);
}

Branch sico_branch(double x_sq) noexcept {
  if (std::abs(x_sq) < kSiCoSeriesEps) return Branch::Limit;
  return x_sq > 0.0 ? Branch::Trig : Branch::Hyperbolic;
}

Multivector finite_or_throw(Multivector m, const char* who) {
  if (!m.is_finite()) {
    throw InvalidArgument(std::string(who) + ": result overflows double precision");
  }
  return m;
}

// 1/2 e^{a0} [ e^{a123}(1+I)(co(a+^2) + si(a+^2) A) + e^{-a123}(1-I)(co(a-^2) + si(a-^2) A) ]
// shared by Cl(0,3) and Cl(2,1), where I^2 = +1 and (1 +- I)/2 are idempotents.
Multivector idempotent_split_exp(const Multivector& a, const MixingScalars& mix) {
  const Signature sig = a.sig();
  const Multivector vb = vector_bivector_part(a);
  const Multivector one = Multivector::scalar(sig, 1.0);
  const Multivector pss = Multivector::pseudoscalar(sig);

  const SiCo plus = sico(mix.a_plus_sq);
  const SiCo minus = sico(mix.a_minus_sq);

  const double a0 = a.scalar_part();
  const double a123 = a.pseudoscalar_part();
  const double w_plus = 0.5 * std::exp(a0 + a123);
  const double w_minus = 0.5 * std::exp(a0 - a123);

  const Multivector half_plus = (one + pss) * (plus.si * vb + plus.co);
  const Multivector half_minus = (one - pss) * (minus.si * vb + minus.co);
  return w_plus * half_plus + w_minus * half_minus;
}

}  // namespace

std::string_view to_string(Branch b) noexcept {
  switch (b) {
    case Branch::Trig:
      return "trig";
    case Branch::Hyperbolic:
      return "hyperbolic";
    case Branch::Limit:
      return "limit";
  }
  return "limit";
}

SiCo sico(double x_sq) noexcept {
  if (std::abs(x_sq) < kSiCoSeriesEps) {
    // Same expansion serves both signs: sin(r)/r and sinh(r)/r with r^2 = +-x.
    return SiCo{1.0 - x_sq / 2.0 + x_sq * x_sq / 24.0,
                1.0 - x_sq / 6.0 + x_sq * x_sq / 120.0};
  }
  if (x_sq > 0.0) {
    const double r = std::sqrt(x_sq);
    return SiCo{std::cos(r), std::sin(r) / r};
  }
  const double r = std::sqrt(-x_sq);
  return SiCo{std::cosh(r), std::sinh(r) / r};
}

MixingScalars mixing_cl03(const Multivector& a) {
  require_algebra(a, a.sig() == Signature::cl03(), "mixing_cl03");
  const double s = inner_square_sum(a);
  const double w = wedge_mix_scalar(a);
  MixingScalars m{a.sig(), 0.0, 0.0, std::nullopt, std::nullopt};
  // Both are sums of three squares; clamp the rounding residue.
  m.a_minus_sq = std::max(0.0, -s + 2.0 * w);
  m.a_plus_sq = std::max(0.0, -s - 2.0 * w);
  m.a_minus = std::sqrt(m.a_minus_sq);
  m.a_plus = std::sqrt(m.a_plus_sq);
  return m;
}

MixingScalars mixing_cl30(const Multivector& a) {
  require_algebra(a, a.sig() == Signature::cl30() || a.sig() == Signature::cl12(),
                  "mixing_cl30");
  const double s = inner_square_sum(a);
  const double w = wedge_mix_scalar(a);
  // (a^A)^2 = -wedge^2 here, so the discriminant is s^2 + 4 wedge^2.
  const double root_d = std::hypot(s, 2.0 * wedge_coefficient(a));

  double a_plus = 0.0;
  double a_minus = 0.0;
  // a+ a- = -w always; pick the root that avoids cancellation and recover
  // the other from the product.
  if (s >= 0.0) {
    a_plus = std::sqrt(0.5 * (s + root_d));
    a_minus = a_plus > 0.0 ? -w / a_plus : 0.0;
  } else {
    const double minus_mag = std::sqrt(0.5 * (root_d - s));
    a_plus = std::abs(w) / minus_mag;
    a_minus = w > 0.0 ? -minus_mag : minus_mag;
  }

  MixingScalars m{a.sig(), 0.0, 0.0, std::nullopt, std::nullopt};
  m.a_plus = a_plus;
  m.a_minus = a_minus;
  m.a_plus_sq = a_plus * a_plus;
  m.a_minus_sq = a_minus * a_minus;
  return m;
}

MixingScalars mixing_cl21(const Multivector& a) {
  require_algebra(a, a.sig() == Signature::cl21(), "mixing_cl21");
  const double s = inner_square_sum(a);
  const double w = wedge_mix_scalar(a);
  MixingScalars m{a.sig(), 0.0, 0.0, std::nullopt, std::nullopt};
  m.a_minus_sq = -s + 2.0 * w;
  m.a_plus_sq = -s - 2.0 * w;
  return m;
}

MixingScalars mixing(const Multivector& a) {
  const Signature sig = a.sig();
  if (sig == Signature::cl03()) return mixing_cl03(a);
  if (sig == Signature::cl21()) return mixing_cl21(a);
  return mixing_cl30(a);
}

Multivector exp_cl03(const Multivector& a) {
  require_algebra(a, a.sig() == Signature::cl03(), "exp_cl03");
  return finite_or_throw(idempotent_split_exp(a, mixing_cl03(a)), "exp_cl03");
}

Multivector exp_cl21(const Multivector& a) {
  require_algebra(a, a.sig() == Signature::cl21(), "exp_cl21");
  return finite_or_throw(idempotent_split_exp(a, mixing_cl21(a)), "exp_cl21");
}

Multivector exp_cl30_cl12(const Multivector& a) {
  require_algebra(a, a.sig() == Signature::cl30() || a.sig() == Signature::cl12(),
                  "exp_cl30_cl12");
  const MixingScalars mix = mixing_cl30(a);
  const Signature sig = a.sig();
  const Multivector vb = vector_bivector_part(a);
  const Multivector pss = Multivector::pseudoscalar(sig);

  const double a0 = a.scalar_part();
  const double a123 = a.pseudoscalar_part();
  const double ea0 = std::exp(a0);
  // e^{a0} (cos a123 + I sin a123)
  const Multivector centre =
      Multivector::scalar(sig, ea0 * std::cos(a123)) + pss * (ea0 * std::sin(a123));

  const double ap = *mix.a_plus;
  const double am = *mix.a_minus;
  const double norm = mix.a_plus_sq + mix.a_minus_sq;
  const double scale = max_abs(vb);
  const double threshold = std::max(kLimitEps * scale * scale, kLimitFloor);

  Multivector inner(sig);
  if (norm <= threshold) {
    // Nilpotent limit. With z^2 = -(a+A)^2 = -(s + 2 wedge I) the series
    // cos z + A sin(z)/z is truncated after its first correction, which
    // vanishes identically when (a+A)^2 = 0.
    const Multivector z_sq = -(vb * vb);
    inner = (1.0 - 0.5 * z_sq) + (1.0 - z_sq / 6.0) * vb;
  } else {
    const double cm = std::cos(am);
    const double sm = std::sin(am);
    const double chp = std::cosh(ap);
    const double shp = std::sinh(ap);
    const Multivector lead = Multivector::scalar(sig, cm * chp) + pss * (sm * shp);
    const Multivector factor = Multivector::scalar(sig, chp * sm) - pss * (cm * shp);
    const Multivector mixed = am * vb + ap * (pss * vb);
    inner = lead + factor * mixed / norm;
  }
  return finite_or_throw(centre * inner, "exp_cl30_cl12");
}

Multivector exp_closed(const Multivector& a) {
  const Signature sig = a.sig();
  if (sig == Signature::cl03()) return exp_cl03(a);
  if (sig == Signature::cl21()) return exp_cl21(a);
  return exp_cl30_cl12(a);
}

ExpReport exp_closed_report(const Multivector& a) {
  ExpReport r{exp_closed(a), mixing(a), {Branch::Limit, Branch::Limit}};
  const Signature sig = a.sig();
  if (sig == Signature::cl03() || sig == Signature::cl21()) {
    r.branches = {sico_branch(r.mixing.a_plus_sq), sico_branch(r.mixing.a_minus_sq)};
    return r;
  }
  const double scale = max_abs(vector_bivector_part(a));
  const double threshold = std::max(kLimitEps * scale * scale, kLimitFloor);
  if (r.mixing.a_plus_sq + r.mixing.a_minus_sq > threshold) {
    r.branches = {*r.mixing.a_plus > 0.0 ? Branch::Hyperbolic : Branch::Limit,
                  *r.mixing.a_minus != 0.0 ? Branch::Trig : Branch::Limit};
  }
  return r;
}

}  // namespace cl3
