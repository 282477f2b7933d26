#pragma once

#include <functional>
#include <optional>

#include "cl3exp/multivector.hpp"

namespace cl3 {

using Forcing = std::function<Multivector(double)>;

/// Linear first-order multivector system dX/dt = A X (+ X B) (+ f(t)).
struct OdeProblem {
  Multivector a;
  std::optional<Multivector> b;
  Multivector x0;
  Forcing forcing;  // empty means homogeneous
  double t_end = 0.0;
  int steps = 2;

  /// Checks shared signature, steps >= 1 and a finite end time.
  void validate() const;
};

/// X(t) = exp(tA) X0, the solution of dX/dt = A X.
Multivector propagate_homogeneous(const Multivector& a, const Multivector& x0, double t);

/// X(t) = exp(tA) X0 + int_0^t exp((t - s)A) f(s) ds, with the integral done
/// by composite Simpson on `steps` intervals (rounded up to even).
/// Requires no two-sided coefficient.
Multivector propagate_forced(const OdeProblem& problem);

/// X(t) = exp(tA) X0 exp(tB), the solution of dX/dt = A X + X B.
Multivector propagate_two_sided(const Multivector& a, const Multivector& b,
                                const Multivector& x0, double t);

/// Constant-forcing closed form A^-1 (exp(tA) - 1) f, for checking the
/// quadrature path. Throws SingularError for non-invertible A.
Multivector constant_forcing_response(const Multivector& a, const Multivector& f, double t);

}  // namespace cl3
