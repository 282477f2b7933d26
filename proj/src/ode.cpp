#include "cl3exp/ode.hpp"

#include <cmath>

#include "cl3exp/error.hpp"
#include "cl3exp/exp_closed.hpp"

namespace cl3 {

void OdeProblem::validate() const {
  if (!(a.sig() == x0.sig()) || (b && !(b->sig() == a.sig()))) {
    throw InvalidArgument("ode: coefficients and initial value must share a signature");
  }
  if (steps < 1) throw InvalidArgument("ode: steps must be >= 1");
  if (!std::isfinite(t_end)) throw InvalidArgument("ode: t_end must be finite");
}

Multivector propagate_homogeneous(const Multivector& a, const Multivector& x0, double t) {
  return exp_closed(t * a) * x0;
}

Multivector propagate_two_sided(const Multivector& a, const Multivector& b,
                                const Multivector& x0, double t) {
  return exp_closed(t * a) * x0 * exp_closed(t * b);
}

Multivector propagate_forced(const OdeProblem& problem) {
  problem.validate();
  if (problem.b) throw InvalidArgument("ode: forcing is only supported for dX/dt = A X + f");
  const Multivector& a = problem.a;
  const double t = problem.t_end;
  Multivector x = propagate_homogeneous(a, problem.x0, t);
  if (!problem.forcing) return x;
  if (problem.steps < 2) throw InvalidArgument("ode: forced propagation needs steps >= 2");

  const int n = problem.steps % 2 == 0 ? problem.steps : problem.steps + 1;
  const double h = t / n;
  Multivector integral(a.sig());
  for (int i = 0; i <= n; ++i) {
    const double s = i * h;
    const double weight = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    integral += weight * (exp_closed((t - s) * a) * problem.forcing(s));
  }
  x += (h / 3.0) * integral;
  return x;
}

Multivector constant_forcing_response(const Multivector& a, const Multivector& f, double t) {
  return inverse(a) * (exp_closed(t * a) - 1.0) * f;
}

}  // namespace cl3
