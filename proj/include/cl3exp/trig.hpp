#pragma once

#include "cl3exp/exp_series.hpp"
#include "cl3exp/multivector.hpp"

namespace cl3 {

Multivector cosh_mv(const Multivector& a);
Multivector sinh_mv(const Multivector& a);

/// Where I^2 = -1 (Cl(3,0), Cl(1,2)) these go through exp(+-I a). Where
/// I^2 = +1 there is no such shortcut and the even/odd parts of the power
/// series are summed directly, with argument halving and double-angle
/// reconstruction for large arguments; `cfg` controls that path only.
Multivector cos_mv(const Multivector& a, const SeriesConfig& cfg = {});
Multivector sin_mv(const Multivector& a, const SeriesConfig& cfg = {});

struct CosSin {
  Multivector cos;
  Multivector sin;
};

/// Both functions from one evaluation.
CosSin cos_sin_mv(const Multivector& a, const SeriesConfig& cfg = {});

}  // namespace cl3
