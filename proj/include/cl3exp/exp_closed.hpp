#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "cl3exp/multivector.hpp"

namespace cl3 {

/// Vector-bivector mixing quantities a+ and a- of a multivector.
///
/// The squares are always set and carry their sign. The roots are set only
/// where the algebra defines them as reals: in Cl(0,3) both squares are
/// non-negative; in Cl(3,0)/Cl(1,2) a+ >= 0 while a- is signed (it follows
/// the sign of -2 I a^A); in Cl(2,1) the roots are left unset because the
/// exponential only needs the signed squares.
struct MixingScalars {
  Signature algebra;
  double a_plus_sq = 0.0;
  double a_minus_sq = 0.0;
  std::optional<double> a_plus;
  std::optional<double> a_minus;
};

/// Paired values co(x^2), si(x^2) that switch between trigonometric and
/// hyperbolic form with the sign of the argument.
struct SiCo {
  double co;
  double si;
};

/// How each half of a closed-form exponential was evaluated.
enum class Branch { Trig, Hyperbolic, Limit };

std::string_view to_string(Branch b) noexcept;

/// Closed-form result together with the quantities that selected the branch.
/// branches[0] belongs to a+, branches[1] to a-.
struct ExpReport {
  Multivector value;
  MixingScalars mixing;
  std::array<Branch, 2> branches;
};

/// Relative threshold below which a+^2 + a-^2 in Cl(3,0)/Cl(1,2) is taken as
/// zero (nilpotent vector+bivector part). Scaled by the squared max-abs
/// vector/bivector coefficient.
inline constexpr double kLimitEps = 1e-12;
inline constexpr double kLimitFloor = 1e-300;

/// |x^2| below which sico() switches to its Taylor expansion.
inline constexpr double kSiCoSeriesEps = 1e-8;

SiCo sico(double x_sq) noexcept;

MixingScalars mixing_cl03(const Multivector& a);
MixingScalars mixing_cl30(const Multivector& a);
MixingScalars mixing_cl21(const Multivector& a);

/// Mixing scalars for whichever algebra `a` lives in.
MixingScalars mixing(const Multivector& a);

Multivector exp_cl03(const Multivector& a);
Multivector exp_cl30_cl12(const Multivector& a);
Multivector exp_cl21(const Multivector& a);

/// Dispatches on the signature of `a`. Throws InvalidArgument when the
/// result is not representable as finite doubles.
Multivector exp_closed(const Multivector& a);
ExpReport exp_closed_report(const Multivector& a);

}  // namespace cl3
