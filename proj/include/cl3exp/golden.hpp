#pragma once

#include <array>
#include <string_view>

#include "cl3exp/multivector.hpp"

namespace cl3 {

/// One of the seven reference exponentials (one per formula family and
/// sign case) used by `cl3exp selftest` and the acceptance suite.
struct WorkedExample {
  int number;
  Signature sig;
  std::string_view expression;
  double a_plus_sq;
  double a_minus_sq;
  /// exp of the expression, rounded from a 50-digit evaluation of the
  /// closed-form answer.
  Coefficients expected;
};

const std::array<WorkedExample, 7>& worked_examples();

}  // namespace cl3
