#pragma once

#include <string>
#include <string_view>

#include "cl3exp/multivector.hpp"

namespace cl3 {

/// Parses sums of signed terms such as "-8 - 6*e2 + 5e-1*e13 + e123".
///
///   expression := ['+'|'-'] term (('+'|'-') term)*
///   term       := number ['*'] blade | number | blade
///
/// Blade labels are 1, e1, e2, e3, e12, e13, e23, e123; digits must be
/// strictly ascending, so e31 is rejected rather than rewritten as -e13.
/// A number directly followed by 'e' and digits reads as an exponent
/// ("2e12" is 2000000000000); write "2*e12" or "2 e12" for the blade.
/// Repeated blades are summed. Throws ParseError naming the offending token
/// and its 0-based position.
Multivector parse_multivector(std::string_view text, Signature sig);

/// 17 significant digits, trailing zeros dropped (printf %.17g).
std::string format_number(double x);

/// Inverse of parse_multivector: terms in storage order, zero terms
/// dropped, "0" for the zero multivector. Re-parsing is bit-exact.
std::string format_multivector(const Multivector& m);

/// Parses "p,q" into a signature; throws ParseError on bad syntax and
/// InvalidArgument on an inadmissible pair.
Signature parse_signature(std::string_view text);

}  // namespace cl3
