#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace cl3 {

/// Metric signature (p, q) of a three-dimensional real Clifford algebra.
///
/// Only the four algebras with p + q = 3 are admissible. Basis vectors
/// e1..ep square to +1 and the remaining ones to -1.
class Signature {
 public:
  /// Throws InvalidArgument unless p + q == 3.
  Signature(int p, int q);

  static Signature cl03() noexcept { return Signature(0); }
  static Signature cl30() noexcept { return Signature(3); }
  static Signature cl12() noexcept { return Signature(1); }
  static Signature cl21() noexcept { return Signature(2); }

  static const std::array<Signature, 4>& all() noexcept;

  int p() const noexcept { return p_; }
  int q() const noexcept { return 3 - p_; }

  /// Square of basis vector e_i, i in 1..3.
  int basis_square(int i) const;

  /// e123 * e123: +1 for Cl(0,3) and Cl(2,1), -1 for Cl(3,0) and Cl(1,2).
  int pseudoscalar_square() const noexcept { return q() % 2 == 0 ? -1 : 1; }

  /// "p,q", the form accepted by the command line.
  std::string to_string() const;

  friend bool operator==(Signature, Signature) = default;

 private:
  explicit constexpr Signature(int p) noexcept : p_(p) {}
  std::int8_t p_;
};

}  // namespace cl3
