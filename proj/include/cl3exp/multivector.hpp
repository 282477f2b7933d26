#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "cl3exp/signature.hpp"

namespace cl3 {

/// Basis blades in inverse degree lexicographic order. Only ascending labels
/// exist; e31 is represented as -e13.
enum class Blade : std::size_t { S = 0, E1, E2, E3, E12, E13, E23, E123 };

inline constexpr std::size_t kBladeCount = 8;

inline constexpr std::array<std::string_view, kBladeCount> kBladeLabels = {
    "1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"};

inline constexpr std::array<int, kBladeCount> kBladeGrade = {0, 1, 1, 1, 2, 2, 2, 3};

enum class InvolutionKind { Reverse, GradeInvolution, CliffordConjugate };

using Coefficients = std::array<double, kBladeCount>;

/// General element a0 + a + A + a123 I of one of the 3D algebras.
///
/// Values are immutable once built through the public constructors, which
/// reject non-finite coefficients. Arithmetic between multivectors of
/// different signatures throws InvalidArgument.
class Multivector {
 public:
  /// Zero in Cl(3,0).
  Multivector() : Multivector(Signature::cl30()) {}
  explicit Multivector(Signature sig) : sig_(sig), c_{} {}
  Multivector(Signature sig, const Coefficients& c);

  static Multivector scalar(Signature sig, double value);
  static Multivector blade(Signature sig, Blade b, double value = 1.0);
  static Multivector pseudoscalar(Signature sig, double value = 1.0) {
    return blade(sig, Blade::E123, value);
  }

  Signature sig() const noexcept { return sig_; }
  const Coefficients& coeffs() const noexcept { return c_; }
  std::span<const double, kBladeCount> span() const noexcept { return c_; }

  double operator[](Blade b) const noexcept { return c_[static_cast<std::size_t>(b)]; }
  double operator[](std::size_t i) const noexcept { return c_[i]; }

  double scalar_part() const noexcept { return c_[0]; }
  double pseudoscalar_part() const noexcept { return c_[7]; }
  bool is_finite() const noexcept;

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(double s);
  Multivector& operator/=(double s);

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  struct Unchecked {};
  Multivector(Signature sig, const Coefficients& c, Unchecked) : sig_(sig), c_(c) {}

  friend Multivector geometric_product(const Multivector&, const Multivector&);
  friend Multivector make_unchecked(Signature, const Coefficients&);

  Signature sig_;
  Coefficients c_;
};

/// Builds a multivector without the finiteness check. Intermediate results
/// of kernels that validate their own output use this.
Multivector make_unchecked(Signature sig, const Coefficients& c);

Multivector geometric_product(const Multivector& a, const Multivector& b);

inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}
inline Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
inline Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
inline Multivector operator*(Multivector a, double s) { return a *= s; }
inline Multivector operator*(double s, Multivector a) { return a *= s; }
inline Multivector operator/(Multivector a, double s) { return a /= s; }
Multivector operator+(Multivector a, double s);
inline Multivector operator+(double s, const Multivector& a) { return a + s; }
inline Multivector operator-(const Multivector& a, double s) { return a + (-s); }
inline Multivector operator-(double s, const Multivector& a) { return (-a) + s; }

/// Grade-k part, k in 0..3.
Multivector grade_project(const Multivector& a, int k);

/// Vector plus bivector part, the entangled piece of the exponent.
Multivector vector_bivector_part(const Multivector& a);

Multivector involution(const Multivector& a, InvolutionKind kind);
inline Multivector reverse(const Multivector& a) {
  return involution(a, InvolutionKind::Reverse);
}
inline Multivector grade_involution(const Multivector& a) {
  return involution(a, InvolutionKind::GradeInvolution);
}
inline Multivector clifford_conjugate(const Multivector& a) {
  return involution(a, InvolutionKind::CliffordConjugate);
}

/// Scalar part of the square of the grade-k projection (k = 1 gives a.a,
/// k = 2 gives A.A).
double quadratic_scalar(const Multivector& a, int k);

/// e123 coefficient of a ^ A.
double wedge_coefficient(const Multivector& a) noexcept;

/// I (a ^ A) as a real number: wedge_coefficient times I^2.
double wedge_mix_scalar(const Multivector& a) noexcept;

/// Scalar part of A conj(A) gradeinv(A) reverse(A).
double determinant(const Multivector& a);

/// Throws SingularError when |det| <= 1e-12 * max_abs(a)^4.
Multivector inverse(const Multivector& a);

double max_abs(const Multivector& a) noexcept;

/// max_abs(a - b); signatures must agree.
double max_abs_diff(const Multivector& a, const Multivector& b);

/// The 8x8 blade product table for a signature: blade i times blade j equals
/// sign * blade index.
struct ProductEntry {
  std::uint8_t index;
  std::int8_t sign;
};
using ProductTable = std::array<std::array<ProductEntry, kBladeCount>, kBladeCount>;

const ProductTable& product_table(Signature sig) noexcept;

}  // namespace cl3
