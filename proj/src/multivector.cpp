#include "cl3exp/multivector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "cl3exp/error.hpp"

namespace cl3 {
namespace {

// Storage index <-> bitmask over {e1, e2, e3}. The map happens to be its own
// inverse: e3 is mask 4 at index 3 and e12 is mask 3 at index 4.
constexpr std::array<unsigned, kBladeCount> kMask = {0, 1, 2, 4, 3, 5, 6, 7};

constexpr ProductTable build_table(int p) {
  ProductTable t{};
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    for (std::size_t j = 0; j < kBladeCount; ++j) {
      const unsigned a = kMask[i];
      const unsigned b = kMask[j];
      // Moving each factor of b leftwards past the higher factors of a.
      int swaps = 0;
      for (unsigned bit = 0; bit < 3; ++bit) {
        if (b & (1u << bit)) swaps += std::popcount(a >> (bit + 1));
      }
      int sign = swaps % 2 == 0 ? 1 : -1;
      const unsigned shared = a & b;
      for (unsigned bit = 0; bit < 3; ++bit) {
        if ((shared & (1u << bit)) && static_cast<int>(bit) >= p) sign = -sign;
      }
      t[i][j] = ProductEntry{static_cast<std::uint8_t>(kMask[a ^ b]),
                             static_cast<std::int8_t>(sign)};
    }
  }
  return t;
}

constexpr std::array<ProductTable, 4> kTables = {build_table(0), build_table(1),
                                                 build_table(2), build_table(3)};

void require_same(Signature a, Signature b) {
  if (!(a == b)) {
    throw InvalidArgument("signature mismatch: Cl(" + a.to_string() + ") vs Cl(" +
                          b.to_string() + ")");
  }
}

constexpr std::array<std::array<int, 4>, 3> kInvolutionSigns = {{
    {1, 1, -1, -1},  // reverse
    {1, -1, 1, -1},  // grade involution
    {1, -1, -1, 1},  // Clifford conjugate
}};

}  // namespace

const ProductTable& product_table(Signature sig) noexcept { return kTables[sig.p()]; }

Multivector::Multivector(Signature sig, const Coefficients& c) : sig_(sig), c_(c) {
  if (!is_finite()) throw InvalidArgument("multivector coefficients must be finite");
}

Multivector make_unchecked(Signature sig, const Coefficients& c) {
  return Multivector(sig, c, Multivector::Unchecked{});
}

Multivector Multivector::scalar(Signature sig, double value) {
  Coefficients c{};
  c[0] = value;
  return Multivector(sig, c);
}

Multivector Multivector::blade(Signature sig, Blade b, double value) {
  Coefficients c{};
  c[static_cast<std::size_t>(b)] = value;
  return Multivector(sig, c);
}

bool Multivector::is_finite() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](double x) { return std::isfinite(x); });
}

Multivector Multivector::operator-() const {
  Multivector r = *this;
  for (double& x : r.c_) x = -x;
  return r;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  require_same(sig_, rhs.sig_);
  for (std::size_t i = 0; i < kBladeCount; ++i) c_[i] += rhs.c_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  require_same(sig_, rhs.sig_);
  for (std::size_t i = 0; i < kBladeCount; ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& x : c_) x *= s;
  return *this;
}

Multivector& Multivector::operator/=(double s) {
  for (double& x : c_) x /= s;
  return *this;
}

Multivector operator+(Multivector a, double s) {
  Coefficients c = a.coeffs();
  c[0] += s;
  return make_unchecked(a.sig(), c);
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  require_same(a.sig_, b.sig_);
  const ProductTable& t = product_table(a.sig_);
  Coefficients r{};
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    const double ai = a.c_[i];
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < kBladeCount; ++j) {
      const ProductEntry e = t[i][j];
      r[e.index] += e.sign * ai * b.c_[j];
    }
  }
  return Multivector(a.sig_, r, Multivector::Unchecked{});
}

Multivector grade_project(const Multivector& a, int k) {
  if (k < 0 || k > 3) throw InvalidArgument("grade must be in 0..3");
  Coefficients c{};
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    if (kBladeGrade[i] == k) c[i] = a[i];
  }
  return make_unchecked(a.sig(), c);
}

Multivector vector_bivector_part(const Multivector& a) {
  Coefficients c = a.coeffs();
  c[0] = 0.0;
  c[7] = 0.0;
  return make_unchecked(a.sig(), c);
}

Multivector involution(const Multivector& a, InvolutionKind kind) {
  const auto& signs = kInvolutionSigns[static_cast<std::size_t>(kind)];
  Coefficients c = a.coeffs();
  for (std::size_t i = 0; i < kBladeCount; ++i) c[i] *= signs[kBladeGrade[i]];
  return make_unchecked(a.sig(), c);
}

double quadratic_scalar(const Multivector& a, int k) {
  if (k != 1 && k != 2) throw InvalidArgument("quadratic_scalar: grade must be 1 or 2");
  const Multivector part = grade_project(a, k);
  return (part * part).scalar_part();
}

double wedge_coefficient(const Multivector& a) noexcept {
  return a[Blade::E1] * a[Blade::E23] - a[Blade::E2] * a[Blade::E13] +
         a[Blade::E3] * a[Blade::E12];
}

double wedge_mix_scalar(const Multivector& a) noexcept {
  return wedge_coefficient(a) * a.sig().pseudoscalar_square();
}

double determinant(const Multivector& a) {
  return (a * clifford_conjugate(a) * grade_involution(a) * reverse(a)).scalar_part();
}

Multivector inverse(const Multivector& a) {
  const Multivector adj = clifford_conjugate(a) * grade_involution(a) * reverse(a);
  const double det = (a * adj).scalar_part();
  const double m = max_abs(a);
  const double m2 = m * m;
  if (!(std::abs(det) > 1e-12 * m2 * m2)) {
    throw SingularError("multivector is not invertible (determinant " +
                        std::to_string(det) + ")");
  }
  return adj / det;
}

double max_abs(const Multivector& a) noexcept {
  double m = 0.0;
  for (double x : a.coeffs()) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(const Multivector& a, const Multivector& b) {
  require_same(a.sig(), b.sig());
  double m = 0.0;
  for (std::size_t i = 0; i < kBladeCount; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace cl3
