#include "cl3exp/signature.hpp"

#include "cl3exp/error.hpp"

namespace cl3 {

Signature::Signature(int p, int q) : p_(static_cast<std::int8_t>(p)) {
  if (p < 0 || q < 0 || p + q != 3) {
    throw InvalidArgument("signature (" + std::to_string(p) + "," + std::to_string(q) +
                          ") is not one of (0,3), (3,0), (1,2), (2,1)");
  }
}

const std::array<Signature, 4>& Signature::all() noexcept {
  static const std::array<Signature, 4> sigs = {cl03(), cl30(), cl12(), cl21()};
  return sigs;
}

int Signature::basis_square(int i) const {
  if (i < 1 || i > 3) throw InvalidArgument("basis index must be 1, 2 or 3");
  return i <= p_ ? 1 : -1;
}

std::string Signature::to_string() const {
  return std::to_string(p()) + "," + std::to_string(q());
}

}  // namespace cl3
