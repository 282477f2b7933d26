#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cl3 {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by inverse() when the determinant is numerically zero.
class SingularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The truncated series did not settle within the configured term budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_correction, int terms)
      : std::runtime_error(what), last_correction_(last_correction), terms_(terms) {}

  double last_correction() const noexcept { return last_correction_; }
  int terms() const noexcept { return terms_; }

 private:
  double last_correction_;
  int terms_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string token, std::size_t position)
      : std::runtime_error(what), token_(std::move(token)), position_(position) {}

  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

}  // namespace cl3
