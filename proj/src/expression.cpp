#include "cl3exp/expression.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "cl3exp/error.hpp"

namespace cl3 {
namespace {

class Parser {
 public:
  Parser(std::string_view text, Signature sig) : text_(text), sig_(sig) {}

  Multivector run() {
    skip_space();
    if (at_end()) throw ParseError("empty multivector expression", "", 0);
    Coefficients c{};
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1.0 : 1.0;
    }
    for (;;) {
      const auto [coef, blade] = term();
      c[blade] += sign * coef;
      skip_space();
      if (at_end()) break;
      const std::size_t at = pos_;
      const char op = take();
      if (op != '+' && op != '-') {
        throw ParseError(std::string("expected '+' or '-' but found '") + op + "' at position " +
                             std::to_string(at),
                         std::string(1, op), at);
      }
      sign = op == '-' ? -1.0 : 1.0;
    }
    return Multivector(sig_, c);
  }

 private:
  struct Term {
    double coef;
    std::size_t blade;
  };

  Term term() {
    skip_space();
    if (at_end()) throw ParseError("expression ends where a term was expected", "", pos_);
    if (peek() == 'e' || peek() == 'E') return Term{1.0, blade()};

    const double value = number();
    skip_space();
    if (!at_end() && peek() == '*') {
      take();
      skip_space();
      if (at_end() || (peek() != 'e' && peek() != 'E')) {
        const std::size_t at = pos_;
        throw ParseError("expected a blade label after '*' at position " + std::to_string(at),
                         at_end() ? "" : std::string(1, peek()), at);
      }
      return Term{value, blade()};
    }
    if (!at_end() && (peek() == 'e' || peek() == 'E')) return Term{value, blade()};
    return Term{value, 0};
  }

  double number() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    }
    // Exponent only when 'e' is followed by an optional sign and a digit.
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t e = end + 1;
      if (e < text_.size() && (text_[e] == '+' || text_[e] == '-')) ++e;
      if (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) {
        while (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) ++e;
        end = e;
      }
    }
    const std::string_view token = text_.substr(start, end - start);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || token == "." || ec != std::errc() || ptr != token.data() + token.size()) {
      const std::string bad = token.empty() ? std::string(1, text_[start]) : std::string(token);
      throw ParseError("invalid number '" + bad + "' at position " + std::to_string(start), bad,
                       start);
    }
    pos_ = end;
    return value;
  }

  std::size_t blade() {
    const std::size_t start = pos_;
    std::size_t end = pos_ + 1;
    while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    const std::string token(text_.substr(start, end - start));
    pos_ = end;
    for (std::size_t i = 1; i < kBladeCount; ++i) {
      if (token == kBladeLabels[i]) return i;
    }
    std::string why = "unknown blade label";
    if (token.size() > 1 && token[0] == 'e' &&
        token.find_first_not_of("123", 1) == std::string::npos) {
      why = "blade label digits must be strictly ascending (write e13 for -e31)";
    }
    throw ParseError(why + " '" + token + "' at position " + std::to_string(start), token, start);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  Signature sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Multivector parse_multivector(std::string_view text, Signature sig) {
  return Parser(text, sig).run();
}

std::string format_number(double x) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string format_multivector(const Multivector& m) {
  std::string out;
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    const double x = m[i];
    if (x == 0.0) continue;
    if (out.empty()) {
      out = format_number(x);
    } else {
      out += x < 0.0 ? " - " : " + ";
      out += format_number(x < 0.0 ? -x : x);
    }
    if (i != 0) {
      out += '*';
      out += kBladeLabels[i];
    }
  }
  return out.empty() ? "0" : out;
}

Signature parse_signature(std::string_view text) {
  const auto comma = text.find(',');
  int p = -1;
  int q = -1;
  const auto read = [](std::string_view s, int& v) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  if (comma == std::string_view::npos || !read(text.substr(0, comma), p) ||
      !read(text.substr(comma + 1), q)) {
    throw ParseError("algebra must be given as p,q (for example 3,0)", std::string(text), 0);
  }
  return Signature(p, q);
}

}  // namespace cl3
