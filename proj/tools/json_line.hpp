#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace cl3::cli {

/// Writes one JSON object in insertion order. Numbers use 17 significant
/// digits so that every double survives a round trip through the text.
class JsonLine {
 public:
  JsonLine& number(std::string_view key, double v);
  JsonLine& integer(std::string_view key, long long v);
  JsonLine& optional_number(std::string_view key, std::optional<double> v);
  JsonLine& string(std::string_view key, std::string_view v);
  JsonLine& numbers(std::string_view key, std::span<const double> v);
  JsonLine& null(std::string_view key);
  /// Nested object, already serialized.
  JsonLine& object(std::string_view key, const JsonLine& nested);

  std::string str() const { return "{" + body_ + "}"; }

 private:
  void key(std::string_view k);
  std::string body_;
};

}  // namespace cl3::cli
