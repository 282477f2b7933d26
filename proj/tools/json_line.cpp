#include "json_line.hpp"

#include <cmath>
#include <json.hpp>

#include "cl3exp/expression.hpp"

namespace cl3::cli {
namespace {

std::string json_number(double v) { return std::isfinite(v) ? format_number(v) : "null"; }

std::string quoted(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

}  // namespace

void JsonLine::key(std::string_view k) {
  if (!body_.empty()) body_ += ',';
  body_ += quoted(k);
  body_ += ':';
}

JsonLine& JsonLine::number(std::string_view k, double v) {
  key(k);
  body_ += json_number(v);
  return *this;
}

JsonLine& JsonLine::integer(std::string_view k, long long v) {
  key(k);
  body_ += std::to_string(v);
  return *this;
}

JsonLine& JsonLine::optional_number(std::string_view k, std::optional<double> v) {
  return v ? number(k, *v) : null(k);
}

JsonLine& JsonLine::string(std::string_view k, std::string_view v) {
  key(k);
  body_ += quoted(v);
  return *this;
}

JsonLine& JsonLine::numbers(std::string_view k, std::span<const double> v) {
  key(k);
  body_ += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) body_ += ',';
    body_ += json_number(v[i]);
  }
  body_ += ']';
  return *this;
}

JsonLine& JsonLine::null(std::string_view k) {
  key(k);
  body_ += "null";
  return *this;
}

JsonLine& JsonLine::object(std::string_view k, const JsonLine& nested) {
  key(k);
  body_ += nested.str();
  return *this;
}

}  // namespace cl3::cli
