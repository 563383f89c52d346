#include "dsfuse/numbers.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace dsfuse {

std::optional<double> parse_real(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

namespace {

// Rewrites "d.ddde±XX" into plain decimal so the result is a valid
// xsd:decimal lexical form.
std::string expand_exponent(std::string_view compact) {
  const auto epos = compact.find_first_of("eE");
  std::string_view mantissa = compact.substr(0, epos);
  int exponent = std::atoi(std::string(compact.substr(epos + 1)).c_str());

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  int point = 0;  // digits before the decimal point
  bool seen_point = false;
  for (const char c : mantissa) {
    if (c == '.') {
      seen_point = true;
      continue;
    }
    digits += c;
    if (!seen_point) ++point;
  }
  point += exponent;

  std::string out;
  if (negative) out += '-';
  if (point <= 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-point), '0');
    out += digits;
  } else if (static_cast<std::size_t>(point) >= digits.size()) {
    out += digits;
    out.append(static_cast<std::size_t>(point) - digits.size(), '0');
  } else {
    out += digits.substr(0, static_cast<std::size_t>(point));
    out += '.';
    out += digits.substr(static_cast<std::size_t>(point));
  }
  // xsd:decimal requires a digit on both sides of the point.
  if (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

void trim_fraction(std::string& text) {
  if (text.find('.') == std::string::npos) return;
  while (!text.empty() && text.back() == '0') text.pop_back();
  if (!text.empty() && text.back() == '.') text.pop_back();
}

}  // namespace

std::string format_real(double value) {
  if (value == 0.0) return "0";  // also canonicalizes -0
  std::array<char, 64> buffer{};
  const auto [ptr, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                    std::chars_format::general, 12);
  std::string text(buffer.data(), ptr);
  if (text.find_first_of("eE") != std::string::npos) text = expand_exponent(text);
  trim_fraction(text);
  return text;
}

std::string format_fixed(double value) {
  std::array<char, 512> buffer{};
  const auto [ptr, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                    std::chars_format::fixed, 12);
  return std::string(buffer.data(), ptr);
}

double round_significant(double value) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  std::array<char, 64> buffer{};
  const auto [ptr, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                    std::chars_format::general, 12);
  double rounded = value;
  std::from_chars(buffer.data(), ptr, rounded);
  return rounded;
}

}  // namespace dsfuse
