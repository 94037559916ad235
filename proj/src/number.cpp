// SPDX-License-Identifier: Apache-2.0

#include "s2g/number.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace s2g {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool is_numeral(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t int_digits = 0;
  while (i < text.size() && is_digit(text[i])) ++i, ++int_digits;
  std::size_t frac_digits = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && is_digit(text[i])) ++i, ++frac_digits;
    if (frac_digits == 0 && int_digits == 0) return false;
    // "5." is not a numeral: the dot would be read as a statement end.
    if (frac_digits == 0) return false;
  }
  return i == text.size() && (int_digits + frac_digits) > 0;
}

std::optional<double> parse_numeral(std::string_view text) {
  if (!is_numeral(text)) return std::nullopt;
  std::string buffer(text.size() > 0 && text[0] == '+' ? text.substr(1) : text);
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc() || ptr != buffer.data() + buffer.size()) {
    return std::nullopt;
  }
  return value;
}

std::string canonical_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  if (std::isfinite(value) && std::trunc(value) == value &&
      std::fabs(value) < 1e15) {
    char buf[32];
    auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof buf, static_cast<long long>(value));
    return std::string(buf, ptr);
  }
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  if (ec != std::errc()) {
    auto [p2, e2] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, p2);
  }
  return std::string(buf, ptr);
}

}  // namespace s2g
