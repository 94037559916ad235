// SPDX-License-Identifier: Apache-2.0

#include "s2g/error.hpp"

#include <sstream>

namespace s2g {

namespace {

std::string describe_parse(const std::string& message,
                           const std::vector<std::string>& expected) {
  if (expected.empty()) return message;
  std::string out = message + " (expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out + ")";
}

}  // namespace

ParseError::ParseError(std::string message, SourcePos pos,
                       std::vector<std::string> expected)
    : Error(describe_parse(message, expected)),
      message_(std::move(message)),
      pos_(pos),
      expected_(std::move(expected)) {}

UnsupportedFeatureError::UnsupportedFeatureError(std::string construct,
                                                 std::string detail,
                                                 SourcePos pos)
    : Error("unsupported feature: " + construct +
            (detail.empty() ? "" : " (" + detail + ")")),
      construct_(std::move(construct)),
      pos_(pos) {}

std::string format_diagnostic(const std::string& file, const Error& error) {
  SourcePos pos;
  if (auto* parse = dynamic_cast<const ParseError*>(&error)) {
    pos = parse->pos();
  } else if (auto* unsupported =
                 dynamic_cast<const UnsupportedFeatureError*>(&error)) {
    pos = unsupported->pos();
  }
  std::ostringstream out;
  out << file << ':';
  if (pos.valid()) out << pos.line << ':' << pos.column << ':';
  out << ' ' << error.what();
  return out.str();
}

}  // namespace s2g
