// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace s2g {

/// True when `text` matches `[+-]? (digits ('.' digits)? | '.' digits)`.
bool is_numeral(std::string_view text);

/// Parses a numeral (see is_numeral); nullopt for anything else.
std::optional<double> parse_numeral(std::string_view text);

/// Shortest decimal text that reads back to `value`: 0.5 not 0.50, 29 not 29.0.
std::string canonical_number(double value);

}  // namespace s2g
