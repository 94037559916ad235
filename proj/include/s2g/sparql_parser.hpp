// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "s2g/prefix_registry.hpp"
#include "s2g/sparql_ast.hpp"

namespace s2g::sparql {

struct ParseOptions {
  /// Prefixes usable without a PREFIX declaration (name -> IRI base).
  /// Defaults to v: and e: mapped to themselves.
  std::map<std::string, std::string> implicit_prefixes = {{"v", "v:"},
                                                          {"e", "e:"}};
};

/// Implicit prefixes matching a registry's markers.
ParseOptions parse_options_for(const PrefixRegistry& registry);

/// Parses a SPARQL 1.0 SELECT query of the supported subset. Prefixed names
/// are expanded to full IRIs. Throws ParseError on syntax errors and
/// UnsupportedFeatureError for REGEX, variable predicates, property paths,
/// blank nodes, and non-SELECT query forms.
SelectQuery parse(std::string_view text, const ParseOptions& options = {});

/// The top-level group's triple patterns in source order. Patterns inside
/// OPTIONAL and UNION sub-groups are not included.
std::vector<TriplePattern> getAllBGPs(const SelectQuery& query);

/// Renders a query that parse() maps back to an equal AST.
std::string pretty_print(const SelectQuery& query);

}  // namespace s2g::sparql
