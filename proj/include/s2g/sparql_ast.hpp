// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "s2g/error.hpp"
#include "s2g/rdf.hpp"

namespace s2g::sparql {

struct Variable {
  std::string name;  // without the leading '?'

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Subject or object position: a variable or a constant term.
using Node = std::variant<Variable, RdfTerm>;

inline bool is_variable(const Node& node) {
  return std::holds_alternative<Variable>(node);
}

struct TriplePattern {
  Node subject;
  RdfTerm predicate;  // always an IRI
  Node object;
  SourcePos pos;

  // Positions are diagnostics only and do not take part in equality.
  friend bool operator==(const TriplePattern& a, const TriplePattern& b) {
    return a.subject == b.subject && a.predicate == b.predicate &&
           a.object == b.object;
  }
};

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge };

const char* compare_op_symbol(CompareOp op);  // "=", "!=", ...

struct FilterExpr {
  enum class Kind { Compare, And, Or };

  Kind kind = Kind::Compare;
  // Compare
  CompareOp op = CompareOp::Eq;
  Variable lhs;
  Node rhs;
  // And / Or: exactly two operands
  std::vector<FilterExpr> operands;
  SourcePos pos;

  static FilterExpr compare(CompareOp op, Variable lhs, Node rhs,
                            SourcePos pos = {});
  static FilterExpr conjunction(FilterExpr a, FilterExpr b);
  static FilterExpr disjunction(FilterExpr a, FilterExpr b);

  friend bool operator==(const FilterExpr& a, const FilterExpr& b);
};

struct GroupPattern;

struct UnionPattern {
  std::vector<GroupPattern> branches;  // exactly two
  friend bool operator==(const UnionPattern&, const UnionPattern&) = default;
};

struct GroupPattern {
  std::vector<TriplePattern> patterns;
  std::vector<FilterExpr> filters;
  std::vector<GroupPattern> optionals;
  std::vector<UnionPattern> unions;

  bool empty() const {
    return patterns.empty() && filters.empty() && optionals.empty() &&
           unions.empty();
  }

  friend bool operator==(const GroupPattern&, const GroupPattern&) = default;
};

struct CountAggregate {
  Variable argument;
  bool distinct = false;
  Variable alias;

  friend bool operator==(const CountAggregate&, const CountAggregate&) = default;
};

using ProjectionItem = std::variant<Variable, CountAggregate>;

/// Output column name of a projection item.
const std::string& column_name(const ProjectionItem& item);

enum class SortDirection { Asc, Desc };

struct OrderKey {
  Variable variable;
  SortDirection direction = SortDirection::Asc;
  friend bool operator==(const OrderKey&, const OrderKey&) = default;
};

struct SelectQuery {
  std::map<std::string, std::string> prefixes;  // prefix name -> IRI base
  std::vector<ProjectionItem> projection;
  bool distinct = false;
  GroupPattern where;
  std::optional<Variable> group_by;
  std::vector<OrderKey> order_by;
  std::optional<std::int64_t> limit;
  std::optional<std::int64_t> offset;

  friend bool operator==(const SelectQuery&, const SelectQuery&) = default;
};

/// Variables bound by the group's own patterns and union branches; these are
/// the variables a FILTER in that group may reference.
std::vector<std::string> group_bound_variables(const GroupPattern& group);

/// Every variable mentioned anywhere in the group, optionals included, in
/// order of first appearance.
std::vector<std::string> all_variables(const GroupPattern& group);

/// Checks that projected, filtered, ordered and grouped variables are bound
/// where they are used and that the aggregate shape is supported. Throws
/// ScopingError or UnsupportedFeatureError.
void check_scoping(const SelectQuery& query);

}  // namespace s2g::sparql
