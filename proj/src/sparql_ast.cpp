// SPDX-License-Identifier: Apache-2.0

#include "s2g/sparql_ast.hpp"

#include <algorithm>
#include <set>

namespace s2g::sparql {

const char* compare_op_symbol(CompareOp op) {
  switch (op) {
    case CompareOp::Eq: return "=";
    case CompareOp::Ne: return "!=";
    case CompareOp::Lt: return "<";
    case CompareOp::Le: return "<=";
    case CompareOp::Gt: return ">";
    case CompareOp::Ge: return ">=";
  }
  return "?";
}

FilterExpr FilterExpr::compare(CompareOp op, Variable lhs, Node rhs,
                               SourcePos pos) {
  FilterExpr f;
  f.kind = Kind::Compare;
  f.op = op;
  f.lhs = std::move(lhs);
  f.rhs = std::move(rhs);
  f.pos = pos;
  return f;
}

FilterExpr FilterExpr::conjunction(FilterExpr a, FilterExpr b) {
  FilterExpr f;
  f.kind = Kind::And;
  f.pos = a.pos;
  f.operands.push_back(std::move(a));
  f.operands.push_back(std::move(b));
  return f;
}

FilterExpr FilterExpr::disjunction(FilterExpr a, FilterExpr b) {
  FilterExpr f;
  f.kind = Kind::Or;
  f.pos = a.pos;
  f.operands.push_back(std::move(a));
  f.operands.push_back(std::move(b));
  return f;
}

bool operator==(const FilterExpr& a, const FilterExpr& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != FilterExpr::Kind::Compare) return a.operands == b.operands;
  return a.op == b.op && a.lhs == b.lhs && a.rhs == b.rhs;
}

const std::string& column_name(const ProjectionItem& item) {
  if (const auto* v = std::get_if<Variable>(&item)) return v->name;
  return std::get<CountAggregate>(item).alias.name;
}

namespace {

void note(std::vector<std::string>& out, const std::string& name) {
  if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
}

void pattern_variables(const TriplePattern& tp, std::vector<std::string>& out) {
  if (const auto* v = std::get_if<Variable>(&tp.subject)) note(out, v->name);
  if (const auto* v = std::get_if<Variable>(&tp.object)) note(out, v->name);
}

void filter_variables(const FilterExpr& f, std::vector<std::string>& out) {
  if (f.kind != FilterExpr::Kind::Compare) {
    for (const auto& op : f.operands) filter_variables(op, out);
    return;
  }
  note(out, f.lhs.name);
  if (const auto* v = std::get_if<Variable>(&f.rhs)) note(out, v->name);
}

bool contains(const std::vector<std::string>& names, const std::string& name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

void check_group(const GroupPattern& group,
                 const std::vector<std::string>& outer, bool in_union) {
  std::vector<std::string> bound = group_bound_variables(group);
  std::vector<std::string> visible = bound;
  for (const auto& name : outer) note(visible, name);

  for (const auto& filter : group.filters) {
    std::vector<std::string> used;
    filter_variables(filter, used);
    for (const auto& name : used) {
      if (!contains(visible, name)) {
        throw ScopingError("FILTER references ?" + name +
                           ", which the group's patterns do not bind");
      }
    }
  }
  for (const auto& u : group.unions) {
    if (in_union) {
      throw UnsupportedFeatureError("nested UNION", "UNION inside a UNION branch");
    }
    if (u.branches.size() != 2) {
      throw UnsupportedFeatureError("UNION", "exactly two branches supported");
    }
    for (const auto& branch : u.branches) {
      if (branch.patterns.empty()) {
        throw UnsupportedFeatureError("UNION", "branch without triple patterns");
      }
      check_group(branch, {}, true);
    }
  }
  if (!group.optionals.empty() && group.patterns.empty() &&
      group.unions.empty()) {
    throw UnsupportedFeatureError("OPTIONAL",
                                  "OPTIONAL needs preceding triple patterns");
  }
  for (const auto& opt : group.optionals) {
    if (opt.patterns.empty()) {
      throw UnsupportedFeatureError("OPTIONAL", "group without triple patterns");
    }
    check_group(opt, visible, in_union);
  }
}

}  // namespace

std::vector<std::string> group_bound_variables(const GroupPattern& group) {
  std::vector<std::string> out;
  for (const auto& tp : group.patterns) pattern_variables(tp, out);
  for (const auto& u : group.unions) {
    for (const auto& branch : u.branches) {
      for (const auto& name : group_bound_variables(branch)) note(out, name);
    }
  }
  return out;
}

std::vector<std::string> all_variables(const GroupPattern& group) {
  std::vector<std::string> out;
  for (const auto& tp : group.patterns) pattern_variables(tp, out);
  for (const auto& u : group.unions) {
    for (const auto& branch : u.branches) {
      for (const auto& name : all_variables(branch)) note(out, name);
    }
  }
  for (const auto& f : group.filters) filter_variables(f, out);
  for (const auto& opt : group.optionals) {
    for (const auto& name : all_variables(opt)) note(out, name);
  }
  return out;
}

void check_scoping(const SelectQuery& query) {
  if (query.projection.empty()) throw ScopingError("empty projection");
  if (query.where.empty()) {
    throw ScopingError("empty WHERE group: nothing to project");
  }
  check_group(query.where, {}, false);

  const std::vector<std::string> vars = all_variables(query.where);
  std::set<std::string> columns;
  std::size_t aggregates = 0;
  for (const auto& item : query.projection) {
    const std::string& name = column_name(item);
    if (!columns.insert(name).second) {
      throw ScopingError("duplicate projection column ?" + name);
    }
    if (const auto* v = std::get_if<Variable>(&item)) {
      if (!contains(vars, v->name)) {
        throw ScopingError("projected variable ?" + v->name +
                           " does not occur in the WHERE clause");
      }
      continue;
    }
    const auto& count = std::get<CountAggregate>(item);
    ++aggregates;
    if (!contains(vars, count.argument.name)) {
      throw ScopingError("COUNT argument ?" + count.argument.name +
                         " does not occur in the WHERE clause");
    }
    if (contains(vars, count.alias.name)) {
      throw ScopingError("alias ?" + count.alias.name +
                         " is already a variable of the WHERE clause");
    }
  }

  if (query.group_by && !contains(vars, query.group_by->name)) {
    throw ScopingError("GROUP BY variable ?" + query.group_by->name +
                       " does not occur in the WHERE clause");
  }
  if (aggregates > 1) {
    throw UnsupportedFeatureError("COUNT", "at most one aggregate per query");
  }
  if (aggregates == 1) {
    if (!query.group_by) {
      if (query.projection.size() != 1) {
        throw UnsupportedFeatureError(
            "COUNT", "without GROUP BY the aggregate must be the only column");
      }
    } else {
      const auto* key = std::get_if<Variable>(&query.projection.front());
      if (query.projection.size() != 2 || key == nullptr ||
          key->name != query.group_by->name) {
        throw UnsupportedFeatureError(
            "GROUP BY", "projection must be the group key followed by COUNT");
      }
    }
  }

  for (const auto& key : query.order_by) {
    const std::string& name = key.variable.name;
    if (aggregates > 0) {
      if (!columns.count(name)) {
        throw ScopingError("ORDER BY ?" + name +
                           " must be a projected column of an aggregate query");
      }
    } else if (!contains(vars, name)) {
      throw ScopingError("ORDER BY variable ?" + name +
                         " does not occur in the WHERE clause");
    }
  }
  if (query.limit && *query.limit < 0) throw ScopingError("negative LIMIT");
  if (query.offset && *query.offset < 0) throw ScopingError("negative OFFSET");
}

}  // namespace s2g::sparql
