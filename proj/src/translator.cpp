// SPDX-License-Identifier: Apache-2.0

#include "s2g/translator.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace s2g {

namespace {

using sparql::CompareOp;
using sparql::FilterExpr;
using sparql::GroupPattern;
using sparql::Variable;

ir::PredicateTree::Op to_op(CompareOp op) {
  switch (op) {
    case CompareOp::Eq: return ir::PredicateTree::Op::Eq;
    case CompareOp::Ne: return ir::PredicateTree::Op::Neq;
    case CompareOp::Lt: return ir::PredicateTree::Op::Lt;
    case CompareOp::Le: return ir::PredicateTree::Op::Lte;
    case CompareOp::Gt: return ir::PredicateTree::Op::Gt;
    case CompareOp::Ge: return ir::PredicateTree::Op::Gte;
  }
  return ir::PredicateTree::Op::Eq;
}

ir::PredicateTree to_predicate(const FilterExpr& f) {
  switch (f.kind) {
    case FilterExpr::Kind::Compare:
      if (const auto* other = std::get_if<Variable>(&f.rhs)) {
        return ir::PredicateTree::leaf_key(f.lhs.name, to_op(f.op), other->name);
      }
      return ir::PredicateTree::leaf(f.lhs.name, to_op(f.op),
                                     term_to_value(std::get<RdfTerm>(f.rhs)));
    case FilterExpr::Kind::And:
    case FilterExpr::Kind::Or: {
      std::vector<ir::PredicateTree> children;
      for (const auto& op : f.operands) children.push_back(to_predicate(op));
      return f.kind == FilterExpr::Kind::And
                 ? ir::PredicateTree::all_of(std::move(children))
                 : ir::PredicateTree::any_of(std::move(children));
    }
  }
  return {};
}

class Translator {
 public:
  Translator(const sparql::SelectQuery& query, const TranslateOptions& options)
      : options_(options) {
    for (const auto& name : sparql::all_variables(query.where)) taken_.insert(name);
    for (const auto& item : query.projection) taken_.insert(sparql::column_name(item));
  }

  std::vector<ir::IrStep> group(const GroupPattern& g) {
    std::vector<ir::IrStep> steps;
    std::vector<SstInstruction> instructions;
    std::map<std::string, std::string> constants;  // IRI -> fresh variable

    auto anchor = [&](const RdfTerm& iri) -> sparql::Variable {
      auto it = constants.find(iri.lexical());
      if (it != constants.end()) return Variable{it->second};
      if (options_.registry.id_key.empty()) {
        throw ClassificationError("constant IRI " + iri.to_ntriples() +
                                  " needs an id property key");
      }
      std::string name = fresh();
      constants.emplace(iri.lexical(), name);
      instructions.push_back(SstInstruction{
          name,
          HasStep{options_.registry.id_key, PropertyValue::string(iri.lexical())},
          std::nullopt});
      return Variable{name};
    };

    for (const auto& tp : g.patterns) {
      SstCase c = classify(tp, options_.registry);
      if (!sparql::is_variable(c.start)) c.start = anchor(std::get<RdfTerm>(c.start));
      if ((c.tag == SstTag::Eout || c.tag == SstTag::Ein) &&
          !sparql::is_variable(c.end)) {
        c.end = anchor(std::get<RdfTerm>(c.end));
      }
      if (options_.incoming_edges) c = reverse_edge(c);
      instructions.push_back(map_to_instruction(c));
    }
    if (instructions.size() > 1) {
      steps.push_back(ir::MatchStep{std::move(instructions)});
    } else if (instructions.size() == 1) {
      steps.push_back(ir::PatternStep{std::move(instructions.front())});
    }

    for (const auto& u : g.unions) {
      ir::UnionStep step;
      for (const auto& branch : u.branches) {
        step.branches.push_back(ir::Traversal{group(branch)});
      }
      steps.push_back(std::move(step));
    }

    if (g.filters.size() == 1) {
      steps.push_back(ir::WhereTraversalStep{to_predicate(g.filters.front())});
    } else if (g.filters.size() > 1) {
      std::vector<ir::PredicateTree> all;
      for (const auto& f : g.filters) all.push_back(to_predicate(f));
      steps.push_back(
          ir::WhereTraversalStep{ir::PredicateTree::all_of(std::move(all))});
    }

    for (const auto& opt : g.optionals) {
      steps.push_back(ir::ChooseStep{ir::Traversal{group(opt)}});
    }
    return steps;
  }

 private:
  std::string fresh() {
    std::string name;
    do {
      name = "_c" + std::to_string(++counter_);
    } while (taken_.count(name));
    taken_.insert(name);
    return name;
  }

  const TranslateOptions& options_;
  std::set<std::string> taken_;
  int counter_ = 0;
};

}  // namespace

ir::Traversal translate(const sparql::SelectQuery& query,
                        const TranslateOptions& options) {
  sparql::check_scoping(query);
  Translator translator(query, options);
  ir::Traversal traversal;
  traversal.steps.push_back(ir::GraphStep{});
  for (auto& step : translator.group(query.where)) {
    traversal.steps.push_back(std::move(step));
  }
  return apply_modifiers(std::move(traversal), query);
}

ir::Traversal apply_modifiers(ir::Traversal traversal,
                              const sparql::SelectQuery& query) {
  auto& steps = traversal.steps;
  const sparql::CountAggregate* count = nullptr;
  std::vector<std::string> columns;
  for (const auto& item : query.projection) {
    columns.push_back(sparql::column_name(item));
    if (const auto* c = std::get_if<sparql::CountAggregate>(&item)) count = c;
  }

  if (count == nullptr) {
    steps.push_back(ir::SelectStep{columns});
    if (query.group_by) steps.push_back(ir::GroupStep{query.group_by->name});
  } else if (!query.group_by) {
    std::vector<std::string> keys{count->argument.name};
    steps.push_back(ir::SelectStep{keys});
    if (count->distinct) steps.push_back(ir::DedupStep{keys});
    steps.push_back(ir::CountStep{count->argument.name, count->alias.name});
  } else {
    std::vector<std::string> keys{query.group_by->name, count->argument.name};
    steps.push_back(ir::SelectStep{keys});
    if (count->distinct) steps.push_back(ir::DedupStep{keys});
    steps.push_back(ir::GroupCountStep{query.group_by->name,
                                       count->argument.name, count->alias.name});
  }

  if (!query.order_by.empty()) {
    ir::OrderStep order;
    for (const auto& key : query.order_by) {
      order.keys.emplace_back(key.variable.name, key.direction);
    }
    steps.push_back(std::move(order));
  }
  if (query.distinct) steps.push_back(ir::DedupStep{columns});
  if (query.limit || query.offset) {
    std::int64_t low = query.offset.value_or(0);
    std::optional<std::int64_t> high;
    if (query.limit) high = low + *query.limit;
    steps.push_back(ir::RangeStep{low, high});
  }
  return traversal;
}

}  // namespace s2g
