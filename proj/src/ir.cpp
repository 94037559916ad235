// SPDX-License-Identifier: Apache-2.0

#include "s2g/ir.hpp"

#include <algorithm>
#include <set>

namespace s2g::ir {

PredicateTree PredicateTree::leaf(std::string key, Op op, PropertyValue value) {
  PredicateTree t;
  t.kind = Kind::Leaf;
  t.key = std::move(key);
  t.op = op;
  t.operand = std::move(value);
  return t;
}

PredicateTree PredicateTree::leaf_key(std::string key, Op op,
                                      std::string other) {
  PredicateTree t;
  t.kind = Kind::Leaf;
  t.key = std::move(key);
  t.op = op;
  t.operand = std::move(other);
  return t;
}

PredicateTree PredicateTree::all_of(std::vector<PredicateTree> children) {
  PredicateTree t;
  t.kind = Kind::And;
  t.children = std::move(children);
  return t;
}

PredicateTree PredicateTree::any_of(std::vector<PredicateTree> children) {
  PredicateTree t;
  t.kind = Kind::Or;
  t.children = std::move(children);
  return t;
}

const char* op_name(PredicateTree::Op op) {
  switch (op) {
    case PredicateTree::Op::Eq: return "eq";
    case PredicateTree::Op::Neq: return "neq";
    case PredicateTree::Op::Lt: return "lt";
    case PredicateTree::Op::Lte: return "lte";
    case PredicateTree::Op::Gt: return "gt";
    case PredicateTree::Op::Gte: return "gte";
  }
  return "?";
}

namespace {

struct Scan {
  std::set<std::string> produced;
  std::vector<std::string> missing;

  void use(const std::string& name) {
    if (!produced.count(name) &&
        std::find(missing.begin(), missing.end(), name) == missing.end()) {
      missing.push_back(name);
    }
  }

  void use(const PredicateTree& t) {
    if (t.kind != PredicateTree::Kind::Leaf) {
      for (const auto& c : t.children) use(c);
      return;
    }
    use(t.key);
    if (t.compares_keys()) use(std::get<std::string>(t.operand));
  }

  void produce(const SstInstruction& ins) {
    produced.insert(ins.start);
    if (ins.end) produced.insert(*ins.end);
  }

  void traversal(const Traversal& t) {
    for (const auto& step : t.steps) this->step(step);
  }

  void nested(const Traversal& t) {
    Scan inner{produced, {}};
    inner.traversal(t);
    for (const auto& name : inner.missing) use(name);
    produced.insert(inner.produced.begin(), inner.produced.end());
  }

  void step(const IrStep& s) {
    std::visit(
        [&](const auto& st) {
          using T = std::decay_t<decltype(st)>;
          if constexpr (std::is_same_v<T, MatchStep>) {
            for (const auto& p : st.patterns) produce(p);
          } else if constexpr (std::is_same_v<T, PatternStep>) {
            produce(st.pattern);
          } else if constexpr (std::is_same_v<T, WhereTraversalStep>) {
            use(st.predicate);
          } else if constexpr (std::is_same_v<T, UnionStep>) {
            for (const auto& b : st.branches) nested(b);
          } else if constexpr (std::is_same_v<T, ChooseStep>) {
            nested(*st.body);
          } else if constexpr (std::is_same_v<T, SelectStep> ||
                               std::is_same_v<T, DedupStep>) {
            for (const auto& k : st.keys) use(k);
          } else if constexpr (std::is_same_v<T, OrderStep>) {
            for (const auto& k : st.keys) use(k.first);
          } else if constexpr (std::is_same_v<T, GroupStep>) {
            use(st.key);
          } else if constexpr (std::is_same_v<T, GroupCountStep>) {
            use(st.key);
            use(st.counted);
            produced.insert(st.alias);
          } else if constexpr (std::is_same_v<T, CountStep>) {
            use(st.counted);
            produced.insert(st.alias);
          }
        },
        s);
  }
};

}  // namespace

std::vector<std::string> unproduced_variables(const Traversal& traversal) {
  Scan scan;
  scan.traversal(traversal);
  return scan.missing;
}

}  // namespace s2g::ir
