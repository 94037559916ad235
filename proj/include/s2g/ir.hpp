// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "s2g/sparql_ast.hpp"
#include "s2g/sst.hpp"

namespace s2g::ir {

/// Predicate of a WhereTraversalStep.
struct PredicateTree {
  enum class Kind { Leaf, And, Or };
  enum class Op { Eq, Neq, Lt, Lte, Gt, Gte };

  Kind kind = Kind::Leaf;
  // Leaf: `key op value` or `key op other_key`.
  std::string key;
  Op op = Op::Eq;
  std::variant<PropertyValue, std::string> operand;
  // And / Or
  std::vector<PredicateTree> children;

  static PredicateTree leaf(std::string key, Op op, PropertyValue value);
  static PredicateTree leaf_key(std::string key, Op op, std::string other);
  static PredicateTree all_of(std::vector<PredicateTree> children);
  static PredicateTree any_of(std::vector<PredicateTree> children);

  bool compares_keys() const {
    return std::holds_alternative<std::string>(operand);
  }

  friend bool operator==(const PredicateTree&, const PredicateTree&) = default;
};

const char* op_name(PredicateTree::Op op);  // "eq", "neq", "lt", ...

struct Traversal;

/// Owning pointer with value semantics for recursive step types.
template <class T>
class Box {
 public:
  Box() : ptr_(std::make_unique<T>()) {}
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  T& operator*() { return *ptr_; }
  T* operator->() { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

/// `g.V()`: one traverser per vertex.
struct GraphStep {
  friend bool operator==(const GraphStep&, const GraphStep&) = default;
};

/// Conjunctive pattern match with consistent variable bindings.
struct MatchStep {
  std::vector<SstInstruction> patterns;
  friend bool operator==(const MatchStep&, const MatchStep&) = default;
};

/// A single pattern inlined without a surrounding MatchStep.
struct PatternStep {
  SstInstruction pattern;
  friend bool operator==(const PatternStep&, const PatternStep&) = default;
};

struct WhereTraversalStep {
  PredicateTree predicate;
  friend bool operator==(const WhereTraversalStep&,
                         const WhereTraversalStep&) = default;
};

struct UnionStep {
  std::vector<Traversal> branches;
  friend bool operator==(const UnionStep& a, const UnionStep& b);
};

/// Left join: the body's solutions, or the input unchanged when it has none.
struct ChooseStep {
  Box<Traversal> body;
  friend bool operator==(const ChooseStep&, const ChooseStep&) = default;
};

struct SelectStep {
  std::vector<std::string> keys;
  friend bool operator==(const SelectStep&, const SelectStep&) = default;
};

struct DedupStep {
  std::vector<std::string> keys;
  friend bool operator==(const DedupStep&, const DedupStep&) = default;
};

struct RangeStep {
  std::int64_t low = 0;
  std::optional<std::int64_t> high;  // nullopt: unbounded
  friend bool operator==(const RangeStep&, const RangeStep&) = default;
};

struct OrderStep {
  std::vector<std::pair<std::string, sparql::SortDirection>> keys;
  friend bool operator==(const OrderStep&, const OrderStep&) = default;
};

/// Groups by key and flattens back to one row per member, groups in key
/// order.
struct GroupStep {
  std::string key;
  friend bool operator==(const GroupStep&, const GroupStep&) = default;
};

/// One row per key value: (key, number of rows binding `counted`).
struct GroupCountStep {
  std::string key;
  std::string counted;
  std::string alias;
  friend bool operator==(const GroupCountStep&, const GroupCountStep&) = default;
};

/// A single row: the number of rows binding `counted`.
struct CountStep {
  std::string counted;
  std::string alias;
  friend bool operator==(const CountStep&, const CountStep&) = default;
};

using IrStep = std::variant<GraphStep, MatchStep, PatternStep,
                            WhereTraversalStep, UnionStep, ChooseStep,
                            SelectStep, DedupStep, RangeStep, OrderStep,
                            GroupStep, GroupCountStep, CountStep>;

struct Traversal {
  std::vector<IrStep> steps;
  friend bool operator==(const Traversal&, const Traversal&) = default;
};

inline bool operator==(const UnionStep& a, const UnionStep& b) {
  return a.branches == b.branches;
}

/// Variables consumed by Select/Where/Order/Group/Dedup steps that no
/// earlier MatchStart/MatchEnd (or aggregate) introduces, in scan order.
/// Empty for a structurally sound traversal.
std::vector<std::string> unproduced_variables(const Traversal& traversal);

}  // namespace s2g::ir
