// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "s2g/ir.hpp"
#include "s2g/property_graph.hpp"
#include "s2g/solution.hpp"

namespace s2g::engine {

/// Value a variable can be bound to: a graph element or a property value.
using Value = std::variant<ElementRef, PropertyValue>;

/// Variable bindings of a traverser. Unbound variables are absent.
using Bindings = std::map<std::string, Value>;

/// Where a traverser currently sits.
using Location = std::variant<std::monostate, ElementRef, PropertyValue>;

struct Traverser {
  Location location;
  Bindings bindings;
  std::int64_t bulk = 1;
  /// Fresh from GraphStep: no pattern has consumed this traverser yet, so
  /// the next pattern anchors its start variable at the location.
  bool seed = false;

  friend bool operator==(const Traverser&, const Traverser&) = default;
};

struct ExecOptions {
  /// Merge adjacent equal traversers into one with summed bulk.
  bool bulking = true;
  /// Vertex property that orders and identifies vertices (their IRI).
  std::string id_key = "iri";
};

/// Per-execution state threaded through the steps.
struct ExecState {
  /// Output columns as of the latest Select / aggregate step.
  std::vector<std::string> columns;
  bool selected = false;
  /// Variables introduced so far; keys referenced by Order/Group must be
  /// among them.
  std::vector<std::string> known;
};

/// Runs a traversal and projects the final traversers onto the selected
/// columns (all bound variables, sorted, when there is no SelectStep).
/// Throws TypeError for incompatible comparisons and EvaluationError for
/// keys no step introduces.
SolutionMultiset execute(const ir::Traversal& traversal,
                         const PropertyGraph& graph,
                         const ExecOptions& options = {});

/// Applies one step to a traverser stream.
std::vector<Traverser> execute_step(const ir::IrStep& step,
                                    std::vector<Traverser> input,
                                    const PropertyGraph& graph,
                                    ExecState& state,
                                    const ExecOptions& options = {});

/// Order of values under OrderStep: numbers, then strings, then vertices
/// (by id property, then id), then edges. Unbound sorts first.
int compare_for_order(const Value* a, const Value* b,
                      const PropertyGraph& graph, const std::string& id_key);

}  // namespace s2g::engine
