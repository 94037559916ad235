// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <variant>

#include "s2g/prefix_registry.hpp"
#include "s2g/property_graph.hpp"
#include "s2g/sparql_ast.hpp"

namespace s2g {

/// Single-step traversal cases: label (L), constant property (P1), property
/// read into a variable (P2) and vertex hop (E), each for vertices or edges.
enum class SstTag { Lv, Le, Pv1, Pe1, Pv2, Pe2, Eout, Ein };

const char* sst_tag_name(SstTag tag);

struct SstCase {
  SstTag tag = SstTag::Lv;
  /// Label value (L), property key (P) or edge label (E).
  std::string key;
  /// Node where the traversal starts. For Ein this is the pattern's object.
  sparql::Node start;
  /// Constant compared against (L, P1) or node reached (P2, E).
  sparql::Node end;

  friend bool operator==(const SstCase&, const SstCase&) = default;
};

/// Decides the case of a triple pattern from its predicate and object kind:
///   label key + constant          -> Lv / Le
///   vertex prefix + constant      -> Pv1      + variable -> Pv2
///   edge prefix + literal         -> Pe1
///   edge prefix + variable        -> Pe2 when the key is a registered edge
///                                    property key, otherwise Eout
///   edge prefix + IRI             -> Eout
/// Throws ClassificationError for unregistered predicates, label keys with a
/// variable or IRI object, and vertex properties with an IRI object.
SstCase classify(const sparql::TriplePattern& pattern,
                 const PrefixRegistry& registry);

/// The same hop read from the object's side: Eout(x -> y) becomes
/// Ein(y <- x). Other cases are returned unchanged.
SstCase reverse_edge(const SstCase& c);

enum class Direction { Out, In };

struct HasStep {
  std::string key;
  PropertyValue value;  // compared with eq
  friend bool operator==(const HasStep&, const HasStep&) = default;
};

struct HasLabelStep {
  std::string label;
  friend bool operator==(const HasLabelStep&, const HasLabelStep&) = default;
};

struct PropertiesStep {
  std::string key;
  friend bool operator==(const PropertiesStep&, const PropertiesStep&) = default;
};

struct VertexStep {
  Direction direction = Direction::Out;
  std::string label;
  friend bool operator==(const VertexStep&, const VertexStep&) = default;
};

using CoreStep = std::variant<HasStep, HasLabelStep, PropertiesStep, VertexStep>;

/// [MatchStartStep(start), core, MatchEndStep(end?)]
struct SstInstruction {
  std::string start;
  CoreStep core;
  std::optional<std::string> end;

  friend bool operator==(const SstInstruction&, const SstInstruction&) = default;
};

/// Maps a case whose start is a variable to its instruction. A constant end
/// of a P2/E case is not representable here; the translator replaces such
/// constants with fresh variables first. Throws Error when given one.
SstInstruction map_to_instruction(const SstCase& c);

/// Property value matching a constant term: strings and IRIs become strings,
/// numerals numbers.
PropertyValue term_to_value(const RdfTerm& term);

}  // namespace s2g
