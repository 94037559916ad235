// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "s2g/prefix_registry.hpp"
#include "s2g/property_graph.hpp"
#include "s2g/rdf.hpp"
#include "s2g/solution.hpp"
#include "s2g/sparql_ast.hpp"

namespace s2g {

/// Evaluates a query directly over an RDF graph with bag semantics:
/// nested-loop joins of triple patterns, UNION as bag union, OPTIONAL as left
/// join, FILTER over the whole group, then projection, aggregation, ORDER BY,
/// DISTINCT and LIMIT/OFFSET. Throws TypeError for comparisons between
/// incompatible kinds.
SolutionMultiset ref_evaluate(const sparql::SelectQuery& query,
                              const RdfGraph& graph);

/// Maps rows from either engine onto comparable text keys:
///   IRI            -> <local name>
///   vertex         -> <local name of its id property>
///   string         -> "text" (JSON-escaped)
///   number         -> canonical numeral
/// `graph` is needed to resolve vertices. Throws NormalizationError for
/// edges, vertices without the id property, and unresolvable elements.
SolutionMultiset normalize(const SolutionMultiset& rows,
                           const PrefixRegistry& registry,
                           const PropertyGraph* graph = nullptr);

}  // namespace s2g
