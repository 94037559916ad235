// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "s2g/ir.hpp"
#include "s2g/prefix_registry.hpp"
#include "s2g/sparql_ast.hpp"

namespace s2g {

struct TranslateOptions {
  PrefixRegistry registry;
  /// Emit vertex hops from the object's side (VertexStep IN) instead of the
  /// subject's.
  bool incoming_edges = false;
};

/// SPARQL SELECT query to traversal:
///
///   GraphStep
///   Match | Pattern        triple patterns of the group
///   Union...               one per UNION
///   WhereTraversal         all group FILTERs conjoined
///   Choose...              one per OPTIONAL
///   Select                 projected variables
///   Dedup(keys)            COUNT(DISTINCT ...)
///   Group | GroupCount | Count
///   Order
///   Dedup                  SELECT DISTINCT
///   Range                  LIMIT / OFFSET
///
/// Throws ScopingError, ClassificationError or UnsupportedFeatureError.
ir::Traversal translate(const sparql::SelectQuery& query,
                        const TranslateOptions& options = {});

/// Appends the stages from Select onwards to a traversal whose pattern
/// stages are complete.
ir::Traversal apply_modifiers(ir::Traversal traversal,
                              const sparql::SelectQuery& query);

}  // namespace s2g
