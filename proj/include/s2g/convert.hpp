// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "s2g/prefix_registry.hpp"
#include "s2g/property_graph.hpp"
#include "s2g/rdf.hpp"

namespace s2g {

/// Builds the property-graph counterpart of an RDF graph.
///
/// Every IRI in subject or object position becomes a vertex. Triples are
/// visited in (subject, predicate, object) text order; vertex ids are 1..V in
/// order of first appearance and edge ids continue at V+1 in the same order.
///
///   v:label "person"   -> vertex label (default "vertex" when absent)
///   v:key literal      -> vertex property `key`
///   e:key <iri>        -> edge labeled `key` to the object vertex
///
/// When `registry.id_key` is non-empty each vertex also carries its IRI
/// under that key, which is how constant IRIs in queries and result
/// normalisation find their vertex.
///
/// Throws ClassificationError for predicates without a registered marker,
/// literal objects under the edge prefix (no reification), label triples on
/// edges, multi-valued properties and conflicting labels.
PropertyGraph rdf_to_pg(const RdfGraph& graph, const PrefixRegistry& registry);

}  // namespace s2g
