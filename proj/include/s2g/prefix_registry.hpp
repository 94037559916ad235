// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <string>
#include <string_view>

namespace s2g {

/// Naming convention that tells which RDF predicates denote vertex
/// properties, labels, edge hops and edge properties.
struct PrefixRegistry {
  std::string vertex_prefix = "v:";
  std::string edge_prefix = "e:";
  std::string vertex_label_key = "v:label";
  std::string edge_label_key = "e:label";
  /// Keys under the edge prefix that name edge properties rather than edge
  /// labels.
  std::set<std::string> edge_property_keys = {"weight"};
  /// Vertex property holding the originating IRI. Empty disables it.
  std::string id_key = "iri";

  /// Throws Error when the markers collide or prefixes do not end with ':'.
  void validate() const;

  /// Prefix names (without ':') that a query may use without declaring them,
  /// each mapped to its own marker as IRI base.
  std::set<std::string> implicit_prefix_names() const;

  friend bool operator==(const PrefixRegistry&, const PrefixRegistry&) = default;
};

/// Reads `key=value` lines (vertex_prefix, edge_prefix, vertex_label_key,
/// edge_label_key, edge_property_keys, id_property_key). Unknown keys and
/// malformed lines throw Error.
PrefixRegistry parse_prefix_config(std::string_view text);

/// Loads the file named by S2G_PREFIX_CONFIG, or the defaults when unset.
PrefixRegistry registry_from_environment();

}  // namespace s2g
