// SPDX-License-Identifier: Apache-2.0

#include "s2g/convert.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "s2g/error.hpp"

namespace s2g {

namespace {

struct PendingVertex {
  std::string iri;
  std::optional<std::string> label;
  Properties properties;
};

void set_property(Properties& props, const std::string& key,
                  PropertyValue value, const std::string& subject) {
  auto [it, inserted] = props.emplace(key, value);
  if (!inserted && !(it->second == value)) {
    throw ClassificationError("multi-valued property '" + key + "' on <" +
                              subject + ">");
  }
}

PropertyValue literal_value(const RdfTerm& term) {
  if (term.kind() == TermKind::Number) {
    return PropertyValue::number(term.numeric_value());
  }
  return PropertyValue::string(term.lexical());
}

}  // namespace

PropertyGraph rdf_to_pg(const RdfGraph& graph, const PrefixRegistry& registry) {
  registry.validate();

  using Key = std::tuple<std::string, std::string, std::string>;
  std::vector<std::pair<Key, const Triple*>> order;
  order.reserve(graph.size());
  for (const auto& t : graph.triples()) {
    order.push_back({Key{t.subject.to_ntriples(), t.predicate.to_ntriples(),
                         t.object.to_ntriples()},
                     &t});
  }
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<PendingVertex> vertices;
  std::map<std::string, std::size_t> vertex_of;
  auto vertex_for = [&](const std::string& iri) -> PendingVertex& {
    auto [it, inserted] = vertex_of.emplace(iri, vertices.size());
    if (inserted) vertices.push_back(PendingVertex{iri, std::nullopt, {}});
    return vertices[it->second];
  };

  struct PendingEdge {
    std::size_t src;
    std::string label;
    std::size_t dst;
  };
  std::vector<PendingEdge> edges;

  for (const auto& [key, triple] : order) {
    const std::string& subject = triple->subject.lexical();
    const std::string predicate(local_name(triple->predicate.lexical()));
    const RdfTerm& object = triple->object;

    if (predicate == registry.vertex_label_key) {
      if (object.is_iri()) {
        throw ClassificationError("label of <" + subject +
                                  "> must be a literal");
      }
      PendingVertex& v = vertex_for(subject);
      std::string label = literal_value(object).text();
      if (label.empty()) {
        throw ClassificationError("empty label on <" + subject + ">");
      }
      if (v.label && *v.label != label) {
        throw ClassificationError("conflicting labels on <" + subject +
                                  ">: '" + *v.label + "' and '" + label + "'");
      }
      v.label = std::move(label);
    } else if (predicate == registry.edge_label_key) {
      throw ClassificationError("edge label triple on <" + subject +
                                ">: edges are not reified in RDF");
    } else if (predicate.starts_with(registry.vertex_prefix)) {
      if (object.is_iri()) {
        throw ClassificationError("vertex property " + predicate + " of <" +
                                  subject + "> has an IRI object");
      }
      PendingVertex& v = vertex_for(subject);
      set_property(v.properties, predicate.substr(registry.vertex_prefix.size()),
                   literal_value(object), subject);
    } else if (predicate.starts_with(registry.edge_prefix)) {
      if (!object.is_iri()) {
        throw ClassificationError(
            "edge predicate " + predicate + " of <" + subject +
            "> has a literal object: edge properties are not reified in RDF");
      }
      vertex_for(subject);
      vertex_for(object.lexical());
      std::size_t src = vertex_of.at(subject);
      std::size_t dst = vertex_of.at(object.lexical());
      edges.push_back({src, predicate.substr(registry.edge_prefix.size()), dst});
    } else {
      throw ClassificationError("predicate <" + triple->predicate.lexical() +
                                "> carries no registered prefix marker");
    }
  }

  PropertyGraph::Builder builder;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto& v = vertices[i];
    if (!registry.id_key.empty()) {
      set_property(v.properties, registry.id_key, PropertyValue::string(v.iri),
                   v.iri);
    }
    builder.add_vertex(Vertex{static_cast<ElementId>(i + 1),
                              v.label.value_or("vertex"),
                              std::move(v.properties)});
  }
  const auto base = static_cast<ElementId>(vertices.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    builder.add_edge(Edge{base + static_cast<ElementId>(i) + 1,
                          static_cast<ElementId>(edges[i].src + 1),
                          edges[i].label,
                          static_cast<ElementId>(edges[i].dst + 1),
                          {}});
  }
  return std::move(builder).build();
}

}  // namespace s2g
