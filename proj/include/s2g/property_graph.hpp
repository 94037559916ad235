// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace s2g {

/// A property value: a number or a string. Numbers order numerically,
/// strings by byte order, and every number sorts before every string.
class PropertyValue {
 public:
  enum class Kind { String, Number };

  PropertyValue() = default;
  static PropertyValue string(std::string text);
  static PropertyValue number(double value);

  Kind kind() const { return kind_; }
  bool is_number() const { return kind_ == Kind::Number; }
  bool is_string() const { return kind_ == Kind::String; }
  double as_number() const { return number_; }
  const std::string& as_string() const { return text_; }

  /// Canonical text: the string itself, or the shortest numeral.
  std::string text() const;

  friend bool operator==(const PropertyValue& a, const PropertyValue& b);
  friend std::strong_ordering operator<=>(const PropertyValue& a,
                                          const PropertyValue& b);

 private:
  Kind kind_ = Kind::String;
  std::string text_;
  double number_ = 0.0;
};

using Properties = std::map<std::string, PropertyValue>;

using ElementId = std::int64_t;

struct Vertex {
  ElementId id = 0;
  std::string label;
  Properties properties;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  ElementId id = 0;
  ElementId src = 0;
  std::string label;
  ElementId dst = 0;
  Properties properties;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class ElementKind { Vertex, Edge };

struct ElementRef {
  ElementKind kind = ElementKind::Vertex;
  ElementId id = 0;

  friend bool operator==(const ElementRef&, const ElementRef&) = default;
  friend auto operator<=>(const ElementRef&, const ElementRef&) = default;
};

/// Labeled property graph. Elements are kept sorted by id; adjacency lists
/// are sorted by edge id. Immutable once built.
class PropertyGraph {
 public:
  class Builder {
   public:
    /// Throws GraphError on duplicate id or empty label.
    Builder& add_vertex(Vertex vertex);
    Builder& add_edge(Edge edge);
    /// Throws GraphError when an edge endpoint does not exist.
    PropertyGraph build() &&;

   private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<ElementId, std::size_t> vertex_ids_;
    std::unordered_map<ElementId, std::size_t> edge_ids_;
  };

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const Vertex* find_vertex(ElementId id) const;
  const Edge* find_edge(ElementId id) const;

  /// Edges leaving / entering a vertex, ascending by edge id.
  const std::vector<const Edge*>& out_edges(ElementId vertex) const;
  const std::vector<const Edge*>& in_edges(ElementId vertex) const;

  const std::string* label_of(ElementRef element) const;
  const PropertyValue* property(ElementRef element, const std::string& key) const;

  friend bool operator==(const PropertyGraph& a, const PropertyGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<ElementId, std::size_t> vertex_index_;
  std::unordered_map<ElementId, std::size_t> edge_index_;
  std::vector<std::vector<const Edge*>> out_;
  std::vector<std::vector<const Edge*>> in_;
};

/// Parses the line-delimited `.pgl` format: one JSON object per line with
/// fields type, id, label, src/dst (edges only) and props. Blank lines and
/// lines starting with '#' are skipped.
PropertyGraph load_pg(std::string_view text);

/// Canonical `.pgl` text: vertices then edges, each ascending by id, fields in
/// the order type, id, label, src, dst, props, property keys sorted.
std::string serialize_pg(const PropertyGraph& graph);

}  // namespace s2g
