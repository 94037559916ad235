// SPDX-License-Identifier: Apache-2.0

#include "s2g/property_graph.hpp"

#include <algorithm>

#include <json.hpp>

#include "s2g/error.hpp"
#include "s2g/number.hpp"

namespace s2g {

PropertyValue PropertyValue::string(std::string text) {
  PropertyValue v;
  v.kind_ = Kind::String;
  v.text_ = std::move(text);
  return v;
}

PropertyValue PropertyValue::number(double value) {
  PropertyValue v;
  v.kind_ = Kind::Number;
  v.number_ = value == 0.0 ? 0.0 : value;
  return v;
}

std::string PropertyValue::text() const {
  return is_number() ? canonical_number(number_) : text_;
}

bool operator==(const PropertyValue& a, const PropertyValue& b) {
  if (a.kind_ != b.kind_) return false;
  return a.is_number() ? a.number_ == b.number_ : a.text_ == b.text_;
}

std::strong_ordering operator<=>(const PropertyValue& a,
                                 const PropertyValue& b) {
  if (a.kind_ != b.kind_) {
    return a.is_number() ? std::strong_ordering::less
                         : std::strong_ordering::greater;
  }
  if (a.is_number()) {
    if (a.number_ < b.number_) return std::strong_ordering::less;
    if (b.number_ < a.number_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  return a.text_ <=> b.text_;
}

PropertyGraph::Builder& PropertyGraph::Builder::add_vertex(Vertex vertex) {
  if (vertex.label.empty()) {
    throw GraphError("vertex " + std::to_string(vertex.id) + " has no label");
  }
  if (!vertex_ids_.emplace(vertex.id, vertices_.size()).second) {
    throw GraphError("duplicate vertex id " + std::to_string(vertex.id));
  }
  vertices_.push_back(std::move(vertex));
  return *this;
}

PropertyGraph::Builder& PropertyGraph::Builder::add_edge(Edge edge) {
  if (edge.label.empty()) {
    throw GraphError("edge " + std::to_string(edge.id) + " has no label");
  }
  if (!edge_ids_.emplace(edge.id, edges_.size()).second) {
    throw GraphError("duplicate edge id " + std::to_string(edge.id));
  }
  edges_.push_back(std::move(edge));
  return *this;
}

PropertyGraph PropertyGraph::Builder::build() && {
  for (const auto& e : edges_) {
    for (ElementId end : {e.src, e.dst}) {
      if (!vertex_ids_.count(end)) {
        throw GraphError("edge " + std::to_string(e.id) +
                         " references missing vertex " + std::to_string(end));
      }
    }
  }
  PropertyGraph g;
  g.vertices_ = std::move(vertices_);
  g.edges_ = std::move(edges_);
  std::sort(g.vertices_.begin(), g.vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    g.vertex_index_.emplace(g.vertices_[i].id, i);
  }
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    g.edge_index_.emplace(g.edges_[i].id, i);
  }
  g.out_.resize(g.vertices_.size());
  g.in_.resize(g.vertices_.size());
  // edges_ is sorted, so adjacency lists come out sorted by edge id
  for (const auto& e : g.edges_) {
    g.out_[g.vertex_index_.at(e.src)].push_back(&e);
    g.in_[g.vertex_index_.at(e.dst)].push_back(&e);
  }
  return g;
}

const Vertex* PropertyGraph::find_vertex(ElementId id) const {
  auto it = vertex_index_.find(id);
  return it == vertex_index_.end() ? nullptr : &vertices_[it->second];
}

const Edge* PropertyGraph::find_edge(ElementId id) const {
  auto it = edge_index_.find(id);
  return it == edge_index_.end() ? nullptr : &edges_[it->second];
}

namespace {
const std::vector<const Edge*> kNoEdges;
}

const std::vector<const Edge*>& PropertyGraph::out_edges(ElementId vertex) const {
  auto it = vertex_index_.find(vertex);
  return it == vertex_index_.end() ? kNoEdges : out_[it->second];
}

const std::vector<const Edge*>& PropertyGraph::in_edges(ElementId vertex) const {
  auto it = vertex_index_.find(vertex);
  return it == vertex_index_.end() ? kNoEdges : in_[it->second];
}

const std::string* PropertyGraph::label_of(ElementRef element) const {
  if (element.kind == ElementKind::Vertex) {
    const Vertex* v = find_vertex(element.id);
    return v ? &v->label : nullptr;
  }
  const Edge* e = find_edge(element.id);
  return e ? &e->label : nullptr;
}

const PropertyValue* PropertyGraph::property(ElementRef element,
                                             const std::string& key) const {
  const Properties* props = nullptr;
  if (element.kind == ElementKind::Vertex) {
    if (const Vertex* v = find_vertex(element.id)) props = &v->properties;
  } else if (const Edge* e = find_edge(element.id)) {
    props = &e->properties;
  }
  if (!props) return nullptr;
  auto it = props->find(key);
  return it == props->end() ? nullptr : &it->second;
}

namespace {

using nlohmann::json;

ElementId read_id(const json& record, const char* field, std::size_t line) {
  auto it = record.find(field);
  if (it == record.end()) {
    throw ParseError(std::string("missing field '") + field + "'", {line, 1});
  }
  if (!it->is_number_integer()) {
    throw ParseError(std::string("field '") + field + "' must be an integer",
                     {line, 1});
  }
  return it->get<ElementId>();
}

Properties read_props(const json& record, std::size_t line) {
  Properties props;
  auto it = record.find("props");
  if (it == record.end() || it->is_null()) return props;
  if (!it->is_object()) throw ParseError("'props' must be an object", {line, 1});
  for (const auto& [key, value] : it->items()) {
    if (value.is_string()) {
      props.emplace(key, PropertyValue::string(value.get<std::string>()));
    } else if (value.is_number()) {
      props.emplace(key, PropertyValue::number(value.get<double>()));
    } else {
      throw ParseError("property '" + key + "' must be a string or number",
                       {line, 1});
    }
  }
  return props;
}

std::string json_string(const std::string& text) { return json(text).dump(); }

void write_props(std::string& out, const Properties& props) {
  out += "\"props\":{";
  bool first = true;
  for (const auto& [key, value] : props) {
    if (!first) out += ',';
    first = false;
    out += json_string(key);
    out += ':';
    out += value.is_number() ? canonical_number(value.as_number())
                             : json_string(value.as_string());
  }
  out += '}';
}

}  // namespace

PropertyGraph load_pg(std::string_view text) {
  PropertyGraph::Builder builder;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    ++line_no;
    begin = end + 1;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;

    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("malformed record: ") + e.what(),
                       {line_no, 1});
    }
    if (!record.is_object()) throw ParseError("record must be an object", {line_no, 1});
    auto type = record.find("type");
    if (type == record.end() || !type->is_string()) {
      throw ParseError("missing field 'type'", {line_no, 1}, {"\"v\"", "\"e\""});
    }
    auto label_it = record.find("label");
    std::string label;
    if (label_it != record.end()) {
      if (!label_it->is_string()) {
        throw ParseError("field 'label' must be a string", {line_no, 1});
      }
      label = label_it->get<std::string>();
    }
    if (label.empty()) {
      throw GraphError("line " + std::to_string(line_no) + ": missing label");
    }
    const std::string kind = type->get<std::string>();
    if (kind == "v") {
      builder.add_vertex(Vertex{read_id(record, "id", line_no), std::move(label),
                                read_props(record, line_no)});
    } else if (kind == "e") {
      builder.add_edge(Edge{read_id(record, "id", line_no),
                            read_id(record, "src", line_no), std::move(label),
                            read_id(record, "dst", line_no),
                            read_props(record, line_no)});
    } else {
      throw ParseError("unknown record type '" + kind + "'", {line_no, 1},
                       {"\"v\"", "\"e\""});
    }
  }
  return std::move(builder).build();
}

std::string serialize_pg(const PropertyGraph& graph) {
  std::string out;
  for (const auto& v : graph.vertices()) {
    out += "{\"type\":\"v\",\"id\":" + std::to_string(v.id) +
           ",\"label\":" + json_string(v.label) + ',';
    write_props(out, v.properties);
    out += "}\n";
  }
  for (const auto& e : graph.edges()) {
    out += "{\"type\":\"e\",\"id\":" + std::to_string(e.id) +
           ",\"label\":" + json_string(e.label) +
           ",\"src\":" + std::to_string(e.src) +
           ",\"dst\":" + std::to_string(e.dst) + ',';
    write_props(out, e.properties);
    out += "}\n";
  }
  return out;
}

}  // namespace s2g
