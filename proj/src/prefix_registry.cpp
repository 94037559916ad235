// SPDX-License-Identifier: Apache-2.0

#include "s2g/prefix_registry.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "s2g/error.hpp"

namespace s2g {

namespace {

std::string trim(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = text.find_last_not_of(" \t\r");
  return std::string(text.substr(b, e - b + 1));
}

}  // namespace

void PrefixRegistry::validate() const {
  for (const auto* prefix : {&vertex_prefix, &edge_prefix}) {
    if (prefix->size() < 2 || prefix->back() != ':') {
      throw Error("prefix '" + *prefix + "' must be a name ending with ':'");
    }
  }
  const std::string* markers[] = {&vertex_prefix, &edge_prefix,
                                  &vertex_label_key, &edge_label_key};
  for (int i = 0; i < 4; ++i) {
    if (markers[i]->empty()) throw Error("empty prefix marker");
    for (int j = i + 1; j < 4; ++j) {
      if (*markers[i] == *markers[j]) {
        throw Error("prefix markers collide: '" + *markers[i] + "'");
      }
    }
  }
  if (vertex_prefix.starts_with(edge_prefix) ||
      edge_prefix.starts_with(vertex_prefix)) {
    throw Error("prefix markers overlap: '" + vertex_prefix + "' and '" +
                edge_prefix + "'");
  }
}

std::set<std::string> PrefixRegistry::implicit_prefix_names() const {
  std::set<std::string> names;
  for (const auto* prefix : {&vertex_prefix, &edge_prefix}) {
    names.insert(prefix->substr(0, prefix->size() - 1));
  }
  return names;
}

PrefixRegistry parse_prefix_config(std::string_view text) {
  PrefixRegistry registry;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    std::size_t eq = body.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected key=value", {line_no, 1}, {"'='"});
    }
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key == "vertex_prefix") {
      registry.vertex_prefix = value;
    } else if (key == "edge_prefix") {
      registry.edge_prefix = value;
    } else if (key == "vertex_label_key") {
      registry.vertex_label_key = value;
    } else if (key == "edge_label_key") {
      registry.edge_label_key = value;
    } else if (key == "edge_property_keys") {
      registry.edge_property_keys.clear();
      std::istringstream items(value);
      std::string item;
      while (std::getline(items, item, ',')) {
        item = trim(item);
        if (!item.empty()) registry.edge_property_keys.insert(item);
      }
    } else if (key == "id_property_key") {
      registry.id_key = value;
    } else {
      throw ParseError("unknown key '" + key + "'", {line_no, 1});
    }
  }
  registry.validate();
  return registry;
}

PrefixRegistry registry_from_environment() {
  const char* path = std::getenv("S2G_PREFIX_CONFIG");
  if (path == nullptr || *path == '\0') return {};
  std::ifstream in(path);
  if (!in) throw Error(std::string("cannot read prefix config ") + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_prefix_config(text.str());
}

}  // namespace s2g
