// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "s2g/convert.hpp"
#include "s2g/traversal_engine.hpp"

namespace s2g::testing {

std::filesystem::path source_dir() { return S2G_SOURCE_DIR; }

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

RdfGraph toy_rdf() { return load_ntriples(read_text(source_dir() / "data/toy.nt")); }

PropertyGraph toy_pg() { return rdf_to_pg(toy_rdf(), PrefixRegistry{}); }

PropertyGraph toy_weighted_pg() {
  return load_pg(read_text(source_dir() / "data/toy_weighted.pgl"));
}

int run_cli(const std::string& args, const std::string& out_file,
            const std::string& err_file) {
  std::string cmd = std::string(S2G_BIN) + " " + args;
  cmd += " >" + (out_file.empty() ? std::string("/dev/null") : out_file);
  cmd += " 2>" + (err_file.empty() ? std::string("/dev/null") : err_file);
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

namespace {

const char* kVars[] = {"a", "b", "c", "d"};
const char* kNames[] = {"a", "b", "c"};
const char* kLabels[] = {"person", "software"};
const char* kEdgeLabels[] = {"knows", "created"};

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

PropertyGraph random_pg(std::mt19937_64& rng, int max_vertices) {
  PropertyGraph::Builder b;
  int n = uniform(rng, 1, max_vertices);
  for (int i = 1; i <= n; ++i) {
    Vertex v{i, kLabels[uniform(rng, 0, 1)], {}};
    if (uniform(rng, 0, 4) > 0) v.properties["name"] = PropertyValue::string(kNames[uniform(rng, 0, 2)]);
    if (uniform(rng, 0, 1) == 0) v.properties["age"] = PropertyValue::number(uniform(rng, 1, 3));
    b.add_vertex(std::move(v));
  }
  int m = uniform(rng, 0, 2 * n);
  for (int k = 0; k < m; ++k) {
    b.add_edge(Edge{n + 1 + k, uniform(rng, 1, n), kEdgeLabels[uniform(rng, 0, 1)],
                    uniform(rng, 1, n), {}});
  }
  return std::move(b).build();
}

ir::MatchStep random_match(std::mt19937_64& rng, int max_patterns) {
  ir::MatchStep match;
  int count = uniform(rng, 1, max_patterns);
  for (int k = 0; k < count; ++k) {
    SstInstruction in;
    in.start = kVars[uniform(rng, 0, 3)];
    switch (uniform(rng, 0, 4)) {
      case 0:
        in.core = HasLabelStep{kLabels[uniform(rng, 0, 1)]};
        break;
      case 1:
        in.core = HasStep{"name", PropertyValue::string(kNames[uniform(rng, 0, 2)])};
        break;
      case 2:
        in.core = PropertiesStep{uniform(rng, 0, 1) ? "name" : "age"};
        in.end = kVars[uniform(rng, 0, 3)];
        break;
      default:
        in.core = VertexStep{uniform(rng, 0, 1) ? Direction::Out : Direction::In,
                             kEdgeLabels[uniform(rng, 0, 1)]};
        in.end = kVars[uniform(rng, 0, 3)];
        break;
    }
    match.patterns.push_back(std::move(in));
  }
  return match;
}

std::vector<std::string> match_variables(const ir::MatchStep& match) {
  std::set<std::string> vars;
  for (const auto& p : match.patterns) {
    vars.insert(p.start);
    if (p.end) vars.insert(*p.end);
  }
  return {vars.begin(), vars.end()};
}

SolutionMultiset brute_force(const ir::MatchStep& match, const PropertyGraph& graph) {
  using Value = std::variant<ElementRef, PropertyValue>;
  std::vector<Value> domain;
  std::set<PropertyValue> values;
  for (const auto& v : graph.vertices()) {
    domain.push_back(ElementRef{ElementKind::Vertex, v.id});
    for (const auto& [key, value] : v.properties) values.insert(value);
  }
  for (const auto& value : values) domain.push_back(value);

  SolutionMultiset out;
  out.columns = match_variables(match);
  std::map<std::string, std::size_t> slot;
  for (std::size_t k = 0; k < out.columns.size(); ++k) slot[out.columns[k]] = k;

  std::vector<std::size_t> pick(out.columns.size(), 0);
  while (true) {
    auto at = [&](const std::string& var) -> const Value& { return domain[pick[slot[var]]]; };
    std::int64_t weight = 1;
    for (const auto& p : match.patterns) {
      const auto* start = std::get_if<ElementRef>(&at(p.start));
      if (start == nullptr) {
        weight = 0;
        break;
      }
      if (const auto* has = std::get_if<HasStep>(&p.core)) {
        const PropertyValue* v = graph.property(*start, has->key);
        if (v == nullptr || !(*v == has->value)) weight = 0;
      } else if (const auto* label = std::get_if<HasLabelStep>(&p.core)) {
        if (*graph.label_of(*start) != label->label) weight = 0;
      } else if (const auto* props = std::get_if<PropertiesStep>(&p.core)) {
        const PropertyValue* v = graph.property(*start, props->key);
        const auto* end = std::get_if<PropertyValue>(&at(*p.end));
        if (v == nullptr || end == nullptr || !(*v == *end)) weight = 0;
      } else {
        const auto& hop = std::get<VertexStep>(p.core);
        const auto* end = std::get_if<ElementRef>(&at(*p.end));
        std::int64_t edges = 0;
        if (end != nullptr) {
          for (const auto& e : graph.edges()) {
            bool forward = e.src == start->id && e.dst == end->id;
            bool backward = e.dst == start->id && e.src == end->id;
            if (e.label == hop.label &&
                (hop.direction == Direction::Out ? forward : backward)) {
              ++edges;
            }
          }
        }
        weight *= edges;
      }
      if (weight == 0) break;
    }
    for (std::int64_t w = 0; w < weight; ++w) {
      Row row;
      for (std::size_t k = 0; k < pick.size(); ++k) {
        std::visit([&](const auto& x) { row.push_back(x); }, domain[pick[k]]);
      }
      out.rows.push_back(std::move(row));
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == domain.size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

ir::Traversal match_traversal(const ir::MatchStep& match) {
  return ir::Traversal{{ir::GraphStep{}, match, ir::SelectStep{match_variables(match)}}};
}

namespace {

std::vector<std::string> merged(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::map<Row, std::size_t, bool (*)(const Row&, const Row&)> histogram(
    const SolutionMultiset& s) {
  std::map<Row, std::size_t, bool (*)(const Row&, const Row&)> h(
      [](const Row& a, const Row& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            cell_less);
      });
  for (const auto& r : s.rows) ++h[r];
  return h;
}

}  // namespace

std::string check_laws(std::mt19937_64& rng) {
  PropertyGraph g = random_pg(rng, 8);
  ir::MatchStep a = random_match(rng, 3);
  ir::MatchStep b = random_match(rng, 3);
  ir::MatchStep body = random_match(rng, 2);
  const auto vars = match_variables(a);
  auto run = [&](std::vector<ir::IrStep> steps, bool bulking = true) {
    engine::ExecOptions options;
    options.bulking = bulking;
    return engine::execute(ir::Traversal{std::move(steps)}, g, options);
  };

  SolutionMultiset xa = run({ir::GraphStep{}, a, ir::SelectStep{vars}});
  SolutionMultiset xb = run({ir::GraphStep{}, b, ir::SelectStep{match_variables(b)}});

  SolutionMultiset u = run({ir::GraphStep{},
                            ir::UnionStep{{ir::Traversal{{a}}, ir::Traversal{{b}}}},
                            ir::SelectStep{merged(vars, match_variables(b))}});
  if (u.size() != xa.size() + xb.size()) return "union cardinality";

  SolutionMultiset d = run({ir::GraphStep{}, a, ir::SelectStep{vars}, ir::DedupStep{vars}});
  if (d.size() > xa.size()) return "dedup grows";
  auto hd = histogram(d);
  for (const auto& [row, n] : hd) {
    if (n != 1) return "dedup leaves duplicates";
  }
  if (hd.size() != histogram(xa).size()) return "dedup drops rows";

  std::int64_t low = std::uniform_int_distribution<std::int64_t>(0, 6)(rng);
  std::int64_t high = low + std::uniform_int_distribution<std::int64_t>(0, 6)(rng);
  std::vector<ir::IrStep> ranged{ir::GraphStep{}, a, ir::SelectStep{vars},
                                 ir::RangeStep{low, high}};
  SolutionMultiset r = run(ranged);
  auto n = static_cast<std::int64_t>(xa.size());
  if (static_cast<std::int64_t>(r.size()) != std::max<std::int64_t>(0, std::min(high, n) - low)) {
    return "range cardinality";
  }
  if (!sequence_equal(r, run(ranged, false))) return "bulking changes the result";
  if (!multiset_equal(xa, run({ir::GraphStep{}, a, ir::SelectStep{vars}}, false))) {
    return "bulking changes the result";
  }

  SolutionMultiset c = run({ir::GraphStep{}, a, ir::SelectStep{vars},
                            ir::CountStep{vars.front(), "n"}});
  if (c.size() != 1) return "count row count";
  const auto* counted = std::get_if<PropertyValue>(&c.rows[0][0]);
  if (counted == nullptr || counted->as_number() != static_cast<double>(xa.size())) {
    return "count value";
  }

  SolutionMultiset o = run({ir::GraphStep{}, a, ir::ChooseStep{ir::Traversal{{body}}},
                            ir::SelectStep{vars}});
  auto hb = histogram(xa);
  auto ho = histogram(o);
  if (hb.size() != ho.size()) return "optional changes the base rows";
  for (const auto& [row, m] : hb) {
    auto it = ho.find(row);
    if (it == ho.end() || it->second < m || it->second % m != 0) {
      return "optional multiplicity";
    }
  }

  ir::MatchStep flipped = a;
  for (auto& p : flipped.patterns) {
    if (auto* hop = std::get_if<VertexStep>(&p.core)) {
      hop->direction = hop->direction == Direction::Out ? Direction::In : Direction::Out;
      std::swap(p.start, *p.end);
    }
  }
  if (!multiset_equal(xa, run({ir::GraphStep{}, flipped, ir::SelectStep{vars}}))) {
    return "incoming and outgoing hops disagree";
  }
  return {};
}

}  // namespace s2g::testing
