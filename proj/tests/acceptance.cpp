// SPDX-License-Identifier: Apache-2.0
//
// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>

#include "s2g/convert.hpp"
#include "s2g/emitters.hpp"
#include "s2g/sparql_parser.hpp"
#include "s2g/translator.hpp"
#include "s2g/traversal_engine.hpp"
#include "s2g/verify.hpp"
#include "support.hpp"

using namespace s2g;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string chomp(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

ir::Traversal translate_text(const std::string& text, bool incoming = false) {
  return translate(sparql::parse(text), TranslateOptions{PrefixRegistry{}, incoming});
}

Outcome equivalence_suite() {
  auto start = Clock::now();
  auto corpus = load_corpus(testing::source_dir() / "corpus");
  std::map<std::string, int> per_feature;
  for (const auto& q : corpus) ++per_feature[q.feature];
  bool mix = corpus.size() == 30 && per_feature.size() == 10;
  for (const auto& [feature, n] : per_feature) mix = mix && n == 3;

  PrefixRegistry registry;
  std::string detail;
  bool all = mix;
  for (const char* graph : {"data/toy.nt", "data/random1000.nt"}) {
    RdfGraph rdf = load_ntriples(testing::read_text(testing::source_dir() / graph));
    auto reports = verify_corpus(corpus, rdf, rdf_to_pg(rdf, registry), registry);
    int ok = 0;
    std::string failed;
    for (const auto& r : reports) {
      if (r.equivalent) {
        ++ok;
      } else {
        failed += " " + r.query_id;
      }
    }
    all = all && ok == 30;
    detail += std::string(graph) + " " + std::to_string(ok) + "/" +
              std::to_string(reports.size()) + (failed.empty() ? "" : " (" + failed + " )") + ", ";
  }
  double elapsed = seconds_since(start);
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s", elapsed);
  return {all && elapsed < 10.0,
          detail + timing + (mix ? "" : ", feature mix is not 10 x 3")};
}

Outcome golden_translations() {
  const fs::path root = testing::source_dir() / "tests/golden";
  int rows = 0, matched = 0;
  std::string failed;
  for (const char* table : {"table1", "table2"}) {
    for (const auto& q : load_corpus(root / table)) {
      ++rows;
      bool incoming = q.id == "ein";
      const fs::path base = root / table / q.id;
      bool ok = true;
      for (int run = 0; run < 2; ++run) {
        ir::Traversal t = translate_text(q.text, incoming);
        ok = ok && emit_steps(t) == chomp(testing::read_text(base.string() + ".steps")) &&
             emit_groovy(t) == chomp(testing::read_text(base.string() + ".groovy")) &&
             emit_bytecode(t) == chomp(testing::read_text(base.string() + ".gbc.json"));
      }
      if (std::string(table) == "table1") {
        auto ast = sparql::parse(q.text);
        SstCase c = classify(ast.where.patterns.at(0), PrefixRegistry{});
        if (incoming) c = reverse_edge(c);
        ok = ok && emit_steps(map_to_instruction(c)) ==
                       chomp(testing::read_text(base.string() + ".sst"));
      }
      if (ok) {
        ++matched;
      } else {
        failed += " " + std::string(table) + "/" + q.id;
      }
    }
  }
  return {rows == 19 && matched == rows,
          std::to_string(matched) + "/" + std::to_string(rows) + " rows byte-identical" + failed};
}

Outcome worked_examples() {
  std::string failed;
  ir::MatchStep listing{{SstInstruction{"x", HasStep{"name", PropertyValue::string("marko")}, {}},
                         SstInstruction{"x", VertexStep{Direction::Out, "created"}, "y"}}};
  ir::Traversal t1 = translate_text("SELECT ?y WHERE { ?x v:name \"marko\" . ?x e:created ?y . }");
  if (!(t1 == ir::Traversal{{ir::GraphStep{}, listing, ir::SelectStep{{"y"}}}}) ||
      emit_groovy(t1) != "g.V().match(__.as('x').has('name','marko'), "
                         "__.as('x').out('created').as('y')).select('y')") {
    failed += " listing";
  }

  ir::Traversal t2 =
      translate_text("SELECT ?a ?b WHERE { ?a v:name ?b . ?a v:age ?d . FILTER(?d<30) }");
  bool where = false;
  for (const auto& s : t2.steps) {
    if (const auto* w = std::get_if<ir::WhereTraversalStep>(&s)) {
      where = w->predicate == ir::PredicateTree::leaf("d", ir::PredicateTree::Op::Lt,
                                                      PropertyValue::number(30));
    }
  }
  if (!where || emit_steps(t2).find("IsStep(lt(30))") == std::string::npos) failed += " filter";

  ir::Traversal t3 = translate_text(
      "SELECT ?soft ?person WHERE { { ?soft v:lang \"java\" . } UNION "
      "{ ?person v:name \"marko\" . } }");
  const auto* u = t3.steps.size() > 1 ? std::get_if<ir::UnionStep>(&t3.steps[1]) : nullptr;
  if (u == nullptr || u->branches.size() != 2) failed += " union";

  ir::Traversal t4 = translate_text("SELECT ?a WHERE { ?a v:name ?b . } LIMIT 2 OFFSET 10");
  if (!(t4.steps.back() == ir::IrStep{ir::RangeStep{10, 12}})) failed += " range";

  return {failed.empty(), failed.empty() ? "listing, filter, union, range" : "failed:" + failed};
}

Outcome brute_force_oracle() {
  auto start = Clock::now();
  std::mt19937_64 rng(20180101);
  int agree = 0, nonempty = 0;
  for (int round = 0; round < 200; ++round) {
    PropertyGraph g = testing::random_pg(rng, 12);
    ir::MatchStep m = testing::random_match(rng, 4);
    SolutionMultiset expected = testing::brute_force(m, g);
    nonempty += !expected.rows.empty();
    agree += multiset_equal(engine::execute(testing::match_traversal(m), g), expected);
  }
  double elapsed = seconds_since(start);
  char detail[128];
  std::snprintf(detail, sizeof detail, "%d/200 agree (%d non-empty), %.2f s", agree, nonempty,
                elapsed);
  return {agree == 200 && elapsed < 30.0, detail};
}

Outcome limitation_errors() {
  const fs::path dir = fs::temp_directory_path();
  struct Case {
    const char* file;
    const char* text;
    const char* diagnostic;
  };
  const Case cases[] = {
      {"s2g_accept_varpred.rq", "SELECT ?p WHERE { ?x ?p ?o . }\n", "variable predicate"},
      {"s2g_accept_regex.rq", "SELECT ?x WHERE { ?x v:name ?n . FILTER regex(?n, \"^ma\") }\n",
       "REGEX"},
  };
  std::string detail;
  bool all = true;
  for (const auto& c : cases) {
    const std::string query = (dir / c.file).string();
    const std::string err = (dir / (std::string(c.file) + ".err")).string();
    FILE* f = std::fopen(query.c_str(), "w");
    if (f == nullptr) return {false, "cannot write " + query};
    std::fputs(c.text, f);
    std::fclose(f);
    int code = testing::run_cli("translate " + query, {}, err);
    bool named = testing::read_text(err).find(c.diagnostic) != std::string::npos;
    all = all && code == 2 && named;
    detail += (detail.empty() ? "" : "; ") + std::string(c.diagnostic) + " -> exit " +
              std::to_string(code) + (named ? "" : " (diagnostic missing)");
  }
  return {all, detail};
}

Outcome translation_latency() {
  auto corpus = load_corpus(testing::source_dir() / "corpus");
  const int reps = 20;
  auto start = Clock::now();
  for (int r = 0; r < reps; ++r) {
    for (const auto& q : corpus) translate_text(q.text);
  }
  double mean_ms = seconds_since(start) * 1000.0 / (reps * static_cast<double>(corpus.size()));
  char detail[64];
  std::snprintf(detail, sizeof detail, "mean %.3f ms per query", mean_ms);
  return {!corpus.empty() && mean_ms < 50.0, detail};
}

Outcome randomized_laws() {
  std::mt19937_64 rng(31337);
  for (int round = 0; round < 1000; ++round) {
    std::string violation = testing::check_laws(rng);
    if (!violation.empty()) return {false, "case " + std::to_string(round) + ": " + violation};
  }
  return {true, "1000 cases"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"equivalence-suite", equivalence_suite},
      {"golden-translations", golden_translations},
      {"worked-examples", worked_examples},
      {"brute-force-oracle", brute_force_oracle},
      {"limitation-errors", limitation_errors},
      {"translation-latency", translation_latency},
      {"randomized-laws", randomized_laws},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
