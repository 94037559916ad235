// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <fstream>
#include <random>

#include "s2g/convert.hpp"
#include "s2g/ref_evaluator.hpp"
#include "s2g/sparql_parser.hpp"
#include "s2g/translator.hpp"
#include "s2g/traversal_engine.hpp"
#include "s2g/verify.hpp"
#include "support.hpp"

using namespace s2g;

namespace {

SolutionMultiset ref(const std::string& text, const RdfGraph& g) {
  return ref_evaluate(sparql::parse(text), g);
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("s2g_test_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("reference evaluator basics") {
  RdfGraph g = testing::toy_rdf();

  SUBCASE("single pattern equals a scan") {
    SolutionMultiset s = ref("SELECT ?x ?n WHERE { ?x v:name ?n }", g);
    std::size_t scanned = 0;
    for (const auto& t : g.triples()) scanned += t.predicate.lexical() == "v:name";
    CHECK(s.size() == scanned);
  }

  SUBCASE("filter over the four persons") {
    CHECK(ref("SELECT ?a WHERE { ?a v:age ?d . FILTER(?d < 30) }", g).size() == 2);
  }

  SUBCASE("disjoint union adds up") {
    auto a = ref("SELECT ?x WHERE { ?x v:lang ?l }", g).size();
    auto b = ref("SELECT ?x WHERE { ?x v:age ?l }", g).size();
    CHECK(ref("SELECT ?x WHERE { { ?x v:lang ?l } UNION { ?x v:age ?l } }", g).size() == a + b);
  }

  SUBCASE("left join keeps unmatched rows") {
    SolutionMultiset base = ref("SELECT ?x WHERE { ?x v:label \"person\" }", g);
    SolutionMultiset opt = ref(
        "SELECT ?x WHERE { ?x v:label \"person\" OPTIONAL { ?x e:knows ?y } }", g);
    CHECK(sub_multiset(base, opt));
    CHECK(opt.size() == 5);
  }

  SUBCASE("type errors") {
    CHECK_THROWS_AS(ref("SELECT ?x WHERE { ?x v:name ?n FILTER (?n > 3) }", g), TypeError);
    CHECK_THROWS_AS(ref("SELECT ?x WHERE { ?x e:knows ?y FILTER (?x < ?y) }", g), TypeError);
  }
}

TEST_CASE("normalisation") {
  PrefixRegistry r;
  PropertyGraph pg = testing::toy_pg();
  SolutionMultiset rdf{{"x", "n", "a"},
                       {{RdfTerm::iri("http://example.org/person1"), RdfTerm::string("marko"),
                         RdfTerm::number(29.0)}}};
  SolutionMultiset prop{{"x", "n", "a"},
                        {{ElementRef{ElementKind::Vertex, 1}, PropertyValue::string("marko"),
                          PropertyValue::number(29)}}};
  SolutionMultiset left = normalize(rdf, r);
  CHECK(multiset_equal(left, normalize(prop, r, &pg)));
  CHECK(to_tsv(left) == "x\tn\ta\n<person1>\t\"marko\"\t29\n");

  SolutionMultiset edge{{"e"}, {{ElementRef{ElementKind::Edge, 7}}}};
  CHECK_THROWS_AS(normalize(edge, r, &pg), NormalizationError);
  CHECK_THROWS_AS(normalize(prop, r), NormalizationError);
}

TEST_CASE("corpus is equivalent on the toy graph") {
  auto corpus = load_corpus(testing::source_dir() / "corpus");
  REQUIRE(corpus.size() == 30);
  std::map<std::string, int> per_feature;
  for (const auto& q : corpus) ++per_feature[q.feature];
  CHECK(per_feature.size() == 10);
  for (const auto& [feature, n] : per_feature) CHECK(n == 3);

  RdfGraph rdf = testing::toy_rdf();
  PrefixRegistry r;
  auto reports = verify_corpus(corpus, rdf, rdf_to_pg(rdf, r), r);
  for (const auto& report : reports) {
    CAPTURE(report.query_id);
    CAPTURE(report.detail);
    CHECK(report.equivalent);
    CHECK(report.rdf_rows == report.pg_rows);
  }
  CHECK(format_report_tsv(reports, false) == format_report_tsv(reports, false));
}

TEST_CASE("random basic graph patterns agree across engines") {
  std::mt19937_64 rng(5);
  PrefixRegistry r;
  RdfGraph rdf = generate_random_rdf({40, 3});
  PropertyGraph pg = rdf_to_pg(rdf, r);
  const char* vars[] = {"?a", "?b", "?c"};
  const char* preds[] = {"v:name", "v:age", "v:lang", "v:label", "e:knows", "e:created"};
  const char* consts[] = {"\"person\"", "\"java\"", "29", "<http://example.org/person1>"};
  int compared = 0;
  for (int round = 0; round < 300; ++round) {
    std::string body;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < n; ++k) {
      bool constant = rng() % 4 == 0;
      body += std::string(vars[rng() % 3]) + " " + preds[rng() % 6] + " " +
              (constant ? consts[rng() % 4] : vars[rng() % 3]) + " . ";
    }
    std::string text = "SELECT * WHERE { " + body + "}";
    CAPTURE(text);
    sparql::SelectQuery q;
    ir::Traversal t;
    try {
      q = sparql::parse(text);
      t = translate(q, TranslateOptions{r, rng() % 2 == 0});
    } catch (const Error&) {
      continue;  // e.g. a label pattern with an IRI object
    }
    ++compared;
    CHECK(multiset_equal(normalize(ref_evaluate(q, rdf), r),
                         normalize(engine::execute(t, pg), r, &pg)));
  }
  CHECK(compared > 150);
}

TEST_CASE("random graph generator") {
  RdfGraph a = generate_random_rdf({200, 9});
  CHECK(serialize_ntriples(a) == serialize_ntriples(generate_random_rdf({200, 9})));
  CHECK(serialize_ntriples(a) != serialize_ntriples(generate_random_rdf({200, 10})));
  PropertyGraph pg = rdf_to_pg(a, PrefixRegistry{});
  CHECK(pg.vertices().size() == 200);
  CHECK(serialize_ntriples(generate_random_rdf({1000, 42})) ==
        testing::read_text(testing::source_dir() / "data/random1000.nt"));
}

TEST_CASE("command line") {
  const std::string src = testing::source_dir().string();
  const std::string out = temp_path("out.txt");
  const std::string err = temp_path("err.txt");

  CHECK(testing::run_cli("translate " + src + "/tests/golden/listing1.rq", out) == 0);
  CHECK(testing::read_text(out) ==
        testing::read_text(src + "/tests/golden/listing1.groovy"));
  CHECK(testing::run_cli("translate --format bytecode " + src + "/tests/golden/table2/offset.rq",
                         out) == 0);
  CHECK(testing::read_text(out) ==
        testing::read_text(src + "/tests/golden/table2/offset.gbc.json"));

  std::string varpred = write_temp("varpred.rq", "SELECT ?p WHERE { ?x ?p ?o }\n");
  CHECK(testing::run_cli("translate " + varpred, out, err) == 2);
  CHECK(testing::read_text(err).find("variable predicate") != std::string::npos);
  CHECK(testing::read_text(err).find(varpred + ":1:") == 0);

  std::string regex = write_temp(
      "regex.rq", "SELECT ?x WHERE { ?x v:name ?n . FILTER regex(?n, \"^ma\") }\n");
  CHECK(testing::run_cli("translate " + regex, out, err) == 2);
  CHECK(testing::read_text(err).find("REGEX") != std::string::npos);

  std::string typed = write_temp("typed.rq", "SELECT ?x WHERE { ?x v:name ?n FILTER (?n < 3) }\n");
  CHECK(testing::run_cli("exec " + typed + " " + src + "/data/toy.nt", out, err) == 3);
  CHECK(testing::run_cli("exec " + src + "/corpus/F1.rq " + src + "/data/toy.pgl", out) == 0);
  CHECK(testing::read_text(out).rfind("x\tn\ta\n", 0) == 0);
  CHECK(testing::run_cli("exec " + src + "/corpus/F1.rq " + src + "/data/toy.nt", out) == 0);
  CHECK(testing::read_text(out).rfind("x\tn\ta\n<http://example.org/person", 0) == 0);
  CHECK(testing::run_cli("exec " + src + "/tests/golden/listing1.rq " + src + "/data/toy.pgl",
                         out) == 0);
  CHECK(testing::read_text(out) == "y\nv[2]\n");
  std::string empty_graph = write_temp("empty.pgl", "");
  CHECK(testing::run_cli("exec " + src + "/tests/golden/listing1.rq " + empty_graph, out) == 0);
  CHECK(testing::read_text(out) == "y\n");

  CHECK(testing::run_cli("translate /nonexistent.rq", out, err) == 1);
  CHECK(testing::run_cli("verify " + src + "/corpus " + src + "/data/toy.nt", out) == 0);
  std::string first = testing::read_text(out);
  CHECK(first.find("# equivalent 30/30") != std::string::npos);
  CHECK(testing::run_cli("verify " + src + "/corpus " + src + "/data/toy.nt", out) == 0);
  CHECK(testing::read_text(out) == first);

  std::filesystem::path empty = temp_path("empty_corpus");
  std::filesystem::create_directories(empty);
  CHECK(testing::run_cli("verify " + empty.string() + " " + src + "/data/toy.nt", out, err) == 0);
  CHECK(testing::read_text(err).find("warning") != std::string::npos);

  std::filesystem::path broken = temp_path("broken_corpus");
  std::filesystem::create_directories(broken);
  std::ofstream(broken / "X1.rq") << "SELECT ?n WHERE { ?x v:name ?n } LIMIT 1 OFFSET 1\n";
  CHECK(testing::run_cli("verify " + broken.string() + " " + src + "/data/toy.nt", out, err) == 4);
  CHECK(testing::read_text(err).find("X1") != std::string::npos);
}
