// SPDX-License-Identifier: Apache-2.0

#include "s2g/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <random>
#include <sstream>

#include "s2g/ref_evaluator.hpp"
#include "s2g/sparql_parser.hpp"
#include "s2g/translator.hpp"
#include "s2g/traversal_engine.hpp"

namespace s2g {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

const char* comparison_name(Comparison c) {
  switch (c) {
    case Comparison::Multiset: return "multiset";
    case Comparison::Sequence: return "sequence";
    case Comparison::Subset: return "subset";
  }
  return "?";
}

}  // namespace

std::string feature_for_id(const std::string& id) {
  static const std::pair<const char*, const char*> kTags[] = {
      {"Gc", "GROUP COUNT"}, {"Op", "OPTIONAL"}, {"C", "CGP"},
      {"F", "CONDITION"},    {"L", "RESTRICTION"}, {"G", "GROUP BY"},
      {"O", "ORDER BY"},     {"U", "UNION"},      {"M", "MIXED"},
      {"S", "STAR"},
  };
  for (const auto& [prefix, tag] : kTags) {
    std::string_view p(prefix);
    if (id.size() > p.size() && id.compare(0, p.size(), p) == 0 &&
        std::isdigit(static_cast<unsigned char>(id[p.size()]))) {
      return tag;
    }
  }
  return "OTHER";
}

std::vector<CorpusQuery> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error("not a directory: " + dir.string());
  }
  std::set<std::string> subset;
  const auto manifest = dir / "manifest.txt";
  if (std::filesystem::exists(manifest)) {
    std::istringstream in(read_file(manifest));
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream fields(line);
      std::string id, mode;
      if (!(fields >> id)) continue;
      if (!(fields >> mode) || mode != "subset") {
        throw Error("manifest: expected '<id> subset', got '" + line + "'");
      }
      subset.insert(id);
    }
  }
  std::vector<CorpusQuery> corpus;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".rq") continue;
    CorpusQuery q;
    q.id = entry.path().stem().string();
    q.feature = feature_for_id(q.id);
    q.text = read_file(entry.path());
    q.unordered_limit = subset.count(q.id) > 0;
    corpus.push_back(std::move(q));
  }
  std::sort(corpus.begin(), corpus.end(),
            [](const CorpusQuery& a, const CorpusQuery& b) { return a.id < b.id; });
  return corpus;
}

Comparison comparison_for(const sparql::SelectQuery& query, bool unordered_limit) {
  if (unordered_limit) return Comparison::Subset;
  if (!query.order_by.empty()) return Comparison::Sequence;
  return Comparison::Multiset;
}

RunReport verify_query(const CorpusQuery& query, const RdfGraph& rdf,
                       const PropertyGraph& pg, const PrefixRegistry& registry) {
  RunReport report;
  report.query_id = query.id;
  report.feature = query.feature;
  try {
    auto start = std::chrono::steady_clock::now();
    sparql::SelectQuery ast =
        sparql::parse(query.text, sparql::parse_options_for(registry));
    ir::Traversal traversal = translate(ast, TranslateOptions{registry, false});
    auto stop = std::chrono::steady_clock::now();
    report.translate_micros =
        std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();

    Comparison mode = comparison_for(ast, query.unordered_limit);
    report.comparison = comparison_name(mode);

    SolutionMultiset left = normalize(ref_evaluate(ast, rdf), registry);
    engine::ExecOptions exec;
    exec.id_key = registry.id_key;
    SolutionMultiset right =
        normalize(engine::execute(traversal, pg, exec), registry, &pg);
    report.rdf_rows = left.size();
    report.pg_rows = right.size();

    switch (mode) {
      case Comparison::Multiset:
        report.equivalent = multiset_equal(left, right);
        break;
      case Comparison::Sequence:
        report.equivalent = sequence_equal(left, right);
        break;
      case Comparison::Subset: {
        sparql::SelectQuery unlimited = ast;
        unlimited.limit.reset();
        unlimited.offset.reset();
        SolutionMultiset full = normalize(ref_evaluate(unlimited, rdf), registry);
        std::int64_t n = static_cast<std::int64_t>(full.size());
        std::int64_t low = ast.offset.value_or(0);
        std::int64_t high = ast.limit ? std::min(n, low + *ast.limit) : n;
        auto expected = static_cast<std::size_t>(std::max<std::int64_t>(0, high - low));
        report.equivalent = left.size() == expected && right.size() == expected &&
                            sub_multiset(left, full) && sub_multiset(right, full);
        break;
      }
    }
    if (!report.equivalent) {
      report.detail = left.columns == right.columns ? "results differ"
                                                    : "column mismatch";
    }
  } catch (const Error& e) {
    report.equivalent = false;
    report.detail = e.what();
  }
  return report;
}

std::vector<RunReport> verify_corpus(const std::vector<CorpusQuery>& corpus,
                                     const RdfGraph& rdf, const PropertyGraph& pg,
                                     const PrefixRegistry& registry) {
  std::vector<std::future<RunReport>> pending;
  pending.reserve(corpus.size());
  for (const auto& q : corpus) {
    pending.push_back(std::async(std::launch::async, [&q, &rdf, &pg, &registry] {
      return verify_query(q, rdf, pg, registry);
    }));
  }
  std::vector<RunReport> reports;
  reports.reserve(pending.size());
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

namespace {

std::string one_line(std::string text) {
  for (char& c : text) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

std::size_t count_equivalent(const std::vector<RunReport>& reports) {
  return static_cast<std::size_t>(std::count_if(
      reports.begin(), reports.end(), [](const RunReport& r) { return r.equivalent; }));
}

}  // namespace

std::string format_report_tsv(const std::vector<RunReport>& reports,
                              bool with_timings) {
  std::ostringstream out;
  out << "query\tfeature\tcomparison\trdf_rows\tpg_rows\tequivalent";
  if (with_timings) out << "\ttranslate_us";
  out << "\tdetail\n";
  for (const auto& r : reports) {
    out << r.query_id << '\t' << r.feature << '\t' << r.comparison << '\t'
        << r.rdf_rows << '\t' << r.pg_rows << '\t' << (r.equivalent ? "yes" : "no");
    if (with_timings) out << '\t' << r.translate_micros;
    out << '\t' << one_line(r.detail) << '\n';
  }
  out << "# equivalent " << count_equivalent(reports) << '/' << reports.size() << '\n';
  return out.str();
}

std::string format_report_pretty(const std::vector<RunReport>& reports,
                                 bool with_timings) {
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header{"query", "feature", "comparison", "rdf", "pg", "ok"};
  if (with_timings) header.push_back("translate_us");
  header.push_back("detail");
  table.push_back(header);
  for (const auto& r : reports) {
    std::vector<std::string> row{r.query_id, r.feature, r.comparison,
                                 std::to_string(r.rdf_rows), std::to_string(r.pg_rows),
                                 r.equivalent ? "yes" : "NO"};
    if (with_timings) row.push_back(std::to_string(r.translate_micros));
    row.push_back(one_line(r.detail));
    table.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : table) {
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  }
  std::ostringstream out;
  for (const auto& row : table) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      line += row[k];
      if (k + 1 < row.size()) line += std::string(width[k] - row[k].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  out << count_equivalent(reports) << '/' << reports.size() << " equivalent\n";
  return out.str();
}

RdfGraph generate_random_rdf(const RandomGraphSpec& spec) {
  static const char* kPeople[] = {"marko", "vadas", "josh",  "peter", "alice",
                                  "bob",   "carol", "dave",  "erin",  "frank",
                                  "grace", "heidi", "ivan",  "judy",  "mallory"};
  static const char* kSoftware[] = {"lop", "ripple", "gremlin", "tinker",
                                    "blueprints", "rexster", "pipes", "frames"};
  static const char* kLangs[] = {"java", "python", "cpp", "go"};
  // vertices 1..6 reproduce the bundled toy graph
  struct Fixed {
    bool person;
    const char* name;
    int age;
    const char* lang;
  };
  static const Fixed kToy[] = {{true, "marko", 29, nullptr},  {true, "vadas", 27, nullptr},
                               {false, "lop", 0, "java"},     {true, "josh", 32, nullptr},
                               {false, "ripple", 0, "java"},  {true, "peter", 35, nullptr}};

  std::mt19937_64 rng(spec.seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  const std::size_t n = spec.vertices;
  std::vector<bool> person(n + 1, false);
  std::vector<std::string> iri(n + 1);
  std::vector<std::size_t> people, software;
  RdfGraph g;
  auto add = [&](const std::string& s, const char* p, RdfTerm o) {
    g.add(Triple{RdfTerm::iri(s), RdfTerm::iri(p), std::move(o)});
  };

  for (std::size_t i = 1; i <= n; ++i) {
    bool is_person = i <= 6 ? kToy[i - 1].person : pick(3) != 0;
    person[i] = is_person;
    iri[i] = std::string("http://example.org/") + (is_person ? "person" : "software") +
             std::to_string(i);
    (is_person ? people : software).push_back(i);
    add(iri[i], "v:label", RdfTerm::string(is_person ? "person" : "software"));
    if (i <= 6) {
      add(iri[i], "v:name", RdfTerm::string(kToy[i - 1].name));
      if (is_person) {
        add(iri[i], "v:age", RdfTerm::number(static_cast<double>(kToy[i - 1].age)));
      } else {
        add(iri[i], "v:lang", RdfTerm::string(kToy[i - 1].lang));
      }
    } else if (is_person) {
      add(iri[i], "v:name", RdfTerm::string(kPeople[pick(std::size(kPeople))]));
      add(iri[i], "v:age", RdfTerm::number(static_cast<double>(18 + pick(53))));
    } else {
      add(iri[i], "v:name", RdfTerm::string(kSoftware[pick(std::size(kSoftware))]));
      add(iri[i], "v:lang", RdfTerm::string(kLangs[pick(std::size(kLangs))]));
    }
  }
  for (std::size_t i : people) {
    std::size_t knows = pick(3);
    for (std::size_t k = 0; k < knows && people.size() > 1; ++k) {
      std::size_t j = people[pick(people.size())];
      if (j != i) add(iri[i], "e:knows", RdfTerm::iri(iri[j]));
    }
    std::size_t created = pick(3);
    for (std::size_t k = 0; k < created && !software.empty(); ++k) {
      add(iri[i], "e:created", RdfTerm::iri(iri[software[pick(software.size())]]));
    }
  }
  return g;
}

}  // namespace s2g
