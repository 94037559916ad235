// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "s2g/prefix_registry.hpp"
#include "s2g/property_graph.hpp"
#include "s2g/rdf.hpp"
#include "s2g/solution.hpp"
#include "s2g/sparql_ast.hpp"

namespace s2g {

/// How two result sets are compared.
enum class Comparison {
  Multiset,  // exact bag equality
  Sequence,  // ORDER BY present: identical row order
  Subset,    // LIMIT without ORDER BY: right size, drawn from the full result
};

struct CorpusQuery {
  std::string id;       // file stem, e.g. "Gc2"
  std::string feature;  // CGP, CONDITION, ...
  std::string text;
  bool unordered_limit = false;  // listed in the manifest
};

/// Loads every `.rq` file of a directory, sorted by id, plus the optional
/// `manifest.txt` (lines `<id> subset`; '#' starts a comment).
std::vector<CorpusQuery> load_corpus(const std::filesystem::path& dir);

/// Feature tag from a query id prefix: C, F, L, G, Gc, O, U, Op, M, S.
std::string feature_for_id(const std::string& id);

struct RunReport {
  std::string query_id;
  std::string feature;
  std::int64_t translate_micros = 0;
  std::size_t rdf_rows = 0;
  std::size_t pg_rows = 0;
  bool equivalent = false;
  std::string comparison;  // multiset / sequence / subset
  std::string detail;      // error or mismatch description
};

Comparison comparison_for(const sparql::SelectQuery& query,
                          bool unordered_limit);

/// Runs one query through both engines and compares normalised results.
RunReport verify_query(const CorpusQuery& query, const RdfGraph& rdf,
                       const PropertyGraph& pg, const PrefixRegistry& registry);

/// Verifies all queries concurrently; reports come back in corpus order.
std::vector<RunReport> verify_corpus(const std::vector<CorpusQuery>& corpus,
                                     const RdfGraph& rdf,
                                     const PropertyGraph& pg,
                                     const PrefixRegistry& registry);

/// Tab-separated report, one line per query plus a summary line. Timings
/// are included only when requested, since they vary between runs.
std::string format_report_tsv(const std::vector<RunReport>& reports,
                              bool with_timings);
std::string format_report_pretty(const std::vector<RunReport>& reports,
                                 bool with_timings);

struct RandomGraphSpec {
  std::size_t vertices = 1000;
  std::uint64_t seed = 42;
};

/// Person/software graph in the v:/e: vocabulary (label, name, age, lang,
/// knows, created). Vertices 1..6 mirror the bundled toy graph's kinds so
/// constant IRIs in the corpus resolve.
RdfGraph generate_random_rdf(const RandomGraphSpec& spec);

}  // namespace s2g
