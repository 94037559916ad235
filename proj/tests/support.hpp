// SPDX-License-Identifier: Apache-2.0
//
// Helpers shared by the unit tests and the acceptance runner.

#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "s2g/ir.hpp"
#include "s2g/property_graph.hpp"
#include "s2g/rdf.hpp"
#include "s2g/solution.hpp"

namespace s2g::testing {

std::filesystem::path source_dir();
std::string read_text(const std::filesystem::path& path);

RdfGraph toy_rdf();
PropertyGraph toy_pg();           // rdf_to_pg(toy_rdf()) with the default registry
PropertyGraph toy_weighted_pg();  // toy graph with edge weights

/// Runs the CLI and returns its exit status; stdout/stderr go to the given
/// files when non-empty.
int run_cli(const std::string& args, const std::string& out_file = {},
            const std::string& err_file = {});

/// Small graph: up to `max_vertices` vertices labeled person/software with
/// names from {a,b,c}, ages from {1,2,3} on some vertices, and knows/created
/// edges including parallel edges and self-loops.
PropertyGraph random_pg(std::mt19937_64& rng, int max_vertices);

/// Up to `max_patterns` instructions over variables drawn from {a,b,c,d}.
ir::MatchStep random_match(std::mt19937_64& rng, int max_patterns);

/// Variables a match mentions, sorted.
std::vector<std::string> match_variables(const ir::MatchStep& match);

/// Every assignment of vertices and property values to the variables of
/// `match` that satisfies all of its instructions, weighted by the number of
/// parallel edges each hop can take. Columns are match_variables(match).
SolutionMultiset brute_force(const ir::MatchStep& match, const PropertyGraph& graph);

/// [GraphStep, match, SelectStep(match_variables)]
ir::Traversal match_traversal(const ir::MatchStep& match);

/// One randomized round of the cardinality, optional and union laws plus
/// bulking on/off. Returns an empty string or a description of the first
/// violated law.
std::string check_laws(std::mt19937_64& rng);

}  // namespace s2g::testing
