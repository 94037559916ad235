// SPDX-License-Identifier: Apache-2.0
//
// s2g: translate SPARQL to Gremlin, run either side, verify a corpus.
//
// Exit codes: 0 ok, 1 I/O or graph error, 2 query rejected (parse,
// unsupported, classification, scoping), 3 runtime type error,
// 4 verification mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "s2g/convert.hpp"
#include "s2g/emitters.hpp"
#include "s2g/error.hpp"
#include "s2g/ref_evaluator.hpp"
#include "s2g/sparql_parser.hpp"
#include "s2g/translator.hpp"
#include "s2g/traversal_engine.hpp"
#include "s2g/verify.hpp"

namespace {

using namespace s2g;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const UnsupportedFeatureError*>(&e) ||
      dynamic_cast<const ClassificationError*>(&e) ||
      dynamic_cast<const ScopingError*>(&e)) {
    return 2;
  }
  if (dynamic_cast<const TypeError*>(&e)) return 3;
  return 1;
}

ir::Traversal translate_file(const std::string& path, const PrefixRegistry& registry,
                             bool incoming) {
  auto query = sparql::parse(read_file(path), sparql::parse_options_for(registry));
  return translate(query, TranslateOptions{registry, incoming});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SPARQL to Gremlin translator"};
  app.require_subcommand(1);

  std::string query_path, graph_path, corpus_dir, format = "groovy", report = "tsv";
  bool incoming = false, timings = false;
  std::size_t vertices = 1000;
  std::uint64_t seed = 42;

  auto* translate_cmd = app.add_subcommand("translate", "print the Gremlin traversal");
  translate_cmd->add_option("query", query_path, "SPARQL file")->required();
  translate_cmd->add_option("--format", format, "groovy, bytecode or steps")
      ->check(CLI::IsMember({"groovy", "bytecode", "steps"}));
  translate_cmd->add_flag("--incoming", incoming, "walk edges from the object side");

  auto* exec_cmd = app.add_subcommand(
      "exec", "run a query (TSV out): .nt graphs use the SPARQL evaluator, .pgl the traversal");
  exec_cmd->add_option("query", query_path, "SPARQL file")->required();
  exec_cmd->add_option("graph", graph_path, ".nt or .pgl file")->required();
  exec_cmd->add_flag("--incoming", incoming, "walk edges from the object side");

  auto* verify_cmd = app.add_subcommand("verify", "compare both engines over a corpus");
  verify_cmd->add_option("corpus", corpus_dir, "directory of .rq files")->required();
  verify_cmd->add_option("graph", graph_path, ".nt file")->required();
  verify_cmd->add_option("--report", report, "tsv or pretty")
      ->check(CLI::IsMember({"tsv", "pretty"}));
  verify_cmd->add_flag("--timings", timings, "include translation times");

  auto* convert_cmd = app.add_subcommand("convert", "write the property graph of an RDF file");
  convert_cmd->add_option("graph", graph_path, ".nt file")->required();

  auto* generate_cmd = app.add_subcommand("generate", "write a random RDF graph");
  generate_cmd->add_option("--vertices", vertices, "vertex count")
      ->check(CLI::Range(std::size_t{1}, std::size_t{10'000'000}));
  generate_cmd->add_option("--seed", seed, "RNG seed");

  CLI11_PARSE(app, argc, argv);

  std::string current = query_path.empty() ? graph_path : query_path;
  try {
    PrefixRegistry registry = registry_from_environment();

    if (*translate_cmd) {
      ir::Traversal t = translate_file(query_path, registry, incoming);
      if (format == "bytecode") {
        std::cout << emit_bytecode(t) << '\n';
      } else if (format == "steps") {
        std::cout << emit_steps(t) << '\n';
      } else {
        std::cout << emit_groovy(t) << '\n';
      }
      return 0;
    }
    if (*exec_cmd) {
      if (ends_with(graph_path, ".pgl")) {
        ir::Traversal t = translate_file(query_path, registry, incoming);
        current = graph_path;
        PropertyGraph g = load_pg(read_file(graph_path));
        engine::ExecOptions options;
        options.id_key = registry.id_key;
        std::cout << to_tsv(engine::execute(t, g, options));
      } else {
        auto query = sparql::parse(read_file(query_path), sparql::parse_options_for(registry));
        sparql::check_scoping(query);
        current = graph_path;
        RdfGraph g = load_ntriples(read_file(graph_path));
        std::cout << to_tsv(ref_evaluate(query, g));
      }
      return 0;
    }
    if (*verify_cmd) {
      current = corpus_dir;
      auto corpus = load_corpus(corpus_dir);
      if (corpus.empty()) {
        std::cerr << "warning: no .rq files in " << corpus_dir << '\n';
        return 0;
      }
      current = graph_path;
      RdfGraph rdf = load_ntriples(read_file(graph_path));
      PropertyGraph pg = rdf_to_pg(rdf, registry);
      auto reports = verify_corpus(corpus, rdf, pg, registry);
      std::cout << (report == "pretty" ? format_report_pretty(reports, timings)
                                       : format_report_tsv(reports, timings));
      std::string failed;
      for (const auto& r : reports) {
        if (!r.equivalent) failed += (failed.empty() ? "" : " ") + r.query_id;
      }
      if (!failed.empty()) {
        std::cerr << "not equivalent: " << failed << '\n';
        return 4;
      }
      return 0;
    }
    if (*convert_cmd) {
      std::cout << serialize_pg(rdf_to_pg(load_ntriples(read_file(graph_path)), registry));
      return 0;
    }
    if (*generate_cmd) {
      std::cout << serialize_ntriples(generate_random_rdf({vertices, seed}));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << format_diagnostic(current, e) << '\n';
    return exit_code_for(e);
  }
  return 0;
}
