// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "s2g/convert.hpp"
#include "s2g/number.hpp"
#include "s2g/prefix_registry.hpp"
#include "s2g/property_graph.hpp"
#include "s2g/rdf.hpp"
#include "support.hpp"

using namespace s2g;

TEST_CASE("numerals") {
  CHECK(is_numeral("29"));
  CHECK(is_numeral("-0.5"));
  CHECK(is_numeral("+.5"));
  CHECK_FALSE(is_numeral("5."));
  CHECK_FALSE(is_numeral("1e3"));
  CHECK_FALSE(is_numeral(""));
  CHECK_FALSE(is_numeral("-"));
  CHECK(parse_numeral("+12.25") == 12.25);
  CHECK_FALSE(parse_numeral("x").has_value());

  CHECK(canonical_number(29.0) == "29");
  CHECK(canonical_number(0.5) == "0.5");
  CHECK(canonical_number(-0.0) == "0");
  CHECK(canonical_number(0.1 + 0.2) == "0.30000000000000004");
  CHECK(canonical_number(1e20) == "100000000000000000000");
}

TEST_CASE("rdf terms compare numbers by value") {
  CHECK(RdfTerm::number("29") == RdfTerm::number("29.0"));
  CHECK(RdfTerm::number("29").to_ntriples() == "29");
  CHECK_FALSE(RdfTerm::number("29") == RdfTerm::string("29"));
  CHECK_FALSE(RdfTerm::iri("http://a") == RdfTerm::string("http://a"));
  CHECK_THROWS_AS(RdfTerm::number("twelve"), ParseError);
}

TEST_CASE("n-triples loading") {
  SUBCASE("literal forms") {
    RdfGraph g = load_ntriples(
        "<s> <v:name> \"tab\\there \\u00e9\" .\n"
        "# comment\n"
        "\n"
        "<s> <v:age> \"29\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
        "<s> <v:weight> 0.5.\n"
        "<s> <v:code> \"x\"^^<http://www.w3.org/2001/XMLSchema#string> .\n");
    REQUIRE(g.size() == 4);
    CHECK(g.triples().count(Triple{RdfTerm::iri("s"), RdfTerm::iri("v:name"),
                                   RdfTerm::string("tab\there \xc3\xa9")}));
    CHECK(g.triples().count(Triple{RdfTerm::iri("s"), RdfTerm::iri("v:age"), RdfTerm::number(29.0)}));
    CHECK(g.triples().count(Triple{RdfTerm::iri("s"), RdfTerm::iri("v:weight"), RdfTerm::number(0.5)}));
  }

  SUBCASE("rejections carry positions") {
    try {
      load_ntriples("<s> <p> <o> .\n<s> <p> \"o\"\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.pos().line == 2);
    }
    CHECK_THROWS_AS(load_ntriples("_:b <p> <o> ."), UnsupportedFeatureError);
    CHECK_THROWS_AS(load_ntriples("<s> <p> \"x\"@en ."), UnsupportedFeatureError);
    CHECK_THROWS_AS(load_ntriples("<s> <p> \"x\"^^<http://other#t> ."), UnsupportedFeatureError);
    CHECK_THROWS_AS(load_ntriples("<s> <p> <o> . junk"), ParseError);
    CHECK_THROWS_AS(load_ntriples("\"s\" <p> <o> ."), ParseError);
  }

  SUBCASE("round trip") {
    RdfGraph g = testing::toy_rdf();
    CHECK(load_ntriples(serialize_ntriples(g)).triples() == g.triples());
    CHECK(serialize_ntriples(load_ntriples(serialize_ntriples(g))) == serialize_ntriples(g));
  }
}

TEST_CASE("escape and local names") {
  CHECK(escape_string_literal("a\"b\\c\n") == "a\\\"b\\\\c\\n");
  CHECK(escape_string_literal(std::string("\x01", 1)) == "\\u0001");
  CHECK(local_name("http://example.org/person1") == "person1");
  CHECK(local_name("http://example.org/x#frag") == "frag");
  CHECK(local_name("v:name") == "v:name");
}

TEST_CASE("property graph records") {
  const std::string text =
      "{\"type\":\"v\",\"id\":1,\"label\":\"person\",\"props\":{\"name\":\"marko\"}}\n"
      "{\"type\":\"v\",\"id\":2,\"label\":\"person\",\"props\":{}}\n"
      "{\"type\":\"e\",\"id\":7,\"label\":\"knows\",\"src\":1,\"dst\":2,\"props\":{\"weight\":0.5}}\n";
  PropertyGraph g = load_pg(text);
  CHECK(g.vertices().size() == 2);
  REQUIRE(g.edges().size() == 1);
  CHECK(g.property(ElementRef{ElementKind::Edge, 7}, "weight")->as_number() == 0.5);
  CHECK(g.out_edges(1).size() == 1);
  CHECK(g.in_edges(2).size() == 1);
  CHECK(g.out_edges(2).empty());
  CHECK(serialize_pg(g) == text);

  CHECK_THROWS_AS(load_pg("{\"type\":\"v\",\"id\":1,\"props\":{}}"), GraphError);
  CHECK_THROWS_AS(load_pg("{\"type\":\"e\",\"id\":3,\"label\":\"k\",\"src\":1,\"dst\":2,\"props\":{}}"),
                  GraphError);
  CHECK_THROWS_AS(load_pg("{\"type\":\"v\",\"id\":1,\"label\":\"a\",\"props\":{}}\n"
                          "{\"type\":\"v\",\"id\":1,\"label\":\"b\",\"props\":{}}"),
                  GraphError);
  CHECK_THROWS_AS(load_pg("{not json"), ParseError);
  CHECK_THROWS_AS(load_pg("{\"type\":\"x\",\"id\":1,\"label\":\"a\",\"props\":{}}"), Error);
}

TEST_CASE("bundled graphs round-trip") {
  for (const char* name : {"data/toy.pgl", "data/toy_weighted.pgl"}) {
    std::string text = testing::read_text(testing::source_dir() / name);
    CHECK(serialize_pg(load_pg(text)) == text);
  }
  CHECK(serialize_pg(testing::toy_pg()) ==
        testing::read_text(testing::source_dir() / "data/toy.pgl"));
}

TEST_CASE("prefix registry") {
  PrefixRegistry r;
  CHECK_NOTHROW(r.validate());
  CHECK(r.implicit_prefix_names() == std::set<std::string>{"v", "e"});

  PrefixRegistry custom = parse_prefix_config(
      "# markers\n"
      "vertex_prefix=vp:\n"
      "edge_prefix=ep:\n"
      "vertex_label_key=vp:type\n"
      "edge_label_key=ep:type\n"
      "edge_property_keys=weight,since\n"
      "id_property_key=uri\n");
  CHECK(custom.vertex_prefix == "vp:");
  CHECK(custom.edge_property_keys == std::set<std::string>{"weight", "since"});
  CHECK(custom.id_key == "uri");

  CHECK_THROWS(parse_prefix_config("colour=blue\n"));
  CHECK_THROWS(parse_prefix_config("vertex_prefix=v\n"));
  CHECK_THROWS(parse_prefix_config("edge_prefix=v:\n"));
}

TEST_CASE("rdf to property graph") {
  PrefixRegistry r;
  SUBCASE("single label triple") {
    RdfGraph g;
    g.add({RdfTerm::iri("http://ex/m"), RdfTerm::iri("v:label"), RdfTerm::string("person")});
    PropertyGraph pg = rdf_to_pg(g, r);
    REQUIRE(pg.vertices().size() == 1);
    CHECK(pg.vertices()[0].label == "person");
    CHECK(pg.vertices()[0].properties.size() == 1);  // only the iri
    CHECK(pg.edges().empty());
  }

  SUBCASE("toy graph") {
    PropertyGraph pg = testing::toy_pg();
    CHECK(pg.vertices().size() == 6);
    CHECK(pg.edges().size() == 6);
    CHECK(pg.edges().front().id == 7);
    for (const auto& v : pg.vertices()) CHECK(v.properties.count("iri") == 1);
  }

  SUBCASE("rejections") {
    auto one = [&](const char* p, RdfTerm o) {
      RdfGraph g;
      g.add({RdfTerm::iri("http://ex/s"), RdfTerm::iri(p), std::move(o)});
      return g;
    };
    CHECK_THROWS_AS(rdf_to_pg(one("http://ex/p", RdfTerm::string("x")), r), ClassificationError);
    CHECK_THROWS_AS(rdf_to_pg(one("e:weight", RdfTerm::number(0.5)), r), ClassificationError);
    CHECK_THROWS_AS(rdf_to_pg(one("e:knows", RdfTerm::string("x")), r), ClassificationError);
    CHECK_THROWS_AS(rdf_to_pg(one("v:name", RdfTerm::iri("http://ex/o")), r), ClassificationError);
    CHECK_THROWS_AS(rdf_to_pg(one("e:label", RdfTerm::string("knows")), r), ClassificationError);

    RdfGraph twice = one("v:name", RdfTerm::string("a"));
    twice.add({RdfTerm::iri("http://ex/s"), RdfTerm::iri("v:name"), RdfTerm::string("b")});
    CHECK_THROWS_AS(rdf_to_pg(twice, r), ClassificationError);
  }
}
