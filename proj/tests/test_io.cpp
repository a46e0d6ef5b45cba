#include <catch2/catch_amalgamated.hpp>

#include "gitstab/io.hpp"
#include "test_helpers.hpp"

using namespace gitstab;
using namespace fixtures;

TEST_CASE("documents round trip with labels intact") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    CurveGraph g = random_graph(rng);
    CurveDocument doc = parse_curve_document(curve_document_json(g));
    REQUIRE(doc.graph.vertex_count() == g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) {
      CHECK(doc.graph.vertex(i).id == g.vertex(i).id);
      CHECK(doc.graph.vertex(i).genus == g.vertex(i).genus);
      CHECK(doc.graph.vertex(i).cusps == g.vertex(i).cusps);
      CHECK(doc.graph.vertex(i).exceptional == g.vertex(i).exceptional);
    }
    CHECK(are_isomorphic(doc.graph, g));
  }
}

TEST_CASE("multidegrees round trip") {
  CurveGraph g = two_elliptic();
  Multidegree md = make_multidegree(g, {{"v1", 4}, {"v2", 5}});
  CurveDocument doc = parse_curve_document(curve_document_json(g, &md));
  REQUIRE(doc.multidegree.has_value());
  CHECK(doc.multidegree->degrees == md.degrees);
  REQUIRE(doc.degree.has_value());
  CHECK(*doc.degree == 9);
}

TEST_CASE("defaults: kind, cusps and exceptional are optional") {
  auto doc = parse_curve_document_text(R"({
    "vertices": [{"id": "a", "genus": 1}, {"id": "b", "genus": 1}],
    "edges": [{"ends": ["a", "b"]}]
  })");
  CHECK(doc.graph.vertex(0).cusps == 0);
  CHECK_FALSE(doc.graph.vertex(0).exceptional);
  CHECK(doc.graph.edges()[0].kind == EdgeKind::Node);
  CHECK_FALSE(doc.degree.has_value());
  CHECK_FALSE(doc.multidegree.has_value());
}

TEST_CASE("strict mode rejects unknown keys, lenient accepts them") {
  const std::string text = R"({
    "vertices": [{"id": "a", "genus": 2, "color": "blue"}]
  })";
  CHECK_THROWS_AS(parse_curve_document_text(text), ParseError);
  CHECK_NOTHROW(parse_curve_document_text(text, true));

  const std::string top = R"({
    "vertices": [{"id": "a", "genus": 2}],
    "comment": "hello"
  })";
  CHECK_THROWS_AS(parse_curve_document_text(top), ParseError);
  CHECK_NOTHROW(parse_curve_document_text(top, true));
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_curve_document_text("not json"), ParseError);
  CHECK_THROWS_AS(parse_curve_document_text("[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_curve_document_text(R"({"edges": []})"), ParseError);

  // duplicate ids
  CHECK_THROWS_AS(parse_curve_document_text(R"({
    "vertices": [{"id": "a", "genus": 1}, {"id": "a", "genus": 1}]
  })"),
                  ParseError);

  // unknown edge endpoint
  CHECK_THROWS_AS(parse_curve_document_text(R"({
    "vertices": [{"id": "a", "genus": 2}],
    "edges": [{"ends": ["a", "z"]}]
  })"),
                  ParseError);

  // bad kind
  CHECK_THROWS_AS(parse_curve_document_text(R"({
    "vertices": [{"id": "a", "genus": 2}],
    "edges": [{"ends": ["a", "a"], "kind": "cusp"}]
  })"),
                  ParseError);

  // negative decorations
  CHECK_THROWS_AS(parse_curve_document_text(R"({
    "vertices": [{"id": "a", "genus": -1}]
  })"),
                  ParseError);

  // missing genus
  CHECK_THROWS_AS(parse_curve_document_text(R"({
    "vertices": [{"id": "a"}]
  })"),
                  ParseError);
}

TEST_CASE("degree and multidegree must agree") {
  CHECK_THROWS_AS(parse_curve_document_text(R"({
    "vertices": [{"id": "a", "genus": 2}],
    "degree": 5,
    "multidegree": {"a": 6}
  })"),
                  ParseError);

  // multidegree must cover every vertex
  CHECK_THROWS_AS(parse_curve_document_text(R"({
    "vertices": [{"id": "a", "genus": 1}, {"id": "b", "genus": 1}],
    "edges": [{"ends": ["a", "b"]}],
    "multidegree": {"a": 5}
  })"),
                  ParseError);

  // and must not name strangers
  CHECK_THROWS_AS(parse_curve_document_text(R"({
    "vertices": [{"id": "a", "genus": 2}],
    "multidegree": {"a": 5, "z": 1}
  })"),
                  ParseError);
}

TEST_CASE("serialization is deterministic") {
  CurveGraph g = tacnode_model(1);
  Multidegree md = make_multidegree(g, {{"host", 9}, {"exc0", 1}});
  CHECK(curve_document_json(g, &md).dump() == curve_document_json(g, &md).dump());
}
