#include <catch2/catch_amalgamated.hpp>

#include "hyperspan/io.hpp"
#include "hyperspan/testkit.hpp"
#include "test_util.hpp"

using namespace hyperspan;

TEST_CASE("parsing the worked instance") {
  Hypergraph h = parse_instance(testutil::worked_instance_text());
  CHECK(h.q() == 3);
  CHECK(h.vertex_count() == 5);
  CHECK(h.edge_count() == 4);
  CHECK(h.label(0) == "x");
  CHECK(h.edge(0) == std::vector<VertexId>{0, 1, 2});  // file is 1-based
  CHECK(h.weight(3) == 4.0);
  CHECK(h.find_label("u") == EdgeId{3});
  CHECK_FALSE(h.find_label("nope").has_value());
}

TEST_CASE("parser accepts comments, blank lines and a trailing record") {
  Hypergraph h = parse_instance("# a graph\n\nhgr 2 3  # header\n\ne a 1 2 w 1\ne b 2 3 w 0.5");
  CHECK(h.edge_count() == 2);
  CHECK(h.weight(1) == 0.5);
}

TEST_CASE("parser reports line numbers") {
  auto expect_parse_error = [](const std::string& text, const std::string& fragment) {
    try {
      parse_instance(text);
      FAIL("expected ParseError for: " << text);
    } catch (const Error& e) {
      CHECK(e.code() == errc::parse_error);
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };

  expect_parse_error("hgr 3 4\ne a 1 1 2 w 1\n", "line 2: NonUniformEdge");
  expect_parse_error("hgr 3 4\ne a 1 2 9 w 1\n", "line 2: VertexOutOfRange");
  expect_parse_error("hgr 3 4\ne a 1 2 3 w -1\n", "line 2: NegativeWeight");
  expect_parse_error("hgr 1 4\n", "line 1");
  expect_parse_error("e a 1 2 w 1\n", "line 1");
  expect_parse_error("hgr 2 4\ne a 1 2 w 1\ne a 2 3 w 1\n", "line 3");
  expect_parse_error("hgr 2 4\nedge a 1 2 w 1\n", "line 2");
  expect_parse_error("hgr 2 4\ne a 1 2 w abc\n", "line 2");
  expect_parse_error("", "missing 'hgr' header");
}

TEST_CASE("canonical round trips are byte-identical") {
  const std::string canonical = testutil::worked_instance_text();
  CHECK(write_instance(parse_instance(canonical)) == canonical);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenConfig cfg = sample_config(640 + seed, seed, 0, 9, 7);
    Hypergraph h = random_hypergraph(cfg);
    const std::string once = write_instance(h);
    CHECK(write_instance(parse_instance(once)) == once);
  }
}

TEST_CASE("full-precision weights survive the round trip") {
  Hypergraph h(2, 3, {{0, 1}, {1, 2}}, {0.1, 1.0 / 3.0});
  Hypergraph back = parse_instance(write_instance(h));
  CHECK(back.weight(0) == 0.1);
  CHECK(back.weight(1) == 1.0 / 3.0);
}

TEST_CASE("dot export") {
  SECTION("single edge: four nodes, three arcs") {
    Hypergraph h(3, 3, {{0, 1, 2}}, {1.0}, {"a"});
    const std::string dot = konig_dot(h, build_konig(h, std::vector<EdgeId>{0}));
    CHECK(dot == "graph konig {\n"
                 "  \"a\" [shape=box];\n"
                 "  \"v1\" [shape=circle];\n"
                 "  \"v2\" [shape=circle];\n"
                 "  \"v3\" [shape=circle];\n"
                 "  \"a\" -- \"v1\";\n"
                 "  \"a\" -- \"v2\";\n"
                 "  \"a\" -- \"v3\";\n"
                 "}\n");
  }
  SECTION("removed vertices are dashed") {
    Hypergraph h = parse_instance(testutil::worked_instance_text());
    KonigGraph k = build_konig(h, std::vector<EdgeId>{0, 1, 2});
    k.removed[k.right_index(0)] = true;
    k.removed[k.right_index(1)] = true;
    const std::string dot = konig_dot(h, k);
    std::size_t dashed = 0;
    for (std::size_t pos = 0; (pos = dot.find("style=dashed", pos)) != std::string::npos; ++pos) {
      ++dashed;
    }
    CHECK(dashed == 2);
    CHECK(dot.find("\"v1\" [shape=circle, style=dashed];") != std::string::npos);
  }
  SECTION("node order follows labels") {
    Hypergraph h(2, 2, {{0, 1}, {0, 1}}, {1, 1}, {"zz", "aa"});
    const std::string dot = konig_dot(h, build_konig(h, std::vector<EdgeId>{0, 1}));
    CHECK(dot.find("\"aa\"") < dot.find("\"zz\""));
  }
}
