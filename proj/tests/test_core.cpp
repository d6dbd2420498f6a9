#include <catch2/catch_amalgamated.hpp>

#include "hyperspan/core.hpp"
#include "hyperspan/testkit.hpp"
#include "test_util.hpp"

using namespace hyperspan;

TEST_CASE("hypergraph construction validates its input") {
  SECTION("single valid edge") {
    Hypergraph h(3, 3, {{0, 1, 2}}, {1.0});
    CHECK(h.q() == 3);
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 1);
    CHECK(h.weight(0) == 1.0);
  }
  SECTION("q=2 behaves as an ordinary graph") {
    Hypergraph h(2, 4, {{0, 1}, {1, 2}, {2, 3}}, {1, 2, 3});
    CHECK(h.edge_count() == 3);
    CHECK(h.edge(1) == std::vector<VertexId>{1, 2});
  }
  SECTION("repeated vertex inside an edge is non-uniform") {
    try {
      Hypergraph h(3, 4, {{0, 1, 1}}, {1.0});
      FAIL("expected NonUniformEdge");
    } catch (const Error& e) {
      CHECK(e.code() == errc::non_uniform_edge);
    }
  }
  SECTION("wrong edge size is non-uniform") {
    CHECK_THROWS_AS(Hypergraph(3, 5, {{0, 1}}, {1.0}), Error);
  }
  SECTION("vertex out of range") {
    try {
      Hypergraph h(2, 2, {{0, 5}}, {1.0});
      FAIL("expected VertexOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == errc::vertex_out_of_range);
    }
  }
  SECTION("negative weight") {
    try {
      Hypergraph h(2, 2, {{0, 1}}, {-0.5});
      FAIL("expected NegativeWeight");
    } catch (const Error& e) {
      CHECK(e.code() == errc::negative_weight);
    }
  }
  SECTION("duplicate vertex sets across distinct edges are allowed") {
    Hypergraph h(3, 3, {{0, 1, 2}, {0, 1, 2}}, {1.0, 2.0});
    CHECK(h.edge_count() == 2);
  }
  SECTION("duplicate labels are rejected") {
    CHECK_THROWS_AS(Hypergraph(2, 3, {{0, 1}, {1, 2}}, {1, 1}, {"a", "a"}), Error);
  }
  SECTION("auto labels are spreadsheet-style") {
    Hypergraph h(2, 3, {{0, 1}, {1, 2}}, {1, 1});
    CHECK(h.label(0) == "a");
    CHECK(h.label(1) == "b");
    CHECK(auto_label(25) == "z");
    CHECK(auto_label(26) == "aa");
  }
}

TEST_CASE("covered_vertices is the union of incidences") {
  Hypergraph h(3, 6, {{0, 1, 2}, {2, 3, 4}}, {1, 1});

  CHECK(covered_vertices(h, std::vector<EdgeId>{0, 1}) == std::vector<VertexId>{0, 1, 2, 3, 4});
  CHECK(covered_vertices(h, std::vector<EdgeId>{}).empty());
  CHECK_THROWS_AS(covered_vertices(h, std::vector<EdgeId>{7}), Error);

  SECTION("q=4 triple covers six vertices") {
    Hypergraph t = testutil::q4_triple();
    CHECK(covered_vertices(t, std::vector<EdgeId>{0, 1, 2}).size() == 6);
  }
}

TEST_CASE("subset_weight sums in ascending id order") {
  Hypergraph h(2, 4, {{0, 1}, {1, 2}, {2, 3}}, {1.0, 2.0, 3.0});
  CHECK(subset_weight(h, std::vector<EdgeId>{0, 2}) == 4.0);
  CHECK(subset_weight(h, std::vector<EdgeId>{}) == 0.0);
  CHECK(subset_weight(h, std::vector<EdgeId>{2, 0}) == 4.0);

  Hypergraph w = testutil::worked_instance();
  CHECK(subset_weight(w, std::vector<EdgeId>{0, 1, 2}) == 6.0);
}

TEST_CASE("edge subset caches coverage and weight") {
  Hypergraph h = testutil::worked_instance();
  EdgeSubset s(h);
  CHECK(s.empty());
  CHECK(s.covered_count() == 0);

  s.add(0);
  CHECK(s.covers(0));
  CHECK(s.covered_count() == 3);
  CHECK(s.overlap(1) == 1);  // y shares only vertex 2 with x
  CHECK(s.overlap(2) == 2);

  s.add(2);
  CHECK(s.members() == std::vector<EdgeId>{0, 2});
  CHECK(s.weight() == subset_weight(h, s.members()));
  CHECK_THROWS_AS(s.add(0), Error);
}

TEST_CASE("coverage properties hold on random instances") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenConfig cfg = sample_config(900 + seed, seed, 0, 9, 7);
    Hypergraph h = random_hypergraph(cfg);
    const std::size_t n = h.edge_count();
    Rng rng(seed);

    for (int trial = 0; trial < 20; ++trial) {
      std::vector<EdgeId> a, b;
      for (EdgeId e = 0; e < n; ++e) {
        if (rng.below(2)) a.push_back(e);
        if (rng.below(2)) b.push_back(e);
      }
      std::vector<EdgeId> both = a;
      both.insert(both.end(), b.begin(), b.end());

      // gamma(A u B) == gamma(A) u gamma(B), and monotonicity
      auto ga = covered_vertices(h, a);
      auto gb = covered_vertices(h, b);
      auto gu = covered_vertices(h, both);
      std::vector<VertexId> merged(ga);
      merged.insert(merged.end(), gb.begin(), gb.end());
      std::sort(merged.begin(), merged.end());
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      CHECK(gu == merged);
      CHECK(std::includes(gu.begin(), gu.end(), ga.begin(), ga.end()));

      // weight additivity over disjoint subsets
      std::vector<EdgeId> left, right;
      for (EdgeId e : a) {
        (e % 2 == 0 ? left : right).push_back(e);
      }
      const double sum = subset_weight(h, left) + subset_weight(h, right);
      const double whole = subset_weight(h, a);
      CHECK(std::abs(whole - sum) <= 1e-12 * std::max(1.0, std::abs(whole)));
    }

    for (EdgeId e = 0; e < n; ++e) {
      CHECK(covered_vertices(h, std::vector<EdgeId>{e}).size() ==
            static_cast<std::size_t>(h.q()));
    }
  }
}
