#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cutreg/graph.hpp"
#include "cutreg/spectral.hpp"
#include "test_support.hpp"

using namespace cutreg;
using namespace testsupport;

TEST_CASE("single edge loads as K2") {
  std::istringstream in("0 1 1.0\n");
  Graph g = load_graph(in);
  CHECK(g.vertex_count() == 2);
  CHECK(g.total_degree() == doctest::Approx(2.0));
  CHECK(g.degree(0) == doctest::Approx(1.0));
  CHECK(g.degree(1) == doctest::Approx(1.0));
}

TEST_CASE("unit 4-cycle has m = 8 and all degrees 2") {
  Graph g = c4();
  CHECK(g.total_degree() == doctest::Approx(8.0));
  for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == doctest::Approx(2.0));
}

TEST_CASE("duplicate edges are summed") {
  std::istringstream in("0 1 1.0\n1 0 0.5\n");
  Graph g = load_graph(in);
  CHECK(g.weight(0, 1) == doctest::Approx(1.5));
  CHECK(g.total_degree() == doctest::Approx(3.0));
}

TEST_CASE("comments and blank lines are skipped") {
  std::istringstream in("# header\n\n0 1 2.0  # trailing\n");
  Graph g = load_graph(in);
  CHECK(g.weight(0, 1) == doctest::Approx(2.0));
}

TEST_CASE("self-loops are rejected") {
  std::istringstream in("0 0 1.0\n");
  CHECK_THROWS_AS(load_graph(in), std::invalid_argument);
}

TEST_CASE("non-positive weights are rejected") {
  std::istringstream neg("0 1 -1.0\n");
  CHECK_THROWS_AS(load_graph(neg), std::invalid_argument);
  std::istringstream zero("0 1 0.0\n");
  CHECK_THROWS_AS(load_graph(zero), std::invalid_argument);
}

TEST_CASE("isolated vertex is rejected and the message names it") {
  try {
    Graph::from_edges(3, {{0, 1, 1.0}});
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("json graph form") {
  Graph g = load_graph_json(R"({"n":3,"edges":[[0,1,1.0],[1,2,2.0]]})");
  CHECK(g.vertex_count() == 3);
  CHECK(g.degree(1) == doctest::Approx(3.0));
}

TEST_CASE("cut values on the tiny fixtures") {
  Graph g2 = k2();
  CHECK(cut_value(g2, VertexSet::from_indices(2, {0})) == doctest::Approx(1.0));

  Graph g4 = c4();
  CHECK(cut_value(g4, VertexSet::from_indices(4, {0, 2})) ==
        doctest::Approx(4.0));
  CHECK(cut_value(g4, VertexSet(4)) == doctest::Approx(0.0));
}

TEST_CASE("subset degrees") {
  Graph g4 = c4();
  CHECK(subset_degree(g4, VertexSet::from_indices(4, {1, 3})) ==
        doctest::Approx(4.0));
  CHECK(subset_degree(g4, VertexSet::full(4)) ==
        doctest::Approx(g4.total_degree()));
  CHECK(subset_degree(k2(), VertexSet::from_indices(2, {0})) ==
        doctest::Approx(1.0));
}

TEST_CASE("normalized adjacency closed forms") {
  Matrix a2 = normalized_adjacency(k2());
  CHECK(a2(0, 1) == doctest::Approx(1.0));
  CHECK(a2(0, 0) == doctest::Approx(0.0));

  Matrix a4 = normalized_adjacency(c4());
  CHECK(a4(0, 1) == doctest::Approx(0.5));
  CHECK(a4(0, 2) == doctest::Approx(0.0));

  Matrix as = normalized_adjacency(star_k13());
  CHECK(as(0, 1) == doctest::Approx(1.0 / std::sqrt(3.0)));
}

TEST_CASE("cut is symmetric under complement and matches dense bilinear") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Graph g = random_weighted(8, 0.5, seed);
    VertexSet s = random_subset(8, seed + 100);
    CHECK(cut_value(g, s) ==
          doctest::Approx(cut_value(g, s.complement())).epsilon(1e-12));
    CHECK(cut_value(g, s) ==
          doctest::Approx(dense_bilinear(g.adjacency(), s, s.complement()))
              .epsilon(1e-12));
  }
}

TEST_CASE("normalized adjacency eigenvalues stay in [-1, 1]") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = random_gnp(9, 0.5, seed);
    Spectrum spec = eig_sym(normalized_adjacency(g));
    for (double lam : spec.eigenvalues) {
      CHECK(lam <= 1.0 + 1e-9);
      CHECK(lam >= -1.0 - 1e-9);
    }
  }
}
