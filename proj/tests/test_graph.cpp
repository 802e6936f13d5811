#include <sstream>

#include "bdr/error.hpp"
#include "bdr/graph.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bdr;
using namespace bdr::testing;

namespace {

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int x : v) out.push_back(x + 1);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("graph-core");

TEST_CASE("construction validates") {
  CHECK_THROWS_AS(Graph(3, {{0, 1}}), Error);
  try {
    Graph(4, {{0, 1}, {2, 3}});
    FAIL("expected DisconnectedInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DisconnectedInput);
  }
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
  CHECK_NOTHROW(Graph(1, {}));
}

TEST_CASE("apsp") {
  SUBCASE("P3") {
    CHECK(apsp(path_graph(3)) == DissimilarityMatrix::from_rows({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
  }
  SUBCASE("K3") {
    const auto d = apsp(complete_graph(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(d(i, j) == (i == j ? 0 : 1));
  }
  SUBCASE("C5 against simple-path enumeration") {
    const auto g = cycle_graph(5);
    const auto d = apsp(g);
    CHECK(d(0, 2) == 2);
    CHECK(d(0, 3) == 2);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) CHECK(d(i, j) == brute_force_distance(g, i, j));
  }
  SUBCASE("triangle inequality and adjacency") {
    const auto g = g1(7, {{1, 2}, {1, 5}, {2, 3}, {3, 4}, {3, 6}, {5, 6}, {6, 7}, {2, 5}});
    const auto d = apsp(g);
    CHECK(is_metric(d));
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) CHECK((d(i, j) == 1) == (i != j && g.adjacent(i, j)));
  }
}

TEST_CASE("maximal distance") {
  const auto p3 = path_graph(3);
  const auto d = apsp(p3);
  CHECK(is_maximally_distant(p3, d, 0, 2));
  CHECK_FALSE(is_maximally_distant(p3, d, 0, 1));
  const auto c4 = cycle_graph(4);
  CHECK(is_maximally_distant(c4, apsp(c4), 0, 2));
  CHECK_THROWS_AS(is_maximally_distant(p3, d, 0, 3), Error);
  CHECK_THROWS_AS(is_maximally_distant(p3, d, 1, 1), Error);
}

TEST_CASE("boundary") {
  SUBCASE("paths have two leaves") {
    for (int n = 2; n <= 8; ++n) {
      const auto b = boundary(path_graph(n));
      CHECK(b.members == std::vector<int>{0, n - 1});
      CHECK(b.labels == std::vector{BoundaryLabel::Leaf, BoundaryLabel::Leaf});
    }
  }
  SUBCASE("cycles are all boundary") {
    for (int n = 3; n <= 8; ++n) {
      const auto b = boundary(cycle_graph(n));
      CHECK(b.size() == n);
      for (auto l : b.labels) CHECK(l == BoundaryLabel::NonLeafBoundary);
    }
  }
  SUBCASE("star boundary is its leaves") {
    for (int k = 2; k <= 6; ++k) {
      const auto b = boundary(star_graph(k));
      CHECK(b.size() == k);
      CHECK_FALSE(b.contains(0));
    }
  }
  SUBCASE("single vertex") {
    try {
      boundary(Graph(1, {}));
      FAIL("expected DegenerateInput");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateInput);
    }
  }
}

TEST_CASE("boundary_fast") {
  SUBCASE("spider with three legs") {
    const auto g = g1(7, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}});
    CHECK(one_based(boundary_fast(g, Family::Tree).members) == std::vector<int>{3, 5, 7});
    CHECK(boundary_fast(g, Family::Tree) == boundary(g));
  }
  SUBCASE("C3 with a pendant at vertex 1") {
    const auto g = g1(4, {{1, 2}, {2, 3}, {1, 3}, {1, 4}});
    const auto b = boundary_fast(g, Family::Unicyclic);
    CHECK(one_based(b.members) == std::vector<int>{2, 3, 4});
    CHECK(b.labels == std::vector{BoundaryLabel::NonLeafBoundary, BoundaryLabel::NonLeafBoundary, BoundaryLabel::Leaf});
    CHECK(b == boundary(g));
  }
  SUBCASE("K4 with a pendant edge") {
    const auto g = clique_with_paths(4, {1});
    const auto b = boundary_fast(g, Family::BlockGraph);
    CHECK(one_based(b.members) == std::vector<int>{2, 3, 4, 5});
    CHECK(b == boundary(g));
  }
  SUBCASE("mismatch") {
    CHECK_THROWS_AS(boundary_fast(cycle_graph(4), Family::Tree), Error);
    CHECK_THROWS_AS(boundary_fast(cycle_graph(4), Family::BlockGraph), Error);
    CHECK_THROWS_AS(boundary_fast(path_graph(4), Family::Unicyclic), Error);
    try {
      boundary_fast(cycle_graph(5), Family::Tree);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::FamilyMismatch);
    }
  }
}

TEST_CASE("classify_family") {
  auto fs = [](std::initializer_list<Family> l) {
    FamilySet s;
    for (auto f : l) s.add(f);
    return s;
  };
  CHECK(classify_family(path_graph(4)) == fs({Family::Tree, Family::BlockGraph}));
  CHECK(classify_family(cycle_graph(5)) == fs({Family::Unicyclic, Family::Cycle}));
  CHECK(classify_family(clique_with_paths(3, {2, 2, 2})) ==
        fs({Family::BlockGraph, Family::OneBlockGraph, Family::Unicyclic}));
  CHECK(classify_family(complete_graph(4)) == fs({Family::BlockGraph, Family::OneBlockGraph}));
  // Two triangles sharing a vertex: both blocks exterior.
  CHECK(classify_family(g1(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}})) == fs({Family::BlockGraph}));
  // Diamond K4 - e.
  CHECK(classify_family(g1(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}})) == fs({Family::Other}));
  CHECK(biconnected_components(path_graph(5)).size() == 4);
}

TEST_CASE("resolving sets") {
  const auto p3 = path_graph(3);
  CHECK(is_strong_resolving(p3, std::vector<Vertex>{0}));
  CHECK_FALSE(is_strong_resolving(cycle_graph(4), std::vector<Vertex>{0}));
  CHECK(is_doubly_resolving(p3, std::vector<Vertex>{0, 2}));
  CHECK_FALSE(is_doubly_resolving(cycle_graph(4), std::vector<Vertex>{0, 2}));
  CHECK_FALSE(is_strong_resolving(p3, std::vector<Vertex>{}));
  CHECK_FALSE(is_doubly_resolving(p3, std::vector<Vertex>{}));

  SUBCASE("boundary resolves strongly and doubly") {
    for (const auto& g : {path_graph(5), cycle_graph(6), star_graph(4), complete_graph(4),
                          clique_with_paths(3, {1, 2, 0})}) {
      const auto b = boundary(g).members;
      CHECK(is_strong_resolving(g, b));
      CHECK(is_doubly_resolving(g, b));
    }
  }

  SUBCASE("two order-7 graphs whose leaf pair resolves but neither doubly nor strongly") {
    const auto a = g1(7, {{1, 2}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 5}, {2, 7}, {3, 4}});
    const auto b = g1(7, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 7}});
    const std::vector<Vertex> leaves{5, 6};
    for (const auto& g : {a, b}) {
      CHECK(is_resolving(g, leaves));
      CHECK_FALSE(is_doubly_resolving(g, leaves));
      CHECK_FALSE(is_strong_resolving(g, leaves));
    }
    // Same D_{S,V} up to column order.
    auto cols = [&](const Graph& g) {
      const auto d = apsp(g);
      std::multiset<std::pair<Entry, Entry>> c;
      for (int x = 0; x < 7; ++x) c.insert({d(5, x), d(6, x)});
      return c;
    };
    CHECK(cols(a) == cols(b));
  }
}

TEST_CASE("eccentricity") {
  auto check = [](const Graph& g, int r, int d) {
    const auto p = eccentricity_profile(g);
    CHECK(p.radius == r);
    CHECK(p.diameter == d);
  };
  check(cycle_graph(5), 2, 2);
  check(path_graph(4), 2, 3);
  check(star_graph(3), 1, 2);
}

TEST_CASE("text formats") {
  const auto g = parse_graph("3 2\n1 2\n2 3\n");
  CHECK(g == path_graph(3));
  CHECK(format_graph(g) == "3 2\n1 2\n2 3\n");
  CHECK(parse_edge_list_string(3, edge_list_string(g)) == g);
  CHECK_THROWS_AS(parse_graph("3 2\n1 2\n"), Error);
  CHECK_THROWS_AS(parse_graph("3 1\n1 4\n"), Error);
  CHECK_THROWS_AS(parse_graph("x\n"), Error);
  try {
    parse_graph("4 2\n1 2\n3 4\n");
    FAIL("expected DisconnectedInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DisconnectedInput);
  }
  std::ostringstream dot;
  const std::vector<Vertex> hl{0, 2};
  write_dot(dot, g, hl);
  CHECK(dot.str() == "graph G {\n  1 [label=\"1\", style=filled];\n  2 [label=\"2\"];\n"
                     "  3 [label=\"3\", style=filled];\n  1 -- 2;\n  2 -- 3;\n}\n");
}

TEST_SUITE_END();
