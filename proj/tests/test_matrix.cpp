#include <random>

#include "bdr/error.hpp"
#include "bdr/matrix.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bdr;
using namespace bdr::testing;

TEST_SUITE_BEGIN("matrix-core");

TEST_CASE("construction reports the first bad cell") {
  CHECK_THROWS_WITH_AS(DissimilarityMatrix::from_rows({{0, 1}, {2, 0}}), doctest::Contains("(1,2)"), Error);
  CHECK_THROWS_WITH_AS(DissimilarityMatrix::from_rows({{1, 1}, {1, 0}}), doctest::Contains("(1,1)"), Error);
  CHECK_THROWS_WITH_AS(DissimilarityMatrix::from_rows({{0, 0}, {0, 0}}), doctest::Contains("(1,2)"), Error);
  CHECK_NOTHROW(DissimilarityMatrix::from_rows({{0}}));
}

TEST_CASE("is_metric") {
  CHECK(is_metric(DissimilarityMatrix::from_rows({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}})));
  const auto bad = DissimilarityMatrix::from_rows({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
  CHECK_FALSE(is_metric(bad));
  CHECK(find_triangle_violation(bad) == std::array{0, 1, 2});
  CHECK(is_metric(DissimilarityMatrix::from_rows({{0, 7}, {7, 0}})));
}

TEST_CASE("every 3x3 metric matrix is additive") {
  for (Entry a = 1; a <= 6; ++a)
    for (Entry b = 1; b <= 6; ++b)
      for (Entry c = 1; c <= 6; ++c) {
        const auto m = DissimilarityMatrix::from_rows({{0, a, b}, {a, 0, c}, {b, c, 0}});
        CHECK(is_additive(m) == is_metric(m));
      }
}

TEST_CASE("is_additive on graphs") {
  SUBCASE("trees") {
    CHECK(is_additive(apsp(path_graph(6))));
    CHECK(is_additive(apsp(star_graph(5))));
    CHECK(is_additive(apsp(g1(7, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}}))));
  }
  SUBCASE("C5 violates on some 4-subset, found by brute force over all five") {
    const auto d = apsp(cycle_graph(5));
    int violating = 0;
    for (int skip = 0; skip < 5; ++skip) {
      std::vector<int> q;
      for (int i = 0; i < 5; ++i)
        if (i != skip) q.push_back(i);
      auto s = pair_sums(d, q[0], q[1], q[2], q[3]);
      std::sort(s.begin(), s.end());
      if (s[1] != s[2]) ++violating;
    }
    CHECK(violating > 0);
    CHECK_FALSE(is_additive(d));
    CHECK(find_four_point_violation(d).has_value());
  }
  SUBCASE("diamond and C4") {
    CHECK_FALSE(is_additive(apsp(g1(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}))));
    CHECK_FALSE(is_additive(apsp(cycle_graph(4))));
  }
}

TEST_CASE("four-point forms agree on random matrices") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> dist(1, 9);
  int additive = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::array<Entry, 3> sums{dist(rng) + dist(rng), dist(rng) + dist(rng), dist(rng) + dist(rng)};
    CHECK(four_point_two_largest_equal(sums) == four_point_inequalities(sums));
    const int k = 4 + trial % 3;
    std::vector<std::vector<Entry>> rows(k, std::vector<Entry>(k, 0));
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) rows[i][j] = rows[j][i] = dist(rng) % 4 + 1;
    const auto m = DissimilarityMatrix::from_rows(rows);
    bool by_inequalities = is_metric(m);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        for (int h = j + 1; h < k; ++h)
          for (int l = h + 1; l < k; ++l) by_inequalities = by_inequalities && four_point_inequalities(pair_sums(m, i, j, h, l));
    CHECK(is_additive(m) == by_inequalities);
    if (is_additive(m)) {
      ++additive;
      CHECK(is_metric(m));
    }
  }
  CHECK(additive > 0);
}

TEST_CASE("det_exact") {
  CHECK(det_exact(apsp(path_graph(3))) == 4);
  CHECK(det_exact(apsp(complete_graph(3))) == 2);
  CHECK(det_exact(DissimilarityMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det_exact(DissimilarityMatrix::from_rows({{0}})) == 0);
  SUBCASE("matches cofactor expansion") {
    for (const auto& g : {cycle_graph(5), cycle_graph(6), clique_with_paths(3, {1}), star_graph(5),
                          g1(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 4}})}) {
      const auto d = apsp(g);
      CHECK(det_exact(d) == cofactor_det(as_ll(d)));
    }
  }
  SUBCASE("large values stay exact") {
    const auto d = apsp(path_graph(80));
    CHECK(det_exact(d) == tree_det_formula(80));
    CHECK(tree_det_formula(80) < 0);
  }
}

TEST_CASE("tree_det_formula") {
  CHECK(tree_det_formula(3) == 4);
  CHECK(tree_det_formula(2) == -1);
  CHECK(tree_det_formula(10) == -2304);
  CHECK(det_exact(apsp(path_graph(10))) == -2304);
  CHECK_THROWS_AS(tree_det_formula(1), Error);
}

TEST_CASE("block_det_formula") {
  CHECK(block_det_formula(BlockSizeSequence({3})) == 2);
  for (int n = 2; n <= 12; ++n)
    CHECK(block_det_formula(BlockSizeSequence(std::vector<int>(n - 1, 2))) == tree_det_formula(n));
  const BlockSizeSequence k3_pendant({2, 3});
  CHECK(k3_pendant.sizes() == std::vector<int>{3, 2});
  CHECK(k3_pendant.graph_order() == 4);
  CHECK(block_det_formula(k3_pendant) == -7);
  CHECK(cofactor_det(as_ll(apsp(clique_with_paths(3, {1})))) == -7);
  CHECK_THROWS_AS(BlockSizeSequence({3, 1}), Error);
  CHECK_THROWS_AS(BlockSizeSequence({}), Error);
}

TEST_CASE("check_lemma23") {
  CHECK(check_lemma23(4, BlockSizeSequence({2, 2, 2})) == Lemma23Outcome::HoldsWithEquality);
  CHECK(check_lemma23(4, BlockSizeSequence({4})) == Lemma23Outcome::Holds);
  CHECK(check_lemma23(4, BlockSizeSequence({3, 2})) == Lemma23Outcome::Holds);
  CHECK(block_det_magnitude(BlockSizeSequence({3, 2})) == 7);
  CHECK(block_det_magnitude(BlockSizeSequence({4})) == 3);
  CHECK_THROWS_AS(check_lemma23(5, BlockSizeSequence({3, 2})), Error);
  CHECK(all_block_size_sequences(5).size() == 5);  // partitions of 4
}

TEST_CASE("matrix text format") {
  const auto m = parse_matrix("3\n0 1 2\n1 0 1\n2 1 0\n");
  CHECK(m == apsp(path_graph(3)));
  CHECK(format_matrix(m) == "3\n0 1 2\n1 0 1\n2 1 0\n");
  CHECK_THROWS_WITH_AS(parse_matrix("2\n0 1\n2 0\n"), doctest::Contains("(1,2)"), Error);
  CHECK_THROWS_AS(parse_matrix("2\n0 1\n"), Error);
  CHECK_THROWS_AS(parse_matrix("2\n0 -1\n-1 0\n"), Error);
  CHECK_THROWS_AS(parse_matrix("2\n0 1 5\n1 0\n"), Error);
  try {
    parse_matrix("2\n0 1\n3 0\n");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}

TEST_SUITE_END();
