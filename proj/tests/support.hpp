#pragma once

// Small graph builders and brute-force oracles shared by the test suites.
// Nothing here calls into the code paths the oracles check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "bdr/graph.hpp"

namespace bdr::testing {

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

// Center is vertex 1 (0-based 0).
inline Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

inline Graph g1(int n, std::vector<Edge> one_based) { return Graph::from_one_based(n, one_based); }

// K_h with a pendant path of length lens[i] at corner i.
inline Graph clique_with_paths(int h, const std::vector<int>& lens) {
  std::vector<Edge> e;
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j) e.emplace_back(i, j);
  int next = h;
  for (int i = 0; i < static_cast<int>(lens.size()); ++i) {
    int prev = i;
    for (int t = 0; t < lens[i]; ++t) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, e);
}

// Shortest path length by exhaustive enumeration of simple paths.
inline int brute_force_distance(const Graph& g, Vertex s, Vertex t) {
  int best = -1;
  std::vector<char> on(g.order(), 0);
  std::function<void(Vertex, int)> dfs = [&](Vertex v, int len) {
    if (v == t) {
      if (best < 0 || len < best) best = len;
      return;
    }
    on[v] = 1;
    for (Vertex w : g.neighbors(v))
      if (!on[w]) dfs(w, len + 1);
    on[v] = 0;
  };
  dfs(s, 0);
  return best;
}

// Laplace expansion along the first row; fine up to ~10x10.
inline long long cofactor_det(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const long long term = a[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

inline std::vector<std::vector<long long>> as_ll(const DissimilarityMatrix& m) {
  std::vector<std::vector<long long>> out;
  for (auto& r : m.to_rows()) out.emplace_back(r.begin(), r.end());
  return out;
}

// Canonical code of a labeled graph: minimum upper-triangle adjacency bitstring
// over all n! relabelings. Only for n <= 7.
inline std::uint64_t brute_canonical_code(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = 1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ull;
  do {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code = (code << 1) | static_cast<std::uint64_t>(adj[perm[i]][perm[j]]);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Number of isomorphism classes of connected graphs on n vertices by labeled
// brute force over all 2^(n choose 2) edge sets.
inline int brute_force_connected_count(int n) {
  std::vector<Edge> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  std::set<std::uint64_t> codes;
  for (std::uint64_t mask = 0; mask < (1ull << all.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t b = 0; b < all.size(); ++b)
      if (mask >> b & 1) e.push_back(all[b]);
    if (!is_connected(n, e)) continue;
    codes.insert(brute_canonical_code(n, e));
  }
  return static_cast<int>(codes.size());
}

inline std::uint64_t brute_canonical_code(const Graph& g) { return brute_canonical_code(g.order(), g.edges()); }

}  // namespace bdr::testing
