#include "bdr/enumerate.hpp"

#include <unordered_map>

#include "bdr/error.hpp"
#include "bdr/isomorphism.hpp"

namespace bdr {

namespace {

class IsoClasses {
 public:
  void insert(Graph g) {
    auto& bucket = buckets_[invariant_hash(g)];
    for (int i : bucket)
      if (are_isomorphic(list_[i], g)) return;
    bucket.push_back(static_cast<int>(list_.size()));
    list_.push_back(std::move(g));
  }
  std::vector<Graph> take() { return std::move(list_); }

 private:
  std::unordered_map<std::size_t, std::vector<int>> buckets_;
  std::vector<Graph> list_;
};

void check_range(const char* what, int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " enumeration supports " + std::to_string(lo) +
                                                " <= n <= " + std::to_string(hi) + ", got " + std::to_string(n));
}

// g plus a new vertex joined to `nbrs`.
Graph add_vertex(const Graph& g, const std::vector<Vertex>& nbrs) {
  auto e = g.edges();
  const Vertex v = g.order();
  for (Vertex u : nbrs) e.emplace_back(u, v);
  return Graph(v + 1, std::move(e));
}

std::vector<Graph> add_leaves(const std::vector<Graph>& prev, IsoClasses seed = {}) {
  for (const auto& g : prev)
    for (Vertex u = 0; u < g.order(); ++u) seed.insert(add_vertex(g, {u}));
  return seed.take();
}

Graph clique(int h) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < h; ++i)
    for (Vertex j = i + 1; j < h; ++j) e.emplace_back(i, j);
  return Graph(h, std::move(e));
}

Graph cycle(int g) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < g; ++i) e.emplace_back(std::min(i, (i + 1) % g), std::max(i, (i + 1) % g));
  return Graph(g, std::move(e));
}

}  // namespace

std::vector<std::vector<Graph>> connected_graphs_up_to(int n_max) {
  check_range("connected graph", n_max, 1, 8);
  std::vector<std::vector<Graph>> out(n_max + 1);
  out[1].push_back(Graph(1, {}));
  for (int n = 2; n <= n_max; ++n) {
    IsoClasses next;
    for (const auto& g : out[n - 1]) {
      const int k = g.order();
      for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<Vertex> nbrs;
        for (Vertex u = 0; u < k; ++u)
          if (mask >> u & 1u) nbrs.push_back(u);
        next.insert(add_vertex(g, nbrs));
      }
    }
    out[n] = next.take();
  }
  return out;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  check_range("connected graph", n, 1, 8);
  return std::move(connected_graphs_up_to(n)[n]);
}

std::vector<Graph> enumerate_trees(int n) {
  check_range("tree", n, 1, 12);
  std::vector<Graph> cur{Graph(1, {})};
  for (int k = 2; k <= n; ++k) cur = add_leaves(cur);
  return cur;
}

std::vector<Graph> enumerate_unicyclic(int n) {
  check_range("unicyclic", n, 3, 10);
  std::vector<Graph> cur{cycle(3)};
  for (int k = 4; k <= n; ++k) {
    IsoClasses seed;
    seed.insert(cycle(k));
    cur = add_leaves(cur, std::move(seed));
  }
  return cur;
}

std::vector<Graph> enumerate_one_block(int n) {
  check_range("1-block", n, 3, 10);
  std::vector<Graph> cur{clique(3)};
  for (int k = 4; k <= n; ++k) {
    IsoClasses seed;
    seed.insert(clique(k));
    cur = add_leaves(cur, std::move(seed));
  }
  return cur;
}

std::vector<Graph> enumerate_block_graphs(int n) {
  check_range("block graph", n, 1, 9);
  std::vector<Graph> cur{Graph(1, {})};
  for (int k = 2; k <= n; ++k) {
    IsoClasses next;
    for (const auto& g : cur) {
      // A new vertex either hangs off one vertex or extends a whole block.
      for (Vertex u = 0; u < g.order(); ++u) next.insert(add_vertex(g, {u}));
      for (const auto& b : biconnected_components(g))
        if (b.vertices.size() >= 2) next.insert(add_vertex(g, b.vertices));
    }
    cur = next.take();
  }
  return cur;
}

}  // namespace bdr
