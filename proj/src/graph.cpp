#include "bdr/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "bdr/error.hpp"

namespace bdr {

namespace {

std::string vid(Vertex v) { return std::to_string(v + 1); }

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order())
    throw Error(ErrorKind::InvalidArgument, "vertex " + vid(v) + " out of range 1.." + std::to_string(g.order()));
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n > 0 ? n : 0) {
  if (n_ < 1) throw Error(ErrorKind::InvalidArgument, "graph order must be at least 1");
  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw Error(ErrorKind::InvalidArgument, "edge " + vid(u) + "-" + vid(v) + " out of range");
    if (u == v) throw Error(ErrorKind::InvalidArgument, "self-loop at vertex " + vid(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end())
    throw Error(ErrorKind::InvalidArgument, "duplicate edge " + vid(it->first) + "-" + vid(it->second));
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  const auto dist = bfs_distances(adj_, 0);
  if (auto it = std::find(dist.begin(), dist.end(), -1); it != dist.end())
    throw Error(ErrorKind::DisconnectedInput,
                "vertex " + vid(static_cast<Vertex>(it - dist.begin())) + " is unreachable from vertex 1");
}

Graph Graph::from_one_based(int n, const std::vector<Edge>& edges) {
  std::vector<Edge> shifted;
  shifted.reserve(edges.size());
  for (auto [u, v] : edges) shifted.emplace_back(u - 1, v - 1);
  return Graph(n, std::move(shifted));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<int> bfs_distances(const std::vector<std::vector<Vertex>>& adj, Vertex source) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : adj[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(int n, std::span<const Edge> edges) {
  if (n < 1) return false;
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  const auto dist = bfs_distances(adj, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

DistanceMatrix apsp(const Graph& g) {
  const int n = g.order();
  std::vector<Entry> flat(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    const auto dist = bfs_distances(g.adjacency(), s);
    std::copy(dist.begin(), dist.end(), flat.begin() + static_cast<std::ptrdiff_t>(s) * n);
  }
  return DistanceMatrix(n, std::move(flat));
}

bool is_maximally_distant(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw Error(ErrorKind::InvalidArgument, "maximal distance needs two distinct vertices");
  return std::all_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex w) { return d(u, w) <= d(u, v); });
}

bool BoundaryPartition::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

std::vector<int> BoundaryPartition::leaves() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (labels[i] == BoundaryLabel::Leaf) out.push_back(members[i]);
  return out;
}

namespace {

BoundaryPartition label_by_degree(const Graph& g, std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  BoundaryPartition p;
  for (Vertex v : members) {
    p.members.push_back(v);
    p.labels.push_back(g.degree(v) == 1 ? BoundaryLabel::Leaf : BoundaryLabel::NonLeafBoundary);
  }
  return p;
}

}  // namespace

BoundaryPartition boundary(const Graph& g, const DistanceMatrix& d) {
  const int n = g.order();
  if (n == 1) throw Error(ErrorKind::DegenerateInput, "boundary of a single vertex is undefined");
  // maximal[u][v]: v is maximally distant from u.
  std::vector<std::vector<char>> maximal(n, std::vector<char>(n, 0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) maximal[u][v] = is_maximally_distant(g, d, u, v);
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      if (u != v && maximal[u][v] && maximal[v][u]) {
        members.push_back(v);
        break;
      }
    }
  }
  return label_by_degree(g, std::move(members));
}

BoundaryPartition boundary(const Graph& g) { return boundary(g, apsp(g)); }

DistanceMatrix boundary_matrix(const Graph& g) {
  const auto d = apsp(g);
  return d.submatrix(boundary(g, d).members);
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Tree: return "Tree";
    case Family::BlockGraph: return "BlockGraph";
    case Family::OneBlockGraph: return "OneBlockGraph";
    case Family::Unicyclic: return "Unicyclic";
    case Family::Cycle: return "Cycle";
    case Family::Other: return "Other";
  }
  return "?";
}

std::vector<Family> FamilySet::members() const {
  std::vector<Family> out;
  for (auto f : {Family::Tree, Family::BlockGraph, Family::OneBlockGraph, Family::Unicyclic, Family::Cycle,
                 Family::Other})
    if (has(f)) out.push_back(f);
  return out;
}

std::string FamilySet::to_string() const {
  std::string s = "{";
  for (auto f : members()) {
    if (s.size() > 1) s += ",";
    s += bdr::to_string(f);
  }
  return s + "}";
}

std::vector<Block> biconnected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<Block> blocks;
  struct Frame {
    Vertex v, parent;
    std::size_t next;
  };
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    std::vector<Frame> frames{{root, -1, 0}};
    while (!frames.empty()) {
      Frame& f = frames.back();
      const Vertex v = f.v;
      if (f.next < g.neighbors(v).size()) {
        const Vertex w = g.neighbors(v)[f.next++];
        if (disc[w] < 0) {
          edge_stack.emplace_back(v, w);
          disc[w] = low[w] = timer++;
          frames.push_back({w, v, 0});
        } else if (w != f.parent && disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const Vertex p = f.parent;
      frames.pop_back();
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        Block b;
        std::set<Vertex> vs;
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          vs.insert(e.first);
          vs.insert(e.second);
          ++b.edge_count;
          if (e == Edge{p, v}) break;
        }
        b.vertices.assign(vs.begin(), vs.end());
        blocks.push_back(std::move(b));
      }
    }
  }
  return blocks;
}

bool is_block_graph(const Graph& g) {
  const auto blocks = biconnected_components(g);
  return std::all_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.is_clique(); });
}

std::vector<Vertex> cycle_vertices(const Graph& g) {
  std::vector<int> deg(g.order());
  std::vector<char> removed(g.order(), 0);
  std::deque<Vertex> leaves;
  for (Vertex v = 0; v < g.order(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.front();
    leaves.pop_front();
    if (removed[v]) continue;
    removed[v] = 1;
    for (Vertex w : g.neighbors(v))
      if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!removed[v]) out.push_back(v);
  return out;
}

namespace {

// Component of g - E(block) containing x is a tree.
bool branching_graph_is_tree(const Graph& g, const Block& block, Vertex x) {
  std::vector<char> in_block(g.order(), 0);
  for (Vertex v : block.vertices) in_block[v] = 1;
  auto skip = [&](Vertex a, Vertex b) { return in_block[a] && in_block[b]; };
  std::vector<char> seen(g.order(), 0);
  std::deque<Vertex> queue{x};
  seen[x] = 1;
  int vertices = 0, degree_sum = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    ++vertices;
    for (Vertex w : g.neighbors(u)) {
      if (skip(u, w)) continue;
      ++degree_sum;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return degree_sum / 2 == vertices - 1;
}

}  // namespace

FamilySet classify_family(const Graph& g) {
  FamilySet fs;
  const int n = g.order(), m = g.size();
  if (m == n - 1) fs.add(Family::Tree);
  if (m == n) {
    fs.add(Family::Unicyclic);
    bool regular = true;
    for (Vertex v = 0; v < n; ++v) regular = regular && g.degree(v) == 2;
    if (regular) fs.add(Family::Cycle);
  }
  const auto blocks = biconnected_components(g);
  if (std::all_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.is_clique(); })) {
    fs.add(Family::BlockGraph);
    int exterior = 0;
    for (const auto& b : blocks) {
      if (b.vertices.size() < 3) continue;
      if (std::any_of(b.vertices.begin(), b.vertices.end(),
                      [&](Vertex x) { return branching_graph_is_tree(g, b, x); }))
        ++exterior;
    }
    if (exterior == 1) fs.add(Family::OneBlockGraph);
  }
  if (fs.empty()) fs.add(Family::Other);
  return fs;
}

BoundaryPartition boundary_fast(const Graph& g, Family family) {
  if (g.order() == 1) throw Error(ErrorKind::DegenerateInput, "boundary of a single vertex is undefined");
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) members.push_back(v);
  switch (family) {
    case Family::Tree:
      if (g.size() != g.order() - 1) throw Error(ErrorKind::FamilyMismatch, "graph is not a tree");
      break;
    case Family::BlockGraph: {
      const auto blocks = biconnected_components(g);
      for (const auto& b : blocks) {
        if (!b.is_clique()) throw Error(ErrorKind::FamilyMismatch, "graph is not a block graph");
        const int k = static_cast<int>(b.vertices.size());
        if (k < 3) continue;
        for (Vertex v : b.vertices)
          if (g.degree(v) == k - 1) members.push_back(v);
      }
      break;
    }
    case Family::Unicyclic:
      if (g.size() != g.order()) throw Error(ErrorKind::FamilyMismatch, "graph is not unicyclic");
      for (Vertex v : cycle_vertices(g))
        if (g.degree(v) == 2) members.push_back(v);
      break;
    default:
      throw Error(ErrorKind::InvalidArgument, "boundary_fast supports Tree, BlockGraph and Unicyclic");
  }
  return label_by_degree(g, std::move(members));
}

namespace {

void check_set(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s) check_vertex(g, v);
}

}  // namespace

bool is_resolving(const Graph& g, std::span<const Vertex> s) {
  check_set(g, s);
  const auto d = apsp(g);
  std::set<std::vector<Entry>> reps;
  for (Vertex x = 0; x < g.order(); ++x) {
    std::vector<Entry> r;
    for (Vertex w : s) r.push_back(d(x, w));
    if (!reps.insert(std::move(r)).second) return false;
  }
  return true;
}

bool is_strong_resolving(const Graph& g, std::span<const Vertex> s) {
  check_set(g, s);
  const auto d = apsp(g);
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      const bool resolved = std::any_of(s.begin(), s.end(), [&](Vertex v) {
        return d(y, v) == d(y, x) + d(x, v) || d(x, v) == d(x, y) + d(y, v);
      });
      if (!resolved) return false;
    }
  }
  return true;
}

bool is_doubly_resolving(const Graph& g, std::span<const Vertex> s) {
  check_set(g, s);
  const auto d = apsp(g);
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      if (s.empty()) return false;
      const Entry first = d(x, s[0]) - d(y, s[0]);
      const bool resolved =
          std::any_of(s.begin() + 1, s.end(), [&](Vertex v) { return d(x, v) - d(y, v) != first; });
      if (!resolved) return false;
    }
  }
  return true;
}

EccentricityProfile eccentricity_profile(const Graph& g) {
  const auto d = apsp(g);
  EccentricityProfile p;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto row = d.row(v);
    p.ecc.push_back(static_cast<int>(*std::max_element(row.begin(), row.end())));
  }
  p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
  p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  return p;
}

}  // namespace bdr
