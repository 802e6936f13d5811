#include "bdr/reconstruction.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "bdr/error.hpp"

namespace bdr {

namespace {

std::string join_ids(const std::vector<Vertex>& ids) {
  std::string s;
  for (Vertex v : ids) s += (s.empty() ? "" : ",") + std::to_string(v + 1);
  return s;
}

std::string join_entries(const std::vector<Entry>& xs) {
  std::string s;
  for (Entry x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

bool is_complete_matrix(const DissimilarityMatrix& m) {
  return std::all_of(m.entries().begin(), m.entries().end(), [](Entry e) { return e <= 1; });
}

// Edges between distance-1 rows, translated to vertex ids.
std::vector<Edge> unit_edges(const DissimilarityMatrix& m, const std::vector<Vertex>& ids) {
  std::vector<Edge> out;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i + 1; j < m.dim(); ++j)
      if (m(i, j) == 1) out.emplace_back(ids[i], ids[j]);
  return out;
}

enum class Base { Complete, Cycle };

struct PeelOutcome {
  bool ok = false;
  std::string reason;
  std::vector<PeelStep> steps;
  std::vector<Edge> edges;
  int vertex_count = 0;
};

bool is_base(const DissimilarityMatrix& cur, Base base) {
  if (cur.dim() < 3) return false;
  return base == Base::Complete ? is_complete_matrix(cur) : is_cycle_matrix(cur);
}

// Prunes maximum-eccentricity leaves (and their siblings), replacing them by
// their parent, until the current matrix is a complete-graph or cycle matrix.
// With `base_first` the base test precedes leaf discrimination (reconstruction);
// otherwise the base is only tested once no leaf remains (recognition).
PeelOutcome peel(const DissimilarityMatrix& m, Base base, bool base_first) {
  PeelOutcome out;
  std::vector<Vertex> ids(m.dim());
  std::iota(ids.begin(), ids.end(), 0);
  Vertex next_id = m.dim();
  DissimilarityMatrix cur = m;
  // Each step lowers the entry sum or the dimension, so this bound is never hit
  // by a terminating run; it only guards against malformed input.
  const long long guard = std::accumulate(m.entries().begin(), m.entries().end(), 0LL) + m.dim() + 1;
  for (int depth = 0; depth <= guard; ++depth) {
    if (base_first && is_base(cur, base)) {
      out.ok = true;
      break;
    }
    if (cur.dim() < 3) {
      out.reason = "pruning reached " + std::to_string(cur.dim()) + " row(s) without a base graph";
      return out;
    }
    const auto part = discriminate_leaves(cur, base == Base::Complete ? Family::OneBlockGraph : Family::Unicyclic);
    const auto leaves = part.leaves();
    if (leaves.empty()) {
      if (is_base(cur, base)) {
        out.ok = true;
        break;
      }
      out.reason = std::string("no leaf rows left and the remaining matrix is not ") +
                   (base == Base::Complete ? "a complete graph" : "a cycle");
      return out;
    }
    // Greatest eccentricity; ties go to the lowest row.
    auto ecc = [&](int u) { return *std::max_element(cur.row(u).begin(), cur.row(u).end()); };
    int v = leaves.front();
    for (int u : leaves)
      if (ecc(u) > ecc(v)) v = u;
    const auto siblings = detect_siblings(cur, leaves, v);

    std::vector<char> gone(cur.dim(), 0);
    gone[v] = 1;
    for (int s : siblings) gone[s] = 1;
    PeelStep step;
    step.depth = depth;
    step.removed.push_back(ids[v]);
    for (int s : siblings) step.removed.push_back(ids[s]);
    std::vector<int> keep;
    int merge_with = -1;
    for (int w = 0; w < cur.dim(); ++w) {
      if (gone[w]) continue;
      keep.push_back(w);
      step.survivors.push_back(ids[w]);
      step.leaf_row.push_back(cur(v, w));
      step.parent_row.push_back(cur(v, w) - 1);
      if (cur(v, w) == 1) {
        if (merge_with >= 0) {
          out.reason = "leaf row " + std::to_string(ids[v] + 1) + " is at distance 1 from two rows";
          return out;
        }
        merge_with = w;
      }
    }
    step.merged = merge_with >= 0;
    step.parent = step.merged ? ids[merge_with] : next_id++;
    for (Vertex r : step.removed) out.edges.emplace_back(r, step.parent);

    // Next matrix: survivors, plus the parent row unless it merged.
    const int k = static_cast<int>(keep.size()) + (step.merged ? 0 : 1);
    std::vector<Entry> flat(static_cast<std::size_t>(k) * k, 0);
    std::vector<Vertex> next_ids;
    for (int a = 0; a < static_cast<int>(keep.size()); ++a) {
      next_ids.push_back(ids[keep[a]]);
      for (int b = 0; b < static_cast<int>(keep.size()); ++b) flat[a * k + b] = cur(keep[a], keep[b]);
      if (!step.merged) flat[a * k + (k - 1)] = flat[(k - 1) * k + a] = step.parent_row[a];
    }
    if (!step.merged) next_ids.push_back(step.parent);
    out.steps.push_back(std::move(step));
    cur = DissimilarityMatrix(k, std::move(flat));
    ids = std::move(next_ids);
  }
  if (!out.ok) {
    out.reason = "pruning did not terminate";
    return out;
  }
  auto base_edges = unit_edges(cur, ids);
  out.edges.insert(out.edges.end(), base_edges.begin(), base_edges.end());
  out.vertex_count = next_id;
  return out;
}

ReconstructionResult build_and_verify(const DissimilarityMatrix& m, PeelOutcome&& outcome, ErrorKind kind,
                                      Family family, std::vector<PeelStep>* trace) {
  if (!outcome.ok) throw Error(kind, outcome.reason);
  std::optional<Graph> g;
  try {
    g.emplace(outcome.vertex_count, outcome.edges);
  } catch (const Error& e) {
    throw Error(kind, std::string("rebuilt edges do not form a simple connected graph: ") + e.what());
  }
  std::vector<Vertex> index_map(m.dim());
  std::iota(index_map.begin(), index_map.end(), 0);
  ReconstructionResult r{std::move(*g), std::move(index_map)};
  if (!classify_family(r.graph).has(family))
    throw Error(kind, "rebuilt graph is not a " + std::string(to_string(family)));
  if (!verifies_boundary(r, m)) throw Error(kind, "rebuilt graph does not reproduce the boundary matrix");
  if (trace) *trace = std::move(outcome.steps);
  return r;
}

}  // namespace

std::string format_step(const PeelStep& s) {
  std::ostringstream os;
  os << "depth=" << s.depth << " removed=" << join_ids(s.removed) << " parent=" << s.parent + 1
     << (s.merged ? " merged" : " new") << " survivors=" << join_ids(s.survivors)
     << " parent_row=" << join_entries(s.parent_row);
  return os.str();
}

std::string format_step(const AttachStep& s) {
  std::ostringstream os;
  os << "row=" << s.row + 1 << " anchor=" << s.anchor + 1 << " length=" << s.length;
  return os.str();
}

BoundaryPartition discriminate_leaves(const DissimilarityMatrix& m, Family family) {
  if (family != Family::Tree && family != Family::BlockGraph && family != Family::OneBlockGraph &&
      family != Family::Unicyclic)
    throw Error(ErrorKind::InvalidArgument, "leaf discrimination supports trees, block and unicyclic graphs");
  const int k = m.dim();
  if (k < 3) throw Error(ErrorKind::TooSmall, "leaf discrimination needs at least 3 rows");
  BoundaryPartition p;
  for (int u = 0; u < k; ++u) {
    bool leaf = true;
    for (int w1 = 0; w1 < k && leaf; ++w1) {
      if (w1 == u) continue;
      for (int w2 = w1 + 1; w2 < k; ++w2) {
        if (w2 == u) continue;
        if (m(w1, u) + m(u, w2) - m(w1, w2) <= 1) {
          leaf = false;
          break;
        }
      }
    }
    p.members.push_back(u);
    p.labels.push_back(leaf ? BoundaryLabel::Leaf : BoundaryLabel::NonLeafBoundary);
  }
  return p;
}

std::vector<int> detect_siblings(const DissimilarityMatrix& m, const std::vector<int>& leaves, int v) {
  std::vector<int> out;
  for (int u : leaves) {
    if (u == v || m(u, v) != 2) continue;
    bool twin = true;
    for (int w = 0; w < m.dim() && twin; ++w)
      if (w != u && w != v) twin = m(u, w) == m(v, w);
    if (twin) out.push_back(u);
  }
  return out;
}

ReconstructionResult reconstruct_tree(const DissimilarityMatrix& m, std::vector<AttachStep>* trace) {
  const int k = m.dim();
  if (k < 2) throw Error(ErrorKind::InvalidLeafMatrix, "a tree has at least two leaves");
  // Leaves are vertices 0..k-1; interior vertices are appended as created.
  std::vector<std::vector<Vertex>> adj(k);
  // from_leaf[j][v]: distance from placed leaf j to vertex v (-1 if not yet connected).
  std::vector<std::vector<int>> from_leaf;
  std::vector<AttachStep> steps;

  auto add_leg = [&](Vertex from, Vertex leaf, Entry length) {
    Vertex prev = from;
    for (Entry t = 1; t < length; ++t) {
      const auto v = static_cast<Vertex>(adj.size());
      adj.emplace_back();
      adj[prev].push_back(v);
      adj[v].push_back(prev);
      prev = v;
    }
    adj[prev].push_back(leaf);
    adj[leaf].push_back(prev);
  };
  auto relabel = [&](int placed) {
    from_leaf.clear();
    for (int j = 0; j < placed; ++j) from_leaf.push_back(bfs_distances(adj, j));
  };

  add_leg(0, 1, m(0, 1));
  relabel(2);
  for (int row = 2; row < k; ++row) {
    Vertex anchor = -1;
    Entry length = 0;
    for (Vertex u = 0; u < static_cast<Vertex>(adj.size()); ++u) {
      if (from_leaf[0][u] < 0) continue;  // leaf not yet placed
      const Entry a = m(row, 0) - from_leaf[0][u];
      if (a < 1) continue;
      bool match = true;
      for (int j = 1; j < row && match; ++j) match = m(row, j) - from_leaf[j][u] == a;
      if (!match) continue;
      if (anchor >= 0)
        throw Error(ErrorKind::InvalidLeafMatrix, "row " + std::to_string(row + 1) + " has more than one anchor");
      anchor = u;
      length = a;
    }
    if (anchor < 0) throw Error(ErrorKind::InvalidLeafMatrix, "row " + std::to_string(row + 1) + " has no anchor");
    if (anchor < k)
      throw Error(ErrorKind::InvalidLeafMatrix,
                  "row " + std::to_string(row + 1) + " would hang from leaf row " + std::to_string(anchor + 1));
    add_leg(anchor, row, length);
    relabel(row + 1);
    steps.push_back({row, anchor, length});
  }

  std::vector<Edge> edges;
  for (Vertex u = 0; u < static_cast<Vertex>(adj.size()); ++u)
    for (Vertex w : adj[u])
      if (u < w) edges.emplace_back(u, w);
  std::optional<Graph> g;
  try {
    g.emplace(static_cast<int>(adj.size()), std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidLeafMatrix, e.what());
  }
  std::vector<Vertex> index_map(k);
  std::iota(index_map.begin(), index_map.end(), 0);
  ReconstructionResult r{std::move(*g), std::move(index_map)};
  if (!verifies_boundary(r, m))
    throw Error(ErrorKind::InvalidLeafMatrix, "rebuilt tree does not reproduce the leaf matrix");
  if (trace) *trace = std::move(steps);
  return r;
}

ReconstructionResult reconstruct_1block(const DissimilarityMatrix& m, std::vector<PeelStep>* trace) {
  return build_and_verify(m, peel(m, Base::Complete, true), ErrorKind::NotOneBlock, Family::OneBlockGraph, trace);
}

bool recognize_unicyclic_boundary(const DissimilarityMatrix& m) {
  if (m.dim() < 3) return false;
  return peel(m, Base::Cycle, false).ok;
}

ReconstructionResult reconstruct_unicyclic(const DissimilarityMatrix& m, std::vector<PeelStep>* trace) {
  return build_and_verify(m, peel(m, Base::Cycle, true), ErrorKind::NotUnicyclicBoundary, Family::Unicyclic,
                          trace);
}

bool is_cycle_matrix(const DissimilarityMatrix& m) {
  const int k = m.dim();
  if (k < 3) return false;
  std::vector<std::vector<Vertex>> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (m(i, j) == 1) adj[i].push_back(j);
  for (const auto& nb : adj)
    if (nb.size() != 2) return false;
  // 2-regular and connected means a single k-cycle.
  for (int s = 0; s < k; ++s) {
    const auto d = bfs_distances(adj, s);
    for (int t = 0; t < k; ++t)
      if (d[t] != m(s, t)) return false;
  }
  return true;
}

bool verifies_boundary(const ReconstructionResult& r, const DissimilarityMatrix& m) {
  if (r.graph.order() < 2 || static_cast<int>(r.index_map.size()) != m.dim()) return false;
  const auto d = apsp(r.graph);
  auto mapped = r.index_map;
  std::sort(mapped.begin(), mapped.end());
  if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end()) return false;
  if (boundary(r.graph, d).members != mapped) return false;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (d(r.index_map[i], r.index_map[j]) != m(i, j)) return false;
  return true;
}

}  // namespace bdr
