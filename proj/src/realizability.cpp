#include "bdr/realizability.hpp"

#include <algorithm>
#include <numeric>

#include "bdr/error.hpp"

namespace bdr {

namespace {

std::string rows_text(const std::vector<int>& rows) {
  std::string s;
  for (int r : rows) s += (s.empty() ? "" : " ") + std::to_string(r + 1);
  return s;
}

RecognitionReport rejected(MatrixFamily f, std::string reason, std::vector<int> rows = {}) {
  RecognitionReport r;
  r.family = f;
  r.verdict = false;
  r.violation = Violation{std::move(reason), std::move(rows)};
  return r;
}

RecognitionReport accepted(MatrixFamily f, std::optional<Graph> witness = std::nullopt,
                           std::vector<Vertex> rows = {}) {
  RecognitionReport r;
  r.family = f;
  r.verdict = true;
  r.witness = std::move(witness);
  r.witness_rows = std::move(rows);
  return r;
}

std::vector<Vertex> identity_rows(int k) {
  std::vector<Vertex> v(k);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

RecognitionReport retag(RecognitionReport r, MatrixFamily f) {
  r.family = f;
  return r;
}

std::optional<RecognitionReport> reject_if_not_metric(MatrixFamily f, const DissimilarityMatrix& m) {
  if (auto t = find_triangle_violation(m)) return rejected(f, "not metric", {(*t)[0], (*t)[1], (*t)[2]});
  return std::nullopt;
}

std::optional<RecognitionReport> reject_if_not_additive(MatrixFamily f, const DissimilarityMatrix& m) {
  if (auto r = reject_if_not_metric(f, m)) return r;
  if (auto q = find_four_point_violation(m))
    return rejected(f, "four-point condition fails", {(*q)[0], (*q)[1], (*q)[2], (*q)[3]});
  return std::nullopt;
}

// A path realizing a 2x2 boundary matrix; rows are its two ends.
RecognitionReport path_witness(MatrixFamily f, const DissimilarityMatrix& m) {
  const int n = static_cast<int>(m(0, 1)) + 1;
  std::vector<Edge> e;
  // Ends are vertices 0 and 1, interior vertices 2..n-1.
  std::vector<Vertex> order{0};
  for (Vertex v = 2; v < n; ++v) order.push_back(v);
  order.push_back(1);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) e.emplace_back(order[i], order[i + 1]);
  return accepted(f, Graph(n, e), {0, 1});
}

}  // namespace

std::string_view to_string(MatrixFamily f) {
  switch (f) {
    case MatrixFamily::Metric: return "metric";
    case MatrixFamily::Additive: return "additive";
    case MatrixFamily::TreeDistance: return "tree-dist";
    case MatrixFamily::BlockDistance: return "block-dist";
    case MatrixFamily::UnicyclicDistance: return "unicyclic-dist";
    case MatrixFamily::CycleDistance: return "cycle";
    case MatrixFamily::TreeBoundary: return "tree-boundary";
    case MatrixFamily::BlockBoundary: return "block-boundary";
    case MatrixFamily::UnicyclicBoundary: return "unicyclic-boundary";
  }
  return "?";
}

std::optional<MatrixFamily> parse_matrix_family(std::string_view name) {
  for (auto f : {MatrixFamily::Metric, MatrixFamily::Additive, MatrixFamily::TreeDistance,
                 MatrixFamily::BlockDistance, MatrixFamily::UnicyclicDistance, MatrixFamily::CycleDistance,
                 MatrixFamily::TreeBoundary, MatrixFamily::BlockBoundary, MatrixFamily::UnicyclicBoundary})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

std::string RecognitionReport::verdict_line() const {
  std::string s = std::string(to_string(family)) + (verdict ? " true" : " false");
  if (violation) {
    s += " " + violation->reason;
    if (!violation->rows.empty()) s += " at rows " + rows_text(violation->rows);
  } else if (!note.empty()) {
    s += " " + note;
  }
  return s;
}

RecognitionReport realize_distance_matrix(const DissimilarityMatrix& m) {
  if (auto t = find_triangle_violation(m))
    throw Error(ErrorKind::NotMetric, "triangle inequality fails at rows " +
                                          rows_text({(*t)[0], (*t)[1], (*t)[2]}));
  const int n = m.dim();
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m(i, j) == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        edges.emplace_back(i, j);
      }
  for (int i = 0; i < n; ++i) {
    const auto d = bfs_distances(adj, i);
    for (int j = 0; j < n; ++j)
      if (d[j] != m(i, j))
        return rejected(MatrixFamily::Metric,
                        d[j] < 0 ? "not realizable: unit-distance graph is disconnected"
                                 : "not realizable: entry " + std::to_string(m(i, j)) +
                                       " but unit-distance graph gives " + std::to_string(d[j]),
                        {i, j});
  }
  return accepted(MatrixFamily::Metric, Graph(n, std::move(edges)), identity_rows(n));
}

RecognitionReport check_metric(const DissimilarityMatrix& m) {
  if (auto r = reject_if_not_metric(MatrixFamily::Metric, m)) return *r;
  return accepted(MatrixFamily::Metric);
}

RecognitionReport check_additive(const DissimilarityMatrix& m) {
  if (m.dim() <= 2) return accepted(MatrixFamily::Additive);
  if (auto r = reject_if_not_additive(MatrixFamily::Additive, m)) return *r;
  return accepted(MatrixFamily::Additive);
}

RecognitionReport is_tree_distance_matrix(const DissimilarityMatrix& m) {
  constexpr auto F = MatrixFamily::TreeDistance;
  if (auto r = reject_if_not_metric(F, m)) return *r;
  auto real = realize_distance_matrix(m);
  if (!real.verdict) return retag(std::move(real), F);
  if (auto r = reject_if_not_additive(F, m)) return *r;
  const int n = m.dim();
  if (n >= 2) {
    const BigInt det = det_exact(m), expected = tree_det_formula(n);
    if (det != expected)
      return rejected(F, "determinant " + det.str() + " differs from tree value " + expected.str());
  }
  return retag(std::move(real), F);
}

RecognitionReport is_block_distance_matrix(const DissimilarityMatrix& m) {
  constexpr auto F = MatrixFamily::BlockDistance;
  if (auto r = reject_if_not_metric(F, m)) return *r;
  auto real = realize_distance_matrix(m);
  if (!real.verdict) return retag(std::move(real), F);
  if (auto r = reject_if_not_additive(F, m)) return *r;
  return retag(std::move(real), F);
}

RecognitionReport is_cycle_distance_matrix(const DissimilarityMatrix& m) {
  constexpr auto F = MatrixFamily::CycleDistance;
  if (m.dim() < 3) return rejected(F, "fewer than three rows");
  if (!is_cycle_matrix(m)) return rejected(F, "unit-distance pairs do not form a cycle reproducing the matrix");
  return retag(realize_distance_matrix(m), F);
}

RecognitionReport is_unicyclic_distance_matrix(const DissimilarityMatrix& m) {
  constexpr auto F = MatrixFamily::UnicyclicDistance;
  if (auto r = reject_if_not_metric(F, m)) return *r;
  std::vector<int> rows(m.dim());
  std::iota(rows.begin(), rows.end(), 0);
  while (true) {
    int leaf = -1;
    for (int r : rows) {
      int ones = 0;
      for (int w : rows) ones += m(r, w) == 1;
      if (ones == 1) {
        leaf = r;
        break;
      }
    }
    if (leaf < 0) break;
    rows.erase(std::find(rows.begin(), rows.end(), leaf));
  }
  if (rows.size() < 3 || !is_cycle_matrix(m.submatrix(rows)))
    return rejected(F, "leaf deletion stops at " + std::to_string(rows.size()) + " rows that are not a cycle", rows);
  auto real = realize_distance_matrix(m);
  return retag(std::move(real), F);
}

std::optional<std::array<int, 3>> find_strict_triangle_violation(const DissimilarityMatrix& m) {
  const int k = m.dim();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        if (i != j && j != l && i != l && m(i, j) >= m(i, l) + m(j, l)) return std::array{i, j, l};
  return std::nullopt;
}

std::optional<std::array<int, 3>> find_odd_triple(const DissimilarityMatrix& m) {
  const int k = m.dim();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = j + 1; l < k; ++l)
        if ((m(i, j) + m(i, l) + m(j, l)) % 2 != 0) return std::array{i, j, l};
  return std::nullopt;
}

RecognitionReport is_tree_boundary_matrix(const DissimilarityMatrix& m) {
  constexpr auto F = MatrixFamily::TreeBoundary;
  if (m.dim() < 2) return rejected(F, "fewer than two rows");
  if (m.dim() == 2) return path_witness(F, m);
  if (auto r = reject_if_not_additive(F, m)) return *r;
  if (auto t = find_strict_triangle_violation(m))
    return rejected(F, "strict triangle inequality fails", {(*t)[0], (*t)[1], (*t)[2]});
  if (auto t = find_odd_triple(m)) return rejected(F, "odd triple sum", {(*t)[0], (*t)[1], (*t)[2]});
  try {
    auto rec = reconstruct_tree(m);
    return accepted(F, std::move(rec.graph), std::move(rec.index_map));
  } catch (const Error& e) {
    return rejected(F, std::string("tree builder failed: ") + e.what());
  }
}

RecognitionReport is_block_boundary_matrix(const DissimilarityMatrix& m) {
  constexpr auto F = MatrixFamily::BlockBoundary;
  if (m.dim() < 2) return rejected(F, "fewer than two rows");
  if (m.dim() == 2) return path_witness(F, m);
  if (auto r = reject_if_not_additive(F, m)) return *r;
  if (auto t = find_strict_triangle_violation(m))
    return rejected(F, "strict triangle inequality fails", {(*t)[0], (*t)[1], (*t)[2]});
  if (m.dim() == 3) {
    auto rec = reconstruct_from_3x3(m);
    return accepted(F, std::move(rec.graph), std::move(rec.index_map));
  }
  // No general builder exists for dim >= 4; try the tree and 1-block ones.
  try {
    auto rec = find_odd_triple(m) ? reconstruct_1block(m) : reconstruct_tree(m);
    return accepted(F, std::move(rec.graph), std::move(rec.index_map));
  } catch (const Error&) {
    auto r = accepted(F);
    r.note = "condition only, no witness builder";
    return r;
  }
}

RecognitionReport is_unicyclic_boundary_matrix(const DissimilarityMatrix& m) {
  constexpr auto F = MatrixFamily::UnicyclicBoundary;
  if (m.dim() < 3) return rejected(F, "fewer than three rows");
  if (auto r = reject_if_not_metric(F, m)) return *r;
  if (!recognize_unicyclic_boundary(m)) return rejected(F, "pruning does not reach a cycle");
  try {
    auto rec = reconstruct_unicyclic(m);
    return accepted(F, std::move(rec.graph), std::move(rec.index_map));
  } catch (const Error& e) {
    return rejected(F, std::string("rebuild failed: ") + e.what());
  }
}

RecognitionReport decide(MatrixFamily family, const DissimilarityMatrix& m) {
  switch (family) {
    case MatrixFamily::Metric: return check_metric(m);
    case MatrixFamily::Additive: return check_additive(m);
    case MatrixFamily::TreeDistance: return is_tree_distance_matrix(m);
    case MatrixFamily::BlockDistance: return is_block_distance_matrix(m);
    case MatrixFamily::UnicyclicDistance: return is_unicyclic_distance_matrix(m);
    case MatrixFamily::CycleDistance: return is_cycle_distance_matrix(m);
    case MatrixFamily::TreeBoundary: return is_tree_boundary_matrix(m);
    case MatrixFamily::BlockBoundary: return is_block_boundary_matrix(m);
    case MatrixFamily::UnicyclicBoundary: return is_unicyclic_boundary_matrix(m);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

ReconstructionResult reconstruct_from_3x3(const DissimilarityMatrix& m) {
  if (m.dim() != 3) throw Error(ErrorKind::InvalidArgument, "expected a 3x3 matrix");
  if (auto t = find_strict_triangle_violation(m))
    throw Error(ErrorKind::NotRealizable, "strict triangle inequality fails at rows " +
                                              rows_text({(*t)[0], (*t)[1], (*t)[2]}));
  const Entry a = m(0, 1), b = m(0, 2), c = m(1, 2);
  const bool even = (a + b + c) % 2 == 0;
  const Entry slack = even ? 0 : 1;
  // Leg lengths hanging off the hub for rows 0, 1, 2.
  const std::array<Entry, 3> legs{(a + b - c - slack) / 2, (a + c - b - slack) / 2, (b + c - a - slack) / 2};
  std::vector<Edge> edges;
  Vertex next = 3;
  // Path of `len` edges from `from` ending at row vertex `row`.
  auto leg = [&](Vertex from, Vertex row, Entry len) {
    Vertex prev = from;
    for (Entry t = 1; t < len; ++t) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, row);
  };
  if (even) {
    const Vertex hub = next++;
    for (int i = 0; i < 3; ++i) leg(hub, i, legs[i]);
  } else {
    std::array<Vertex, 3> corner{};
    for (int i = 0; i < 3; ++i) {
      if (legs[i] == 0) {
        corner[i] = i;
      } else {
        corner[i] = next++;
        leg(corner[i], i, legs[i]);
      }
    }
    edges.emplace_back(corner[0], corner[1]);
    edges.emplace_back(corner[0], corner[2]);
    edges.emplace_back(corner[1], corner[2]);
  }
  ReconstructionResult r{Graph(next, std::move(edges)), {0, 1, 2}};
  if (!verifies_boundary(r, m)) throw Error(ErrorKind::NotRealizable, "3x3 builder does not reproduce the matrix");
  return r;
}

}  // namespace bdr
