#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bdr/matrix.hpp"

namespace bdr {

// Vertices are 0-based internally; every text format and error message uses
// 1-based ids.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple, undirected, connected graph. Construction rejects loops, duplicate
/// edges, out-of-range endpoints and disconnected edge sets.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);
  /// Same as the constructor, with 1-based endpoints.
  static Graph from_one_based(int n, const std::vector<Edge>& edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  /// Sorted, each pair with first < second.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::vector<Vertex>>& adjacency() const noexcept { return adj_; }

  /// Labeled equality (same order, same edge set).
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// BFS distances from `source` over raw adjacency lists; -1 marks unreachable.
std::vector<int> bfs_distances(const std::vector<std::vector<Vertex>>& adj, Vertex source);
bool is_connected(int n, std::span<const Edge> edges);

DistanceMatrix apsp(const Graph& g);

/// True iff no neighbor of v is farther from u than v.
bool is_maximally_distant(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v);

enum class BoundaryLabel { Leaf, NonLeafBoundary };

struct BoundaryPartition {
  std::vector<int> members;  // ascending vertex ids (or matrix row indices)
  std::vector<BoundaryLabel> labels;

  int size() const noexcept { return static_cast<int>(members.size()); }
  bool contains(int v) const;
  std::vector<int> leaves() const;
  friend bool operator==(const BoundaryPartition&, const BoundaryPartition&) = default;
};

/// Vertices belonging to some mutually-maximally-distant pair. Labels: Leaf
/// iff degree 1. Throws Error(DegenerateInput) for n = 1.
BoundaryPartition boundary(const Graph& g);
BoundaryPartition boundary(const Graph& g, const DistanceMatrix& d);

/// Distance matrix restricted to the boundary, rows in boundary order.
DistanceMatrix boundary_matrix(const Graph& g);

enum class Family { Tree, BlockGraph, OneBlockGraph, Unicyclic, Cycle, Other };

std::string_view to_string(Family f);

class FamilySet {
 public:
  FamilySet() = default;
  bool has(Family f) const noexcept { return (bits_ >> static_cast<int>(f)) & 1u; }
  void add(Family f) noexcept { bits_ |= 1u << static_cast<int>(f); }
  bool empty() const noexcept { return bits_ == 0; }
  std::vector<Family> members() const;
  std::string to_string() const;
  friend bool operator==(const FamilySet&, const FamilySet&) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// All applicable family tags; {Other} when none applies.
FamilySet classify_family(const Graph& g);

struct Block {
  std::vector<Vertex> vertices;  // ascending
  int edge_count = 0;
  bool is_clique() const noexcept {
    const auto h = static_cast<int>(vertices.size());
    return edge_count == h * (h - 1) / 2;
  }
};

/// Biconnected components (blocks). Iterative Hopcroft-Tarjan.
std::vector<Block> biconnected_components(const Graph& g);
bool is_block_graph(const Graph& g);
/// Vertices of the unique cycle of a unicyclic graph (its 2-core), ascending.
std::vector<Vertex> cycle_vertices(const Graph& g);

/// Boundary from family structure alone: leaves for trees; leaves plus the
/// degree-(k-1) vertices of k-blocks (k >= 3) for block graphs; leaves plus the
/// degree-2 cycle vertices for unicyclic graphs. `family` must be Tree,
/// BlockGraph or Unicyclic; Error(FamilyMismatch) if g is not in it.
BoundaryPartition boundary_fast(const Graph& g, Family family);

bool is_resolving(const Graph& g, std::span<const Vertex> s);
bool is_strong_resolving(const Graph& g, std::span<const Vertex> s);
bool is_doubly_resolving(const Graph& g, std::span<const Vertex> s);

struct EccentricityProfile {
  std::vector<int> ecc;
  int radius = 0;
  int diameter = 0;
};

EccentricityProfile eccentricity_profile(const Graph& g);

// ---- text formats ----
// Graph text: "n m" then m lines "u v", 1-based.

Graph read_graph(std::istream& in);
Graph parse_graph(const std::string& text);
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);
/// DOT with vertex ids as labels; `highlighted` vertices get style=filled.
void write_dot(std::ostream& out, const Graph& g, std::span<const Vertex> highlighted = {});
/// "1-2,2-3,..." (1-based), used by report files.
std::string edge_list_string(const Graph& g);
Graph parse_edge_list_string(int n, const std::string& text);

}  // namespace bdr
