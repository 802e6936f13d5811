#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bdr/graph.hpp"
#include "bdr/isomorphism.hpp"

namespace bdr {

/// Which graphs make up the enumerated universe.
enum class Universe { All, Tree, Block, OneBlock, Unicyclic };

std::string_view to_string(Universe u);
/// "all", "tree", "block", "block1", "unicyclic".
std::optional<Universe> parse_universe(std::string_view name);
/// Largest n_max accepted for a universe.
int universe_max_order(Universe u);

/// One universe graph with its boundary key and, for the order-fixed class,
/// the canonical forms of all its principal submatrices of order >= 2.
struct GraphProfile {
  Graph graph;
  int kappa = 0;
  CanonicalMatrix boundary;
  std::vector<CanonicalMatrix> submatrices;  // sorted, unique
};

GraphProfile profile_graph(const Graph& g);

/// Graphs sharing a key. `order` is 0 for the order-free class.
struct Bucket {
  int order = 0;
  CanonicalMatrix key;
  std::vector<Graph> graphs;
};

struct ConjectureOptions {
  Universe universe = Universe::All;
  int shards = 1;  // worker threads
};

/// Collision buckets with at least two pairwise non-isomorphic graphs.
///  hkn: same order and same boundary matrix (a conjecture counterexample).
///  hk:  same boundary matrix, any order.
///  hn:  same order; every listed graph has the key as some principal
///       submatrix, the first listed graph has it as its boundary matrix.
struct ConjectureReport {
  int n_max = 0;
  Universe universe = Universe::All;
  long graphs = 0;
  std::vector<Bucket> hkn, hk, hn;

  bool violates_hkn() const { return !hkn.empty(); }
  bool violates_hk() const { return !hk.empty(); }
  bool violates_hn() const { return !hn.empty(); }
};

/// Universe graphs of order 2..n_max in enumeration order.
std::vector<Graph> conjecture_universe(int n_max, Universe u);

ConjectureReport test_conjecture(int n_max, const ConjectureOptions& options = {});

/// Computes profiles of universe graphs with index % shards == shard_id.
std::vector<std::pair<long, GraphProfile>> profile_shard(const std::vector<Graph>& universe, int shards, int shard_id);

/// Buckets profiles of a whole universe.
ConjectureReport build_report(int n_max, Universe u, const std::vector<GraphProfile>& profiles);

struct HMembership {
  bool in_hk = false;
  bool in_hn = false;
  bool in_hkn = false;
};

/// Membership of g relative to all connected graphs of order <= n_max.
/// Throws Error(BoundExceeded) when g.order() > n_max or n_max is too large.
HMembership h_class_membership(const Graph& g, int n_max);

void write_report(std::ostream& out, const ConjectureReport& r);

/// Fragment files carry the profiles of one shard so separate processes can
/// split a run; merge_fragments rebuilds the full report.
void write_fragment(std::ostream& out, int n_max, Universe u, int shards, int shard_id,
                    const std::vector<std::pair<long, GraphProfile>>& profiles);
ConjectureReport merge_fragments(const std::vector<std::string>& paths);

}  // namespace bdr
