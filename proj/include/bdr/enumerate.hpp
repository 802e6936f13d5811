#pragma once

#include <vector>

#include "bdr/graph.hpp"

namespace bdr {

// Each generator returns one representative per isomorphism class, built by
// vertex augmentation with isomorphism rejection. Orders outside the listed
// range throw Error(InvalidArgument).

/// Connected graphs, 1 <= n <= 8.
std::vector<Graph> enumerate_connected_graphs(int n);
/// result[n] holds the connected graphs of order n, for 1 <= n <= n_max.
std::vector<std::vector<Graph>> connected_graphs_up_to(int n_max);

/// Trees, 1 <= n <= 12.
std::vector<Graph> enumerate_trees(int n);
/// Unicyclic graphs, 3 <= n <= 10.
std::vector<Graph> enumerate_unicyclic(int n);
/// Block graphs, 1 <= n <= 9.
std::vector<Graph> enumerate_block_graphs(int n);
/// Block graphs with exactly one block K_h, h >= 3, and trees hanging off it;
/// 3 <= n <= 10.
std::vector<Graph> enumerate_one_block(int n);

}  // namespace bdr
