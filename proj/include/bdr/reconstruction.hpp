#pragma once

#include <string>
#include <vector>

#include "bdr/graph.hpp"
#include "bdr/matrix.hpp"

namespace bdr {

/// A rebuilt graph plus the vertex assigned to every input row. For every
/// reconstructor here, row i maps to vertex i and the mapped vertices are
/// exactly the boundary of `graph`.
struct ReconstructionResult {
  Graph graph;
  std::vector<Vertex> index_map;
};

/// One leaf-pruning step of the 1-block / unicyclic reconstructions. Rows are
/// identified by the vertex id they end up as in the rebuilt graph.
struct PeelStep {
  int depth = 0;
  std::vector<Vertex> removed;    // the chosen leaf first, then its siblings
  Vertex parent = -1;             // the row that replaces them
  bool merged = false;            // parent coincides with a surviving row
  std::vector<Vertex> survivors;  // surviving rows, in matrix order
  std::vector<Entry> leaf_row;    // chosen leaf's entries to the survivors
  std::vector<Entry> parent_row;  // parent's entries to the survivors
};

/// One attachment of Algorithm-1 style tree building.
struct AttachStep {
  int row = 0;        // the leaf row being attached
  Vertex anchor = 0;  // vertex the new leg hangs from
  Entry length = 0;   // length of the new leg
};

std::string format_step(const PeelStep& s);
std::string format_step(const AttachStep& s);

/// Leaf rows have d(w1,u) + d(u,w2) - d(w1,w2) >= 2 for every pair of other
/// rows; any pair with gap <= 1 marks u as a non-leaf boundary row. `family`
/// must be Tree, BlockGraph, OneBlockGraph or Unicyclic. Throws
/// Error(TooSmall) when dim < 3.
BoundaryPartition discriminate_leaves(const DissimilarityMatrix& m, Family family);

/// Leaf rows u != v at distance 2 from v that agree with v on every other row.
/// `leaves` must be ascending.
std::vector<int> detect_siblings(const DissimilarityMatrix& m, const std::vector<int>& leaves, int v);

/// Rebuilds a tree from the distance matrix of its leaves by attaching one
/// leg per leaf. Throws Error(InvalidLeafMatrix) when some leaf has no anchor,
/// more than one anchor, or the result does not reproduce m.
ReconstructionResult reconstruct_tree(const DissimilarityMatrix& m, std::vector<AttachStep>* trace = nullptr);

/// Rebuilds a 1-block graph from its boundary distance matrix by pruning
/// maximum-eccentricity leaves down to a complete graph. Throws
/// Error(NotOneBlock) if pruning gets stuck or the result does not verify.
ReconstructionResult reconstruct_1block(const DissimilarityMatrix& m, std::vector<PeelStep>* trace = nullptr);

/// Pruning recognizer for unicyclic boundary matrices: true iff the pruning
/// fixed point is the distance matrix of a cycle.
bool recognize_unicyclic_boundary(const DissimilarityMatrix& m);

/// Rebuilds a unicyclic graph from its boundary distance matrix. Throws
/// Error(NotUnicyclicBoundary) if pruning fails or the result does not verify.
ReconstructionResult reconstruct_unicyclic(const DissimilarityMatrix& m, std::vector<PeelStep>* trace = nullptr);

/// True iff the distance-1 pairs form one Hamiltonian cycle reproducing m.
bool is_cycle_matrix(const DissimilarityMatrix& m);

/// True iff the mapped vertices are exactly the boundary of r.graph and their
/// distances reproduce m.
bool verifies_boundary(const ReconstructionResult& r, const DissimilarityMatrix& m);

}  // namespace bdr
