#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bdr/graph.hpp"
#include "bdr/matrix.hpp"
#include "bdr/reconstruction.hpp"

namespace bdr {

/// Matrix families the deciders answer for. Names match the CLI flags.
enum class MatrixFamily {
  Metric,
  Additive,
  TreeDistance,
  BlockDistance,
  UnicyclicDistance,
  CycleDistance,
  TreeBoundary,
  BlockBoundary,
  UnicyclicBoundary,
};

std::string_view to_string(MatrixFamily f);
std::optional<MatrixFamily> parse_matrix_family(std::string_view name);

/// Why a decider said no: a short reason plus the offending rows (0-based).
struct Violation {
  std::string reason;
  std::vector<int> rows;
};

/// Outcome of a decider. A positive verdict carries a witness graph whenever a
/// builder exists; `witness_rows[i]` is the witness vertex for input row i. A
/// positive witness always reproduces the input exactly.
struct RecognitionReport {
  MatrixFamily family{};
  bool verdict = false;
  std::optional<Graph> witness;
  std::vector<Vertex> witness_rows;
  std::optional<Violation> violation;
  std::string note;  // extra detail on a positive verdict, e.g. "condition only"

  /// "FAMILY true|false [reason]" on one line.
  std::string verdict_line() const;
};

/// Builds the graph on the distance-1 pairs and checks that its distances
/// reproduce m. Throws Error(NotMetric) on non-metric input.
RecognitionReport realize_distance_matrix(const DissimilarityMatrix& m);

RecognitionReport check_metric(const DissimilarityMatrix& m);
RecognitionReport check_additive(const DissimilarityMatrix& m);

/// Distance matrix of a tree: realizable, additive and with determinant
/// (-1)^(n-1) (n-1) 2^(n-2).
RecognitionReport is_tree_distance_matrix(const DissimilarityMatrix& m);
/// Distance matrix of a block graph: realizable and additive.
RecognitionReport is_block_distance_matrix(const DissimilarityMatrix& m);
/// Distance matrix of a unicyclic graph, by repeatedly deleting rows with a
/// single 1 (leaves, lowest index first) down to a cycle matrix.
RecognitionReport is_unicyclic_distance_matrix(const DissimilarityMatrix& m);
RecognitionReport is_cycle_distance_matrix(const DissimilarityMatrix& m);

/// Leaf matrix of a tree: additive, strict triangle inequality and even
/// perimeter on every triple. dim 2 is always a path.
RecognitionReport is_tree_boundary_matrix(const DissimilarityMatrix& m);
/// Boundary matrix of a block graph: additive and strict triangle inequality.
RecognitionReport is_block_boundary_matrix(const DissimilarityMatrix& m);
/// Unicyclic boundary matrix: pruning recognizer plus a verified rebuild.
RecognitionReport is_unicyclic_boundary_matrix(const DissimilarityMatrix& m);

/// Dispatch by family.
RecognitionReport decide(MatrixFamily family, const DissimilarityMatrix& m);

/// Explicit realization of a 3x3 block-graph boundary matrix: a spider when the
/// perimeter is even, a triangle with three pendant paths when it is odd.
/// Throws Error(NotRealizable) if some strict triangle inequality fails.
ReconstructionResult reconstruct_from_3x3(const DissimilarityMatrix& m);

/// First triple (i,j,k) of distinct rows with d(i,j) >= d(i,k) + d(j,k).
std::optional<std::array<int, 3>> find_strict_triangle_violation(const DissimilarityMatrix& m);
/// First triple of rows whose pairwise distances sum to an odd number.
std::optional<std::array<int, 3>> find_odd_triple(const DissimilarityMatrix& m);

}  // namespace bdr
