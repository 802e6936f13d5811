#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bdr {

using Entry = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

/// Square symmetric integer matrix with zero diagonal and strictly positive
/// off-diagonal entries. Every constructor validates; a constructed value is
/// always well formed.
class DissimilarityMatrix {
 public:
  /// Row-major entries of a `dim`×`dim` matrix. Throws Error(InvalidMatrix)
  /// naming the first offending cell (1-based) on violation.
  DissimilarityMatrix(int dim, std::vector<Entry> entries);

  static DissimilarityMatrix from_rows(const std::vector<std::vector<Entry>>& rows);

  int dim() const noexcept { return dim_; }
  Entry operator()(int i, int j) const noexcept { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  std::span<const Entry> row(int i) const noexcept {
    return {entries_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
  }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  Entry max_entry() const noexcept;

  /// Principal submatrix on `indices`, in the given order.
  DissimilarityMatrix submatrix(std::span<const int> indices) const;
  /// result(i,j) = (*this)(perm[i], perm[j]).
  DissimilarityMatrix permuted(std::span<const int> perm) const { return submatrix(perm); }

  std::vector<std::vector<Entry>> to_rows() const;

  friend bool operator==(const DissimilarityMatrix&, const DissimilarityMatrix&) = default;

 private:
  int dim_;
  std::vector<Entry> entries_;
};

// Graph distance matrices are dissimilarity matrices produced by apsp().
using DistanceMatrix = DissimilarityMatrix;

// ---- metric and four-point checks ----

/// Returns (i,j,k) with d(i,k) > d(i,j) + d(j,k), if any.
std::optional<std::array<int, 3>> find_triangle_violation(const DissimilarityMatrix& m);
bool is_metric(const DissimilarityMatrix& m);

/// The three pair sums d_ij+d_hk, d_ih+d_jk, d_ik+d_jh of a quadruple.
std::array<Entry, 3> pair_sums(const DissimilarityMatrix& m, int i, int j, int h, int k);
/// "The two largest of the three sums are equal."
bool four_point_two_largest_equal(const std::array<Entry, 3>& sums);
/// The three-inequality form: each sum is at most the max of the other two.
bool four_point_inequalities(const std::array<Entry, 3>& sums);

/// First 4-subset (i<j<h<k) violating the four-point condition.
std::optional<std::array<int, 4>> find_four_point_violation(const DissimilarityMatrix& m);
/// Metric and four-point on every 4-subset. Vacuously true for dim <= 2.
bool is_additive(const DissimilarityMatrix& m);

// ---- exact determinants ----

/// Fraction-free (Bareiss) elimination over arbitrary-precision integers.
BigInt det_exact(const DissimilarityMatrix& m);
BigInt det_exact(int dim, std::span<const Entry> row_major);

/// (-1)^(n-1) (n-1) 2^(n-2), the determinant of any tree distance matrix.
BigInt tree_det_formula(int n);

/// Block sizes n_1 >= ... >= n_k >= 2 of a block graph.
class BlockSizeSequence {
 public:
  /// Sorts descending; throws Error(InvalidArgument) on an empty list or a size < 2.
  explicit BlockSizeSequence(std::vector<int> sizes);

  const std::vector<int>& sizes() const noexcept { return sizes_; }
  int count() const noexcept { return static_cast<int>(sizes_.size()); }
  /// Order n of any block graph with these blocks: sum(n_i) - k + 1.
  int graph_order() const noexcept;

  friend bool operator==(const BlockSizeSequence&, const BlockSizeSequence&) = default;

 private:
  std::vector<int> sizes_;
};

/// sum_i (n_i - 1) prod_{j != i} n_j; equals sum (n_i-1)/n_i * prod n_j with
/// the denominators cleared.
BigInt block_det_magnitude(const BlockSizeSequence& seq);
/// (-1)^(n-1) * block_det_magnitude(seq) with n = seq.graph_order().
BigInt block_det_formula(const BlockSizeSequence& seq);

enum class Lemma23Outcome { Holds, HoldsWithEquality, Violated };

/// Compares block_det_magnitude(seq) against (n-1) 2^(n-2). Throws
/// Error(InvalidArgument) if seq is not a block-size sequence of order n.
Lemma23Outcome check_lemma23(int n, const BlockSizeSequence& seq);

/// All block-size sequences of graphs of order n (one per partition of n-1).
std::vector<BlockSizeSequence> all_block_size_sequences(int n);

// ---- text format ----
// First line "k", then k lines of k whitespace-separated non-negative integers.

DissimilarityMatrix read_matrix(std::istream& in);
DissimilarityMatrix parse_matrix(const std::string& text);
void write_matrix(std::ostream& out, const DissimilarityMatrix& m);
std::string format_matrix(const DissimilarityMatrix& m);

}  // namespace bdr
