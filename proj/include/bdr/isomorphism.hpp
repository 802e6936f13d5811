#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "bdr/graph.hpp"
#include "bdr/matrix.hpp"

namespace bdr {

/// Exact isomorphism test: distance-profile colouring, then backtracking that
/// keeps every mapped pair at the same distance in both graphs.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Cheap isomorphism invariant (order, size, sorted distance profiles).
std::size_t invariant_hash(const Graph& g);

/// Canonical form of a dissimilarity matrix under simultaneous row/column
/// permutation: the lexicographically smallest upper triangle, read column by
/// column (d01, d02, d12, d03, ...).
struct CanonicalMatrix {
  int dim = 0;
  std::vector<Entry> code;

  DissimilarityMatrix matrix() const;
  /// Comma-separated code, "-" when empty.
  std::string flat() const;

  friend auto operator<=>(const CanonicalMatrix&, const CanonicalMatrix&) = default;
  friend bool operator==(const CanonicalMatrix&, const CanonicalMatrix&) = default;
};

inline constexpr int kCanonicalMaxDim = 9;

/// Throws Error(BoundExceeded) when dim > kCanonicalMaxDim.
CanonicalMatrix canonical_matrix(const DissimilarityMatrix& m);

/// Row order achieving the canonical form: canonical(i,j) = m(p[i], p[j]).
std::vector<int> canonical_permutation(const DissimilarityMatrix& m);

}  // namespace bdr
