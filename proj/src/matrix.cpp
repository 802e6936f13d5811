#include "bdr/matrix.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "bdr/error.hpp"

namespace bdr {

namespace {

std::string cell(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

BigInt pow2(int e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

}  // namespace

DissimilarityMatrix::DissimilarityMatrix(int dim, std::vector<Entry> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ < 1) throw Error(ErrorKind::InvalidMatrix, "dimension must be positive");
  if (entries_.size() != static_cast<std::size_t>(dim_) * dim_)
    throw Error(ErrorKind::InvalidMatrix, "expected " + std::to_string(dim_ * dim_) + " entries");
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      const Entry v = (*this)(i, j);
      if (i == j && v != 0) throw Error(ErrorKind::InvalidMatrix, "nonzero diagonal at " + cell(i, j));
      if (i != j && v <= 0) throw Error(ErrorKind::InvalidMatrix, "non-positive off-diagonal entry at " + cell(i, j));
      if (v != (*this)(j, i)) throw Error(ErrorKind::InvalidMatrix, "asymmetric entry at " + cell(i, j));
    }
  }
}

DissimilarityMatrix DissimilarityMatrix::from_rows(const std::vector<std::vector<Entry>>& rows) {
  const int dim = static_cast<int>(rows.size());
  std::vector<Entry> flat;
  flat.reserve(rows.size() * rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw Error(ErrorKind::InvalidMatrix, "row " + std::to_string(i + 1) + " has wrong length");
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return DissimilarityMatrix(dim, std::move(flat));
}

Entry DissimilarityMatrix::max_entry() const noexcept {
  return *std::max_element(entries_.begin(), entries_.end());
}

DissimilarityMatrix DissimilarityMatrix::submatrix(std::span<const int> indices) const {
  const int k = static_cast<int>(indices.size());
  std::vector<Entry> flat;
  flat.reserve(static_cast<std::size_t>(k) * k);
  for (int a : indices)
    for (int b : indices) flat.push_back((*this)(a, b));
  return DissimilarityMatrix(k, std::move(flat));
}

std::vector<std::vector<Entry>> DissimilarityMatrix::to_rows() const {
  std::vector<std::vector<Entry>> rows;
  for (int i = 0; i < dim_; ++i) rows.emplace_back(row(i).begin(), row(i).end());
  return rows;
}

std::optional<std::array<int, 3>> find_triangle_violation(const DissimilarityMatrix& m) {
  const int n = m.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (m(i, k) > m(i, j) + m(j, k)) return std::array{i, j, k};
  return std::nullopt;
}

bool is_metric(const DissimilarityMatrix& m) { return !find_triangle_violation(m); }

std::array<Entry, 3> pair_sums(const DissimilarityMatrix& m, int i, int j, int h, int k) {
  return {m(i, j) + m(h, k), m(i, h) + m(j, k), m(i, k) + m(j, h)};
}

bool four_point_two_largest_equal(const std::array<Entry, 3>& sums) {
  auto s = sums;
  std::sort(s.begin(), s.end());
  return s[1] == s[2];
}

bool four_point_inequalities(const std::array<Entry, 3>& s) {
  return s[0] <= std::max(s[1], s[2]) && s[1] <= std::max(s[0], s[2]) && s[2] <= std::max(s[0], s[1]);
}

std::optional<std::array<int, 4>> find_four_point_violation(const DissimilarityMatrix& m) {
  const int n = m.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int h = j + 1; h < n; ++h)
        for (int k = h + 1; k < n; ++k)
          if (!four_point_two_largest_equal(pair_sums(m, i, j, h, k))) return std::array{i, j, h, k};
  return std::nullopt;
}

bool is_additive(const DissimilarityMatrix& m) {
  if (m.dim() <= 2) return true;
  return is_metric(m) && !find_four_point_violation(m);
}

BigInt det_exact(int dim, std::span<const Entry> row_major) {
  if (dim == 0) return 1;
  std::vector<BigInt> a(row_major.begin(), row_major.end());
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * dim + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < dim - 1; ++k) {
    if (at(k, k) == 0) {
      int p = k + 1;
      while (p < dim && at(p, k) == 0) ++p;
      if (p == dim) return 0;
      for (int j = 0; j < dim; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < dim; ++i) {
      for (int j = k + 1; j < dim; ++j) {
        // Exact division: Bareiss guarantees prev divides the numerator.
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(dim - 1, dim - 1);
}

BigInt det_exact(const DissimilarityMatrix& m) { return det_exact(m.dim(), m.entries()); }

BigInt tree_det_formula(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "tree determinant formula needs n >= 2");
  BigInt v = BigInt(n - 1) * pow2(n - 2);
  return (n - 1) % 2 == 0 ? v : BigInt(-v);
}

BlockSizeSequence::BlockSizeSequence(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw Error(ErrorKind::InvalidArgument, "block-size sequence is empty");
  for (int s : sizes_)
    if (s < 2) throw Error(ErrorKind::InvalidArgument, "block size " + std::to_string(s) + " < 2");
  std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
}

int BlockSizeSequence::graph_order() const noexcept {
  return std::accumulate(sizes_.begin(), sizes_.end(), 0) - count() + 1;
}

BigInt block_det_magnitude(const BlockSizeSequence& seq) {
  const auto& s = seq.sizes();
  BigInt total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    BigInt term = s[i] - 1;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) term *= s[j];
    total += term;
  }
  return total;
}

BigInt block_det_formula(const BlockSizeSequence& seq) {
  BigInt v = block_det_magnitude(seq);
  return (seq.graph_order() - 1) % 2 == 0 ? v : BigInt(-v);
}

Lemma23Outcome check_lemma23(int n, const BlockSizeSequence& seq) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "order must be at least 2");
  if (seq.graph_order() != n)
    throw Error(ErrorKind::InvalidArgument, "block sizes do not sum to n + k - 1 for n = " + std::to_string(n));
  if (seq.count() > n - 1 || seq.sizes().front() > n)
    throw Error(ErrorKind::InvalidArgument, "block-size sequence out of range for n = " + std::to_string(n));
  const BigInt lhs = block_det_magnitude(seq);
  const BigInt rhs = BigInt(n - 1) * pow2(n - 2);
  if (lhs < rhs) return Lemma23Outcome::Holds;
  if (lhs == rhs) return Lemma23Outcome::HoldsWithEquality;
  return Lemma23Outcome::Violated;
}

std::vector<BlockSizeSequence> all_block_size_sequences(int n) {
  // Sizes n_i - 1 form a partition of n - 1.
  std::vector<BlockSizeSequence> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      std::vector<int> sizes;
      for (int p : parts) sizes.push_back(p + 1);
      out.emplace_back(std::move(sizes));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  if (n >= 2) rec(n - 1, n - 1);
  return out;
}

DissimilarityMatrix read_matrix(std::istream& in) {
  std::string line;
  auto next_line = [&](int& lineno) {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  int lineno = 0;
  if (!next_line(lineno)) throw Error(ErrorKind::ParseError, "empty matrix input");
  std::istringstream head(line);
  long long dim = 0;
  std::string extra;
  if (!(head >> dim) || dim < 1 || (head >> extra))
    throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected a positive dimension");
  std::vector<Entry> flat;
  flat.reserve(static_cast<std::size_t>(dim * dim));
  for (long long i = 0; i < dim; ++i) {
    if (!next_line(lineno))
      throw Error(ErrorKind::ParseError, "expected " + std::to_string(dim) + " rows, got " + std::to_string(i));
    std::istringstream row(line);
    for (long long j = 0; j < dim; ++j) {
      long long v;
      if (!(row >> v))
        throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected " +
                                               std::to_string(dim) + " integers");
      if (v < 0) throw Error(ErrorKind::ParseError, "negative entry at " + cell(static_cast<int>(i), static_cast<int>(j)));
      flat.push_back(v);
    }
    if (row >> extra) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": trailing data");
  }
  try {
    return DissimilarityMatrix(static_cast<int>(dim), std::move(flat));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

DissimilarityMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const DissimilarityMatrix& m) {
  out << m.dim() << '\n';
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

std::string format_matrix(const DissimilarityMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

}  // namespace bdr
