#include "bdr/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bdr/error.hpp"

namespace bdr {

namespace {

// Per-vertex count of vertices at each distance.
std::vector<std::vector<int>> distance_profiles(const DistanceMatrix& d) {
  const int n = d.dim();
  std::vector<std::vector<int>> p(n, std::vector<int>(n, 0));
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) ++p[v][d(v, w)];
  return p;
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b) : da_(apsp(a)), db_(apsp(b)), n_(a.order()) {}

  bool run() {
    auto pa = distance_profiles(da_), pb = distance_profiles(db_);
    std::map<std::vector<int>, int> ids;
    for (auto& p : pa) ids.emplace(p, static_cast<int>(ids.size()));
    color_a_.resize(n_);
    color_b_.resize(n_);
    for (int v = 0; v < n_; ++v) color_a_[v] = ids.at(pa[v]);
    for (int v = 0; v < n_; ++v) {
      auto it = ids.find(pb[v]);
      if (it == ids.end()) return false;
      color_b_[v] = it->second;
    }
    auto sa = color_a_, sb = color_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    // Map rare colours first, then stay close to already mapped vertices.
    std::vector<int> freq(ids.size(), 0);
    for (int c : color_a_) ++freq[c];
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) { return freq[color_a_[x]] < freq[color_a_[y]]; });
    for (int i = 1; i < n_; ++i) {
      auto best = std::min_element(order_.begin() + i, order_.end(), [&](int x, int y) {
        return std::pair(da_(order_[i - 1], x), freq[color_a_[x]]) < std::pair(da_(order_[i - 1], y), freq[color_a_[y]]);
      });
      std::iter_swap(order_.begin() + i, best);
    }
    map_.assign(n_, -1);
    used_.assign(n_, false);
    return extend(0);
  }

 private:
  bool extend(int i) {
    if (i == n_) return true;
    const int v = order_[i];
    for (int w = 0; w < n_; ++w) {
      if (used_[w] || color_b_[w] != color_a_[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = da_(v, order_[j]) == db_(w, map_[order_[j]]);
      if (!ok) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(i + 1)) return true;
      used_[w] = false;
    }
    map_[v] = -1;
    return false;
  }

  DistanceMatrix da_, db_;
  int n_;
  std::vector<int> color_a_, color_b_, order_, map_;
  std::vector<bool> used_;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const DissimilarityMatrix& m) : m_(m), k_(m.dim()) {
    // twin_rep_[v]: lowest row w with identical entries outside {v, w}.
    twin_rep_.resize(k_);
    for (int v = 0; v < k_; ++v) {
      twin_rep_[v] = v;
      for (int w = 0; w < v; ++w) {
        bool twin = true;
        for (int x = 0; x < k_ && twin; ++x)
          if (x != v && x != w) twin = m(v, x) == m(w, x);
        if (twin) {
          twin_rep_[v] = twin_rep_[w];
          break;
        }
      }
    }
  }

  std::vector<int> run() {
    cur_.assign(static_cast<std::size_t>(k_) * (k_ - 1) / 2, 0);
    perm_.assign(k_, -1);
    used_.assign(k_, false);
    search(0);
    return best_perm_;
  }

  const std::vector<Entry>& best_code() const { return best_; }

 private:
  // Prefix comparison against the best code is redone at every node, since the
  // best code can change while a subtree is explored.
  void search(int pos) {
    if (pos == k_) {
      if (best_perm_.empty() || cur_ < best_) {
        best_ = cur_;
        best_perm_ = perm_;
      }
      return;
    }
    const std::size_t off = static_cast<std::size_t>(pos) * (pos - 1) / 2;
    for (int v = 0; v < k_; ++v) {
      if (used_[v]) continue;
      // Interchangeable twins: only the lowest unused one of a class.
      bool skip = false;
      for (int w = 0; w < v && !skip; ++w) skip = !used_[w] && twin_rep_[w] == twin_rep_[v];
      if (skip) continue;
      for (int i = 0; i < pos; ++i) cur_[off + i] = m_(perm_[i], v);
      const auto end = static_cast<std::ptrdiff_t>(off + pos);
      if (!best_perm_.empty() &&
          std::lexicographical_compare(best_.begin(), best_.begin() + end, cur_.begin(), cur_.begin() + end))
        continue;
      perm_[pos] = v;
      used_[v] = true;
      search(pos + 1);
      used_[v] = false;
    }
  }

  const DissimilarityMatrix& m_;
  int k_;
  std::vector<int> twin_rep_, perm_, best_perm_;
  std::vector<bool> used_;
  std::vector<Entry> cur_, best_;
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return Matcher(a, b).run();
}

std::size_t invariant_hash(const Graph& g) {
  auto p = distance_profiles(apsp(g));
  std::sort(p.begin(), p.end());
  std::size_t h = std::hash<int>{}(g.order()) * 31 + std::hash<int>{}(g.size());
  for (const auto& row : p)
    for (int c : row) h = h * 1000003u ^ std::hash<int>{}(c);
  return h;
}

DissimilarityMatrix CanonicalMatrix::matrix() const {
  std::vector<Entry> e(static_cast<std::size_t>(dim) * dim, 0);
  std::size_t t = 0;
  for (int j = 1; j < dim; ++j)
    for (int i = 0; i < j; ++i, ++t) e[i * dim + j] = e[j * dim + i] = code[t];
  return DissimilarityMatrix(dim, std::move(e));
}

std::string CanonicalMatrix::flat() const {
  if (code.empty()) return "-";
  std::string s;
  for (Entry x : code) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::vector<int> canonical_permutation(const DissimilarityMatrix& m) {
  if (m.dim() > kCanonicalMaxDim)
    throw Error(ErrorKind::BoundExceeded, "canonical form supports at most " + std::to_string(kCanonicalMaxDim) +
                                              " rows, got " + std::to_string(m.dim()));
  if (m.dim() == 0) return {};
  return CanonicalSearch(m).run();
}

CanonicalMatrix canonical_matrix(const DissimilarityMatrix& m) {
  const auto p = canonical_permutation(m);
  CanonicalMatrix c{m.dim(), {}};
  for (int j = 1; j < m.dim(); ++j)
    for (int i = 0; i < j; ++i) c.code.push_back(m(p[i], p[j]));
  return c;
}

}  // namespace bdr
