#include "bdr/conjecture.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "bdr/enumerate.hpp"
#include "bdr/error.hpp"

namespace bdr {

namespace {

constexpr Universe kUniverses[] = {Universe::All, Universe::Tree, Universe::Block, Universe::OneBlock,
                                   Universe::Unicyclic};

CanonicalMatrix parse_canonical(int dim, const std::string& flat) {
  CanonicalMatrix c{dim, {}};
  if (flat != "-") {
    std::stringstream ss(flat);
    std::string tok;
    while (std::getline(ss, tok, ',')) c.code.push_back(std::stoll(tok));
  }
  if (c.code.size() != static_cast<std::size_t>(dim) * (dim - 1) / 2)
    throw Error(ErrorKind::ParseError, "canonical matrix of order " + std::to_string(dim) + " has wrong length");
  return c;
}

void sort_graphs(std::vector<Graph>& gs) {
  std::stable_sort(gs.begin(), gs.end(), [](const Graph& a, const Graph& b) {
    return std::pair(a.order(), edge_list_string(a)) < std::pair(b.order(), edge_list_string(b));
  });
}

void write_section(std::ostream& out, const char* name, const std::vector<Bucket>& buckets) {
  out << '[' << name << "] " << buckets.size() << '\n';
  for (const auto& b : buckets) {
    out << (b.order == 0 ? std::string("*") : std::to_string(b.order)) << ' ' << b.key.dim << ' ' << b.key.flat()
        << " :";
    for (std::size_t i = 0; i < b.graphs.size(); ++i) out << (i ? ";" : " ") << edge_list_string(b.graphs[i]);
    out << '\n';
  }
}

}  // namespace

std::string_view to_string(Universe u) {
  switch (u) {
    case Universe::All: return "all";
    case Universe::Tree: return "tree";
    case Universe::Block: return "block";
    case Universe::OneBlock: return "block1";
    case Universe::Unicyclic: return "unicyclic";
  }
  return "?";
}

std::optional<Universe> parse_universe(std::string_view name) {
  for (auto u : kUniverses)
    if (to_string(u) == name) return u;
  return std::nullopt;
}

int universe_max_order(Universe u) {
  switch (u) {
    case Universe::All: return 8;
    case Universe::Tree: return 10;
    case Universe::Block: return 8;
    case Universe::OneBlock: return 9;
    case Universe::Unicyclic: return 9;
  }
  return 0;
}

std::vector<Graph> conjecture_universe(int n_max, Universe u) {
  if (n_max < 2 || n_max > universe_max_order(u))
    throw Error(ErrorKind::BoundExceeded, "n_max for universe " + std::string(to_string(u)) + " must be in 2.." +
                                              std::to_string(universe_max_order(u)) + ", got " +
                                              std::to_string(n_max));
  std::vector<Graph> out;
  auto append = [&](std::vector<Graph> gs) { std::move(gs.begin(), gs.end(), std::back_inserter(out)); };
  if (u == Universe::All) {
    auto all = connected_graphs_up_to(n_max);
    for (int n = 2; n <= n_max; ++n) append(std::move(all[n]));
    return out;
  }
  for (int n = 2; n <= n_max; ++n) {
    switch (u) {
      case Universe::Tree: append(enumerate_trees(n)); break;
      case Universe::Block: append(enumerate_block_graphs(n)); break;
      case Universe::OneBlock:
        if (n >= 3) append(enumerate_one_block(n));
        break;
      case Universe::Unicyclic:
        if (n >= 3) append(enumerate_unicyclic(n));
        break;
      case Universe::All: break;
    }
  }
  return out;
}

GraphProfile profile_graph(const Graph& g) {
  const auto d = apsp(g);
  const auto b = boundary(g, d);
  GraphProfile p{g, b.size(), canonical_matrix(d.submatrix(b.members)), {}};
  const int n = g.order();
  std::vector<int> subset;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int k = std::popcount(mask);
    if (k < 2 || k > kCanonicalMaxDim) continue;
    subset.clear();
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) subset.push_back(v);
    p.submatrices.push_back(canonical_matrix(d.submatrix(subset)));
  }
  std::sort(p.submatrices.begin(), p.submatrices.end());
  p.submatrices.erase(std::unique(p.submatrices.begin(), p.submatrices.end()), p.submatrices.end());
  return p;
}

std::vector<std::pair<long, GraphProfile>> profile_shard(const std::vector<Graph>& universe, int shards,
                                                         int shard_id) {
  if (shards < 1 || shard_id < 0 || shard_id >= shards)
    throw Error(ErrorKind::InvalidArgument, "shard id must be in 0.." + std::to_string(shards - 1));
  std::vector<std::pair<long, GraphProfile>> out;
  for (std::size_t i = shard_id; i < universe.size(); i += shards)
    out.emplace_back(static_cast<long>(i), profile_graph(universe[i]));
  return out;
}

ConjectureReport build_report(int n_max, Universe u, const std::vector<GraphProfile>& profiles) {
  ConjectureReport r;
  r.n_max = n_max;
  r.universe = u;
  r.graphs = static_cast<long>(profiles.size());

  std::map<std::pair<int, CanonicalMatrix>, std::vector<int>> by_order_key;
  std::map<CanonicalMatrix, std::vector<int>> by_key;
  std::map<std::pair<int, CanonicalMatrix>, std::vector<int>> containing;
  for (int i = 0; i < static_cast<int>(profiles.size()); ++i) {
    const auto& p = profiles[i];
    by_order_key[{p.graph.order(), p.boundary}].push_back(i);
    by_key[p.boundary].push_back(i);
  }
  for (int i = 0; i < static_cast<int>(profiles.size()); ++i)
    for (const auto& s : profiles[i].submatrices) {
      auto it = by_order_key.find({profiles[i].graph.order(), s});
      if (it != by_order_key.end()) containing[it->first].push_back(i);
    }

  auto make = [&](int order, const CanonicalMatrix& key, const std::vector<int>& first,
                  const std::vector<int>& rest) {
    Bucket b{order, key, {}};
    for (int i : first) b.graphs.push_back(profiles[i].graph);
    sort_graphs(b.graphs);
    std::vector<Graph> tail;
    for (int i : rest)
      if (std::find(first.begin(), first.end(), i) == first.end()) tail.push_back(profiles[i].graph);
    sort_graphs(tail);
    std::move(tail.begin(), tail.end(), std::back_inserter(b.graphs));
    return b;
  };
  for (const auto& [k, idx] : by_order_key) {
    if (idx.size() >= 2) r.hkn.push_back(make(k.first, k.second, idx, {}));
    const auto& c = containing[k];
    if (c.size() >= 2) r.hn.push_back(make(k.first, k.second, idx, c));
  }
  for (const auto& [k, idx] : by_key)
    if (idx.size() >= 2) r.hk.push_back(make(0, k, idx, {}));
  return r;
}

ConjectureReport test_conjecture(int n_max, const ConjectureOptions& options) {
  if (options.shards < 1) throw Error(ErrorKind::InvalidArgument, "shards must be positive");
  const auto universe = conjecture_universe(n_max, options.universe);
  std::vector<GraphProfile> profiles(universe.size(), GraphProfile{Graph(1, {}), 0, {}, {}});
  std::vector<std::thread> workers;
  std::mutex error_mutex;
  std::exception_ptr error;
  for (int s = 0; s < options.shards; ++s)
    workers.emplace_back([&, s] {
      try {
        for (auto& [i, p] : profile_shard(universe, options.shards, s)) profiles[i] = std::move(p);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
  return build_report(n_max, options.universe, profiles);
}

HMembership h_class_membership(const Graph& g, int n_max) {
  if (g.order() < 2 || g.order() > n_max)
    throw Error(ErrorKind::BoundExceeded, "graph order " + std::to_string(g.order()) + " outside 2.." +
                                              std::to_string(n_max));
  static std::mutex cache_mutex;
  static std::map<int, std::vector<GraphProfile>> cache;
  std::vector<GraphProfile>* universe;
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(n_max);
    if (it == cache.end()) {
      std::vector<GraphProfile> ps;
      for (const auto& h : conjecture_universe(n_max, Universe::All)) ps.push_back(profile_graph(h));
      it = cache.emplace(n_max, std::move(ps)).first;
    }
    universe = &it->second;
  }
  const auto p = profile_graph(g);
  HMembership m{true, true, true};
  for (const auto& q : *universe) {
    if (q.graph.order() == g.order() && are_isomorphic(q.graph, g)) continue;
    if (q.boundary == p.boundary) {
      m.in_hk = false;
      if (q.graph.order() == g.order()) m.in_hkn = false;
    }
    if (q.graph.order() == g.order() && std::binary_search(q.submatrices.begin(), q.submatrices.end(), p.boundary))
      m.in_hn = false;
  }
  return m;
}

void write_report(std::ostream& out, const ConjectureReport& r) {
  out << "n_max=" << r.n_max << '\n';
  out << "universe=" << to_string(r.universe) << '\n';
  out << "graphs=" << r.graphs << '\n';
  write_section(out, "Hkn", r.hkn);
  write_section(out, "Hk", r.hk);
  write_section(out, "Hn", r.hn);
}

void write_fragment(std::ostream& out, int n_max, Universe u, int shards, int shard_id,
                    const std::vector<std::pair<long, GraphProfile>>& profiles) {
  out << "fragment n_max=" << n_max << " universe=" << to_string(u) << " shards=" << shards
      << " shard=" << shard_id << " count=" << profiles.size() << '\n';
  for (const auto& [i, p] : profiles) {
    out << i << ' ' << p.graph.order() << ' ' << edge_list_string(p.graph) << ' ' << p.kappa << ' '
        << p.boundary.flat();
    for (const auto& s : p.submatrices) out << ' ' << s.dim << ':' << s.flat();
    out << '\n';
  }
}

ConjectureReport merge_fragments(const std::vector<std::string>& paths) {
  if (paths.empty()) throw Error(ErrorKind::InvalidArgument, "no fragments to merge");
  int n_max = -1, shards = -1;
  std::string universe_name;
  std::map<int, bool> seen_shards;
  std::map<long, GraphProfile> profiles;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open fragment " + path);
    std::string header;
    std::getline(in, header);
    int fn = 0, fs = 0, fid = 0;
    long count = 0;
    char uname[32] = {};
    if (std::sscanf(header.c_str(), "fragment n_max=%d universe=%31s shards=%d shard=%d count=%ld", &fn, uname, &fs,
                    &fid, &count) != 5)
      throw Error(ErrorKind::ParseError, path + ": bad fragment header");
    if (n_max < 0) {
      n_max = fn;
      shards = fs;
      universe_name = uname;
    } else if (fn != n_max || fs != shards || universe_name != uname) {
      throw Error(ErrorKind::InvalidArgument, path + ": fragment belongs to a different run");
    }
    if (seen_shards[fid]) throw Error(ErrorKind::InvalidArgument, path + ": shard " + std::to_string(fid) + " repeated");
    seen_shards[fid] = true;
    std::string line;
    long lines = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      long idx;
      int n, kappa;
      std::string edges, flat, tok;
      if (!(ls >> idx >> n >> edges >> kappa >> flat)) throw Error(ErrorKind::ParseError, path + ": bad record");
      GraphProfile p{parse_edge_list_string(n, edges), kappa, parse_canonical(kappa, flat), {}};
      while (ls >> tok) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) throw Error(ErrorKind::ParseError, path + ": bad submatrix token");
        p.submatrices.push_back(parse_canonical(std::stoi(tok.substr(0, colon)), tok.substr(colon + 1)));
      }
      profiles.emplace(idx, std::move(p));
      ++lines;
    }
    if (lines != count) throw Error(ErrorKind::ParseError, path + ": truncated fragment");
  }
  if (static_cast<int>(seen_shards.size()) != shards)
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(shards) + " fragments, got " +
                                                std::to_string(seen_shards.size()));
  const auto u = parse_universe(universe_name);
  if (!u) throw Error(ErrorKind::ParseError, "unknown universe " + universe_name);
  std::vector<GraphProfile> ordered;
  long expect = 0;
  for (auto& [i, p] : profiles) {
    if (i != expect++) throw Error(ErrorKind::InvalidArgument, "fragments miss graph " + std::to_string(expect - 1));
    ordered.push_back(std::move(p));
  }
  return build_report(n_max, *u, ordered);
}

}  // namespace bdr
