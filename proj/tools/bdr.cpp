// bdr: boundary distance matrices from the command line.
// Exit codes: 0 verdict true / success, 1 verdict false, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bdr/conjecture.hpp"
#include "bdr/error.hpp"
#include "bdr/graph.hpp"
#include "bdr/matrix.hpp"
#include "bdr/realizability.hpp"
#include "bdr/reconstruction.hpp"

namespace {

using namespace bdr;

constexpr int kTrue = 0, kFalse = 1, kInputError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

void emit_graph(const Graph& g, const std::string& out_path, const std::string& dot_path,
                const std::vector<Vertex>& highlight) {
  if (out_path.empty())
    std::cout << format_graph(g);
  else
    write_file(out_path, format_graph(g));
  if (!dot_path.empty()) {
    std::ostringstream dot;
    write_dot(dot, g, highlight);
    write_file(dot_path, dot.str());
  }
}

struct Common {
  std::string out, dot;
  std::optional<unsigned> seed;  // accepted for scripted runs; no command is randomized
};

int cmd_boundary(const std::string& input, bool with_matrix, const Common& c) {
  const Graph g = parse_graph(read_input(input));
  const auto d = apsp(g);
  const auto b = boundary(g, d);
  std::ostringstream os;
  os << "κ=" << b.size() << '\n';
  for (int i = 0; i < b.size(); ++i)
    os << b.members[i] + 1 << ' ' << (b.labels[i] == BoundaryLabel::Leaf ? "Leaf" : "NonLeafBoundary") << '\n';
  if (with_matrix) os << format_matrix(d.submatrix(b.members));
  if (c.out.empty())
    std::cout << os.str();
  else
    write_file(c.out, os.str());
  if (!c.dot.empty()) {
    std::ostringstream dot;
    write_dot(dot, g, b.members);
    write_file(c.dot, dot.str());
  }
  return kTrue;
}

int cmd_check(const std::string& input, const std::string& family, const Common& c) {
  const auto f = parse_matrix_family(family);
  if (!f) throw Error(ErrorKind::InvalidArgument, "unknown family " + family);
  const auto m = parse_matrix(read_input(input));
  const auto r = decide(*f, m);
  std::cout << r.verdict_line() << '\n';
  if (r.verdict && r.witness) {
    if (!c.out.empty()) {
      emit_graph(*r.witness, c.out, c.dot, r.witness_rows);
    } else if (!c.dot.empty()) {
      std::ostringstream dot;
      write_dot(dot, *r.witness, r.witness_rows);
      write_file(c.dot, dot.str());
    }
  }
  return r.verdict ? kTrue : kFalse;
}

int cmd_reconstruct(const std::string& input, const std::string& family, bool verify, bool trace,
                    const Common& c) {
  const auto m = parse_matrix(read_input(input));
  std::optional<ReconstructionResult> r;
  std::vector<std::string> steps;
  try {
    if (family == "tree") {
      const auto rep = is_tree_boundary_matrix(m);
      if (!rep.verdict) {
        std::cout << rep.verdict_line() << '\n';
        return kFalse;
      }
      std::vector<AttachStep> t;
      r = m.dim() == 2 ? ReconstructionResult{*rep.witness, rep.witness_rows} : reconstruct_tree(m, &t);
      for (const auto& s : t) steps.push_back(format_step(s));
    } else if (family == "block1" || family == "unicyclic") {
      std::vector<PeelStep> t;
      r = family == "block1" ? reconstruct_1block(m, &t) : reconstruct_unicyclic(m, &t);
      for (const auto& s : t) steps.push_back(format_step(s));
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown family " + family + " (tree, block1, unicyclic)");
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::TooSmall) throw;
    std::cout << family << " false " << e.what() << '\n';
    return kFalse;
  }
  if (trace)
    for (const auto& s : steps) std::cerr << s << '\n';
  if (verify) {
    if (!verifies_boundary(*r, m)) {
      std::cerr << "verify failed: boundary matrix differs from the input\n";
      return kFalse;
    }
    std::cerr << "verify ok\n";
  }
  emit_graph(r->graph, c.out, c.dot, r->index_map);
  return kTrue;
}

int cmd_conjecture(int n_max, const std::string& universe, int shards, std::optional<int> shard_id,
                   const std::vector<std::string>& merge, const Common& c) {
  ConjectureReport report;
  if (!merge.empty()) {
    report = merge_fragments(merge);
  } else {
    const auto u = parse_universe(universe);
    if (!u) throw Error(ErrorKind::InvalidArgument, "unknown family " + universe);
    if (shard_id) {
      const auto graphs = conjecture_universe(n_max, *u);
      std::ostringstream os;
      write_fragment(os, n_max, *u, shards, *shard_id, profile_shard(graphs, shards, *shard_id));
      if (c.out.empty())
        std::cout << os.str();
      else
        write_file(c.out, os.str());
      return kTrue;
    }
    report = test_conjecture(n_max, {*u, shards});
  }
  std::ostringstream os;
  write_report(os, report);
  if (c.out.empty())
    std::cout << os.str();
  else
    write_file(c.out, os.str());
  return report.violates_hkn() ? kFalse : kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary distance matrices: recognition, reconstruction and small-graph sweeps"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--seed", common.seed, "Seed for scripted runs (commands are deterministic)");

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "Write the main output here instead of stdout");
    sub->add_option("--dot", common.dot, "Write a DOT rendering of the graph");
  };

  std::string input = "-";
  bool with_matrix = false;
  auto* boundary_cmd = app.add_subcommand("boundary", "List the boundary of a graph");
  boundary_cmd->add_option("input", input, "Graph file ('-' for stdin)");
  boundary_cmd->add_flag("--matrix", with_matrix, "Also print the boundary distance matrix");
  add_io(boundary_cmd);

  std::string family;
  auto* check_cmd = app.add_subcommand("check", "Decide whether a matrix belongs to a family");
  check_cmd->add_option("input", input, "Matrix file ('-' for stdin)");
  check_cmd->add_option("--family", family, "metric, additive, tree-dist, block-dist, unicyclic-dist, cycle, "
                                            "tree-boundary, block-boundary, unicyclic-boundary")
      ->required();
  add_io(check_cmd);

  bool verify = false, trace = false;
  auto* rec_cmd = app.add_subcommand("reconstruct", "Rebuild a graph from its boundary distance matrix");
  rec_cmd->add_option("input", input, "Matrix file ('-' for stdin)");
  rec_cmd->add_option("--family", family, "tree, block1 or unicyclic")->required();
  rec_cmd->add_flag("--verify", verify, "Recompute the boundary matrix of the result and compare");
  rec_cmd->add_flag("--trace", trace, "Print one line per reconstruction step on stderr");
  add_io(rec_cmd);

  int n_max = 0, shards = 1;
  std::optional<int> shard_id;
  std::string universe = "all";
  std::vector<std::string> merge;
  auto* conj_cmd = app.add_subcommand("conjecture", "Sweep small graphs for shared boundary matrices");
  auto* n_opt = conj_cmd->add_option("--n-max", n_max, "Largest order");
  conj_cmd->add_option("--family", universe, "all, tree, block, block1 or unicyclic");
  conj_cmd->add_option("--shards", shards, "Worker threads, or the shard count with --shard-id")
      ->check(CLI::PositiveNumber);
  conj_cmd->add_option("--shard-id", shard_id, "Write the fragment of one shard instead of a report");
  auto* merge_opt = conj_cmd->add_option("--merge", merge, "Merge fragment files into a report");
  n_opt->excludes(merge_opt);
  add_io(conj_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*boundary_cmd) return cmd_boundary(input, with_matrix, common);
    if (*check_cmd) return cmd_check(input, family, common);
    if (*rec_cmd) return cmd_reconstruct(input, family, verify, trace, common);
    if (*conj_cmd) {
      if (merge.empty() && n_opt->count() == 0) throw Error(ErrorKind::InvalidArgument, "--n-max is required");
      return cmd_conjecture(n_max, universe, shards, shard_id, merge, common);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
