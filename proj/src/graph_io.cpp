#include <istream>
#include <ostream>
#include <sstream>

#include "bdr/error.hpp"
#include "bdr/graph.hpp"

namespace bdr {

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&] {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& msg) {
    return Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  };
  if (!next_line()) throw Error(ErrorKind::ParseError, "empty graph input");
  std::istringstream head(line);
  long long n = 0, m = 0;
  std::string extra;
  if (!(head >> n >> m) || (head >> extra)) throw fail("expected \"n m\"");
  if (n < 1 || m < 0) throw fail("order must be positive and size non-negative");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw Error(ErrorKind::ParseError, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream row(line);
    long long u = 0, v = 0;
    if (!(row >> u >> v) || (row >> extra)) throw fail("expected \"u v\"");
    if (u < 1 || u > n || v < 1 || v > n) throw fail("vertex id out of range 1.." + std::to_string(n));
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (next_line()) throw fail("unexpected trailing data");
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DisconnectedInput) throw;
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

void write_dot(std::ostream& out, const Graph& g, std::span<const Vertex> highlighted) {
  std::vector<char> filled(g.order(), 0);
  for (Vertex v : highlighted) filled.at(v) = 1;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v + 1 << " [label=\"" << v + 1 << "\"";
    if (filled[v]) out << ", style=filled";
    out << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u + 1 << " -- " << v + 1 << ";\n";
  out << "}\n";
}

std::string edge_list_string(const Graph& g) {
  std::string s;
  for (auto [u, v] : g.edges()) {
    if (!s.empty()) s += ',';
    s += std::to_string(u + 1) + "-" + std::to_string(v + 1);
  }
  return s;
}

Graph parse_edge_list_string(int n, const std::string& text) {
  std::vector<Edge> edges;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos) throw Error(ErrorKind::ParseError, "bad edge token \"" + tok + "\"");
    try {
      edges.emplace_back(std::stoi(tok.substr(0, dash)) - 1, std::stoi(tok.substr(dash + 1)) - 1);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad edge token \"" + tok + "\"");
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace bdr
