#include "argcurv/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace argcurv {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

}  // namespace

LoadedGraph read_graph(std::istream& in) {
  int lineno = 0;
  std::string line;
  auto next_content_line = [&]() -> std::optional<std::string> {
    while (std::getline(in, line)) {
      ++lineno;
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (line[pos] == '#') continue;
      return line;
    }
    return std::nullopt;
  };

  auto header = next_content_line();
  if (!header) throw std::runtime_error("empty graph file");
  long long n, m;
  {
    std::istringstream ss(*header);
    std::string extra;
    if (!(ss >> n >> m) || (ss >> extra))
      fail(lineno, "expected header 'n m'");
  }
  if (n < 0 || m < 0) fail(lineno, "negative count in header");

  std::vector<std::pair<int, int>> edges;
  std::vector<int8_t> signs;
  bool any_sign = false;
  for (long long e = 0; e < m; ++e) {
    auto row = next_content_line();
    if (!row) throw std::runtime_error("unexpected end of file: expected " + std::to_string(m) +
                                       " edges, got " + std::to_string(e));
    std::istringstream ss(*row);
    long long u, v;
    if (!(ss >> u >> v)) fail(lineno, "expected edge 'u v'");
    std::string tail, extra;
    bool has_sign = static_cast<bool>(ss >> tail);
    if (has_sign && (ss >> extra)) fail(lineno, "trailing tokens after edge");
    if (u < 0 || v < 0 || u >= n || v >= n) fail(lineno, "vertex index out of range");
    if (u == v) fail(lineno, "self-loop");
    if (u > v) fail(lineno, "edge endpoints must satisfy u < v");
    if (any_sign != has_sign && e > 0)
      fail(lineno, "sign column must be present on every edge or none");
    if (has_sign) {
      if (tail == "+1") signs.push_back(1);
      else if (tail == "-1") signs.push_back(-1);
      else fail(lineno, "sign must be '+1' or '-1'");
      any_sign = true;
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::runtime_error("duplicate edge in input");
  }

  LoadedGraph out{Graph(static_cast<int>(n), edges), std::nullopt};
  if (any_sign) {
    // reorder signs into the graph's sorted edge order
    Signature sig;
    sig.signs.resize(edges.size());
    for (size_t i = 0; i < edges.size(); ++i)
      sig.signs[out.graph.edge_index(edges[i].first, edges[i].second)] = signs[i];
    out.signature = std::move(sig);
  }
  return out;
}

LoadedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_graph(in);
}

namespace {

std::string render(const Graph& g, const Signature* sigma) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edges()[e];
    out << u << ' ' << v;
    if (sigma) out << ' ' << (sigma->signs[e] > 0 ? "+1" : "-1");
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string write_graph(const Graph& g) { return render(g, nullptr); }

std::string write_graph(const Graph& g, const Signature& sigma) {
  if (static_cast<int>(sigma.signs.size()) != g.edge_count())
    throw std::invalid_argument("signature size mismatch");
  return render(g, &sigma);
}

}  // namespace argcurv
