#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "argcurv/graph.hpp"
#include "argcurv/signature.hpp"

namespace argcurv {

struct LoadedGraph {
  Graph graph;
  // present iff the file carried a sign column
  std::optional<Signature> signature;
};

// Text format: first line "n m", then m lines "u v" with 0 <= u < v < n,
// optionally followed by "+1" or "-1" to give the edge a sign. '#' starts a
// comment line. Parse errors carry the 1-based line number.
LoadedGraph read_graph(std::istream& in);
LoadedGraph read_graph_file(const std::string& path);

std::string write_graph(const Graph& g);
std::string write_graph(const Graph& g, const Signature& sigma);

}  // namespace argcurv
