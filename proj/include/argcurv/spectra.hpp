#pragma once

#include "argcurv/graph.hpp"
#include "argcurv/sym_matrix.hpp"

namespace argcurv {

SymMatrix adjacency_matrix(const Graph& g);

// Full adjacency spectrum, ascending. On a connected regular graph the top
// eigenvalue is checked against the degree, and theta_1 = -d is cross-checked
// against BFS bipartiteness; disagreement beyond 1e-9 throws.
Spectrum adjacency_spectrum(const Graph& g);

// Spectrum of the subgraph induced on S_1(x).
Spectrum local_spectrum(const Graph& g, int x);

// Convenience accessors for a spectrum theta_1 <= ... <= theta_n.
inline double theta_bottom(const Spectrum& s) { return s.eigenvalues.front(); }
inline double theta_second(const Spectrum& s) {
  return s.eigenvalues[s.eigenvalues.size() - 2];
}
inline double theta_top(const Spectrum& s) { return s.eigenvalues.back(); }

}  // namespace argcurv
