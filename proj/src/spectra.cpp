#include "argcurv/spectra.hpp"

#include <cmath>
#include <stdexcept>

namespace argcurv {

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m(g.vertex_count());
  for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0);
  return m;
}

Spectrum adjacency_spectrum(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("spectrum of empty graph");
  auto result = eigensolve(adjacency_matrix(g));
  auto& s = result.spectrum;
  auto d = g.regular_degree();
  if (d && g.is_connected()) {
    if (std::abs(theta_top(s) - *d) > 1e-9)
      throw std::runtime_error("top eigenvalue of connected regular graph drifted from degree");
    bool spectral_bipartite = std::abs(theta_bottom(s) + *d) <= 1e-9;
    bool structural_bipartite = g.bipartite_classes().has_value();
    if (spectral_bipartite != structural_bipartite)
      throw std::runtime_error("bipartiteness disagreement between spectrum and 2-colouring");
  }
  return s;
}

Spectrum local_spectrum(const Graph& g, int x) {
  auto [lg, verts] = local_graph(g, x);
  if (lg.vertex_count() == 0) throw std::invalid_argument("local spectrum of isolated vertex");
  return eigensolve(adjacency_matrix(lg)).spectrum;
}

}  // namespace argcurv
