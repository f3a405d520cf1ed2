#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "argcurv/graph.hpp"

namespace argcurv {

// +-1 edge signature, stored in the graph's sorted edge order.
struct Signature {
  std::vector<int8_t> signs;

  static Signature all_plus(const Graph& g) {
    return Signature{std::vector<int8_t>(g.edge_count(), 1)};
  }
  static Signature all_minus(const Graph& g) {
    return Signature{std::vector<int8_t>(g.edge_count(), -1)};
  }

  int sign(const Graph& g, int u, int v) const {
    int idx = g.edge_index(u, v);
    if (idx < 0) throw std::invalid_argument("signature queried on a non-edge");
    return signs.at(idx);
  }
};

// +-1 function on vertices.
using SwitchingFunction = std::vector<int8_t>;

// sigma^tau(xy) = tau(x) sigma(xy) tau(y). The curvature pipeline is
// invariant under this operation.
Signature switch_signature(const Graph& g, const Signature& sigma, const SwitchingFunction& tau);

// A signature is balanced iff every cycle has positive sign product,
// equivalently iff it switches to the all-plus signature.
bool is_balanced(const Graph& g, const Signature& sigma);
// Anti-balanced: switches to all-minus.
bool is_antibalanced(const Graph& g, const Signature& sigma);

Signature random_signature(const Graph& g, std::mt19937_64& rng);
SwitchingFunction random_switching(const Graph& g, std::mt19937_64& rng);

}  // namespace argcurv
