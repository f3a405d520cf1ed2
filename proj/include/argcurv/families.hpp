#pragma once

#include <string>
#include <vector>

#include "argcurv/graph.hpp"

namespace argcurv {

// Named graph families, deterministic vertex labellings.
Graph hypercube(int d);                      // d >= 1, labels = bit strings
Graph hamming(int n, int q);                 // n >= 1, q >= 2, labels = base-q strings
Graph johnson(int n, int k);                 // n >= 2k >= 2, labels = k-subsets in colex order
Graph rook(int m);                           // m >= 2, K_m x K_m, labels row*m+col
Graph cycle(int n);                          // n >= 3
Graph complete(int n);                       // n >= 1
Graph complete_bipartite(int a, int b);      // a, b >= 1, left block first
Graph petersen();
Graph shrikhande();                          // Cayley(Z4 x Z4, {+-(1,0), +-(0,1), +-(1,1)})
Graph icosahedron();

// Dispatch by family name with positional integer parameters, as accepted by
// the command line. Throws std::invalid_argument on unknown name or bad arity.
Graph generate(const std::string& family, const std::vector<int>& params);

// Names understood by generate(), with required parameter counts.
std::vector<std::pair<std::string, int>> family_catalog();

}  // namespace argcurv
