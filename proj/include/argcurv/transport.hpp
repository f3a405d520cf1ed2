#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "argcurv/graph.hpp"
#include "argcurv/rational.hpp"

namespace argcurv {

// Finitely supported probability measure on the vertex set.
struct LocalMeasure {
  std::map<int, Rational> mass;

  Rational total() const;
  // p at x, (1-p)/deg(x) at each neighbour.
  static LocalMeasure mu_p(const Graph& g, int x, const Rational& p);
};

// Coupling between two measures; entries[(u,v)] = mass moved u -> v.
struct TransportPlan {
  std::map<std::pair<int, int>, Rational> entries;
  LocalMeasure source;
  LocalMeasure target;

  // exact marginal check
  bool valid() const;
  Rational cost(const Graph& g) const;
};

struct WassersteinResult {
  Rational value;
  TransportPlan plan;
  // dual certificate: potentials[u] - potentials[v] <= d(u,v) on all
  // support pairs, with equality wherever the plan moves mass
  std::map<int, Rational> potential_source;
  std::map<int, Rational> potential_target;

  bool certifies_optimality(const Graph& g) const;
};

// Exact W_1 between two probability measures: masses are scaled by the lcm
// of their denominators and the resulting integer transportation problem is
// solved by successive shortest paths with potentials over BFS distances.
WassersteinResult wasserstein(const Graph& g, const LocalMeasure& mu1, const LocalMeasure& mu2);

// kappa_p(x,y) = 1 - W_1(mu_x^p, mu_y^p) / d(x,y).
Rational ollivier_p(const Graph& g, int x, int y, const Rational& p);

// Limit-free Lin-Lu-Yau curvature of an edge of a regular graph, computed as
// 2 kappa_{1/2} and cross-checked exactly against (d+1)/d kappa_{1/(d+1)}.
Rational lly_curvature(const Graph& g, int x, int y);

struct MatchingCharacterization {
  bool attains_upper_bound;           // kappa = (2 + |common|) / d
  // perfect matching between only_x and only_y when it exists...
  std::optional<std::vector<std::pair<int, int>>> matching;
  // ...otherwise a Hall violator: S inside only_x with |N(S) cap only_y| < |S|
  std::optional<std::vector<int>> hall_violator;
};

// The curvature upper bound is attained iff only_x has a perfect matching
// into only_y (Hopcroft-Karp); both sides are computed and must agree.
MatchingCharacterization matching_characterization(const Graph& g, int x, int y);

// Edge classes of the auxiliary bipartite multigraph on
// (only_x + common) x (only_y + mirrored common).
enum class HgClass {
  outer_outer,   // v in only_x adjacent to w in only_y
  outer_mirror,  // v in only_x adjacent to z_i
  common_outer,  // z_i adjacent to w in only_y
  common_mirror, // z_i adjacent to z_j, i != j
  identity,      // the beta-alpha parallel edges z_i -- z_i'
};

struct BipartiteMultigraph {
  std::vector<int> left;   // only_x then common (graph vertex ids)
  std::vector<int> right;  // only_y then mirrored common
  int left_outer;          // |only_x|
  int right_outer;         // |only_y|
  std::vector<std::vector<int>> mult;      // unit counts, left x right
  std::vector<std::vector<HgClass>> cls;   // defined where mult > 0

  int side() const { return static_cast<int>(left.size()); }
  bool is_regular(int k) const;
  int identity_units() const;
};

// One perfect matching of the multigraph; units (left index, right index).
struct HgMatching {
  std::vector<std::pair<int, int>> pairs;
};

// Auxiliary multigraph of an edge of an amply regular graph with
// 1 != beta >= alpha; always (beta-1)-regular, which is asserted.
BipartiteMultigraph build_hg(const Graph& g, int x, int y, const ArgParams& params);

// Splits a k-regular bipartite multigraph into exactly k perfect matchings
// (repeated augmenting-path matchings on the residual multiplicities).
std::vector<HgMatching> konig_decompose(const BipartiteMultigraph& h);

struct CertifiedBound {
  Rational bound;           // (2 + identity units in the chosen matching) / d
  int identity_units;       // >= ceil(alpha (beta-alpha) / (beta-1))
  HgMatching matching;
  TransportPlan plan;       // explicit coupling realising the bound
};

// Constructive curvature lower bound: decompose H_G, pick the matching with
// the most identity units, materialise the induced transport plan, and
// assert lly_curvature >= bound exactly.
CertifiedBound certified_lower_bound(const Graph& g, int x, int y, const ArgParams& params);

}  // namespace argcurv
