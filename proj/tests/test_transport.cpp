#include "doctest.h"

#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "argcurv/families.hpp"
#include "argcurv/graph.hpp"
#include "argcurv/transport.hpp"
#include "support.hpp"

using namespace argcurv;

// scale both measures onto a common integer grid and brute-force the optimum
static Rational oracle_w1(const Graph& g, const LocalMeasure& a, const LocalMeasure& b) {
  long long scale = 1;
  for (const auto& [v, m] : a.mass) scale = std::lcm(scale, m.den());
  for (const auto& [v, m] : b.mass) scale = std::lcm(scale, m.den());
  std::vector<int> sa, sb;
  std::vector<long long> rows, cols;
  for (const auto& [v, m] : a.mass) {
    sa.push_back(v);
    rows.push_back((m * Rational(scale)).num());
  }
  for (const auto& [v, m] : b.mass) {
    sb.push_back(v);
    cols.push_back((m * Rational(scale)).num());
  }
  std::vector<std::vector<long long>> cost(sa.size(), std::vector<long long>(sb.size()));
  for (size_t i = 0; i < sa.size(); ++i)
    for (size_t j = 0; j < sb.size(); ++j) cost[i][j] = g.distance(sa[i], sb[j]);
  long long best = testsupport::exhaustive_transport_cost(rows, cols, cost);
  REQUIRE(best >= 0);
  return Rational(best, scale);
}

TEST_CASE("mu_p puts p at the centre and spreads the rest") {
  Graph g = cycle(5);
  LocalMeasure mu = LocalMeasure::mu_p(g, 0, Rational(1, 2));
  CHECK(mu.total() == Rational(1));
  CHECK(mu.mass.at(0) == Rational(1, 2));
  CHECK(mu.mass.at(1) == Rational(1, 4));
  CHECK(mu.mass.at(4) == Rational(1, 4));

  LocalMeasure dirac = LocalMeasure::mu_p(g, 2, Rational(1));
  CHECK(dirac.mass.size() == 1);
  CHECK(dirac.mass.at(2) == Rational(1));

  LocalMeasure uniform = LocalMeasure::mu_p(g, 2, Rational(0));
  CHECK(uniform.mass.count(2) == 0);
  CHECK(uniform.mass.at(1) == Rational(1, 2));

  CHECK_THROWS_AS(LocalMeasure::mu_p(g, 0, Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(LocalMeasure::mu_p(g, 0, Rational(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(LocalMeasure::mu_p(g, 9, Rational(1, 2)), std::out_of_range);
}

TEST_CASE("wasserstein agrees with the brute-force oracle") {
  std::vector<Graph> graphs = {Graph(4, {{0, 1}, {1, 2}, {2, 3}}), cycle(5), cycle(6),
                               complete(4), petersen()};
  std::vector<Rational> ps = {Rational(0), Rational(1, 2), Rational(1, 3)};
  for (const Graph& g : graphs) {
    std::vector<std::pair<int, int>> pairs(g.edges().begin(),
                                           g.edges().begin() + std::min<size_t>(3, g.edges().size()));
    pairs.push_back({0, g.vertex_count() - 1});  // typically non-adjacent
    for (auto [x, y] : pairs) {
      if (x == y) continue;
      for (const Rational& p : ps) {
        LocalMeasure a = LocalMeasure::mu_p(g, x, p);
        LocalMeasure b = LocalMeasure::mu_p(g, y, p);
        WassersteinResult res = wasserstein(g, a, b);
        CAPTURE(x);
        CAPTURE(y);
        CHECK(res.value == oracle_w1(g, a, b));
        CHECK(res.plan.valid());
        CHECK(res.plan.cost(g) == res.value);
        CHECK(res.certifies_optimality(g));
      }
    }
  }
}

TEST_CASE("known transport values") {
  Graph c5 = cycle(5);
  LocalMeasure a = LocalMeasure::mu_p(c5, 0, Rational(1, 2));
  LocalMeasure b = LocalMeasure::mu_p(c5, 1, Rational(1, 2));
  CHECK(wasserstein(c5, a, b).value == Rational(3, 4));
  CHECK(ollivier_p(c5, 0, 1, Rational(1, 2)) == Rational(1, 4));
  CHECK(ollivier_p(complete(4), 0, 1, Rational(1, 2)) == Rational(2, 3));
}

TEST_CASE("curvature at p = 1 vanishes identically") {
  for (const Graph& g : {cycle(5), petersen(), hypercube(3)}) {
    CHECK(ollivier_p(g, 0, 1, Rational(1)) == Rational(0));
    int far = g.vertex_count() - 1;
    CHECK(ollivier_p(g, 0, far, Rational(1)) == Rational(0));
  }
}

TEST_CASE("limit-free curvature on named graphs") {
  CHECK(lly_curvature(cycle(5), 0, 1) == Rational(1, 2));
  CHECK(lly_curvature(cycle(6), 0, 1) == Rational(0));
  CHECK(lly_curvature(complete(4), 0, 1) == Rational(4, 3));
  for (int d = 3; d <= 4; ++d) {
    Graph q = hypercube(d);
    for (auto [x, y] : q.edges()) CHECK(lly_curvature(q, x, y) == Rational(2, d));
  }
  // the two scalings that define it agree with direct evaluation
  Graph g = petersen();
  auto [x, y] = g.edges()[0];
  Rational k = lly_curvature(g, x, y);
  CHECK(k == Rational(2) * ollivier_p(g, x, y, Rational(1, 2)));
  CHECK(k == Rational(4, 3) * ollivier_p(g, x, y, Rational(1, 4)));

  CHECK_THROWS_AS(lly_curvature(g, 0, 2), std::invalid_argument);  // not an edge
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(lly_curvature(star, 0, 1), std::invalid_argument);  // not regular
}

TEST_CASE("wasserstein input validation") {
  Graph g = cycle(5);
  LocalMeasure half;
  half.mass[0] = Rational(1, 2);
  LocalMeasure one;
  one.mass[0] = Rational(1);
  CHECK_THROWS_AS(wasserstein(g, half, one), std::invalid_argument);

  LocalMeasure neg;
  neg.mass[0] = Rational(3, 2);
  neg.mass[1] = Rational(-1, 2);
  CHECK_THROWS_AS(wasserstein(g, neg, one), std::invalid_argument);

  Graph split(4, {{0, 1}, {2, 3}});
  LocalMeasure left = LocalMeasure::mu_p(split, 0, Rational(1, 2));
  LocalMeasure right = LocalMeasure::mu_p(split, 2, Rational(1, 2));
  CHECK_THROWS_AS(wasserstein(split, left, right), std::invalid_argument);
}

TEST_CASE("transport plans validate their marginals") {
  Graph p3(3, {{0, 1}, {1, 2}});
  TransportPlan plan;
  plan.source.mass[0] = Rational(1);
  plan.target.mass[2] = Rational(1);
  plan.entries[{0, 2}] = Rational(1);
  CHECK(plan.valid());
  CHECK(plan.cost(p3) == Rational(2));

  plan.entries[{0, 2}] = Rational(1, 2);
  CHECK_FALSE(plan.valid());
}

static void check_matching_shape(const Graph& g, int x, int y,
                                 const std::vector<std::pair<int, int>>& matching) {
  LocalEdgeStructure s = local_edge_structure(g, x, y);
  std::set<int> ox(s.only_x.begin(), s.only_x.end());
  std::set<int> oy(s.only_y.begin(), s.only_y.end());
  CHECK(matching.size() == ox.size());
  std::set<int> used_left, used_right;
  for (auto [u, v] : matching) {
    CHECK(ox.count(u));
    CHECK(oy.count(v));
    CHECK(g.has_edge(u, v));
    CHECK(used_left.insert(u).second);
    CHECK(used_right.insert(v).second);
  }
}

TEST_CASE("matching characterization") {
  Graph q3 = hypercube(3);
  auto mc = matching_characterization(q3, 0, 1);
  CHECK(mc.attains_upper_bound);
  REQUIRE(mc.matching.has_value());
  check_matching_shape(q3, 0, 1, *mc.matching);

  Graph h = hamming(2, 3);
  auto [hx, hy] = h.edges()[0];
  auto mch = matching_characterization(h, hx, hy);
  CHECK(mch.attains_upper_bound);
  CHECK(lly_curvature(h, hx, hy) == Rational(3, 4));

  Graph c5 = cycle(5);
  auto mc5 = matching_characterization(c5, 0, 1);
  CHECK_FALSE(mc5.attains_upper_bound);
  REQUIRE(mc5.hall_violator.has_value());
  // the violator really violates Hall's condition
  LocalEdgeStructure s = local_edge_structure(c5, 0, 1);
  std::set<int> ox(s.only_x.begin(), s.only_x.end());
  std::set<int> oy(s.only_y.begin(), s.only_y.end());
  std::set<int> reach;
  for (int u : *mc5.hall_violator) {
    CHECK(ox.count(u));
    for (int w : c5.neighbors(u))
      if (oy.count(w)) reach.insert(w);
  }
  CHECK(reach.size() < mc5.hall_violator->size());
}

TEST_CASE("auxiliary multigraph structure") {
  // johnson(5,2): alpha = 3, beta = 4, so the multigraph is 3-regular with
  // one identity unit above each common vertex
  Graph j = johnson(5, 2);
  auto det = detect_arg(j);
  REQUIRE(det.params);
  auto [x, y] = j.edges()[0];
  BipartiteMultigraph hg = build_hg(j, x, y, *det.params);
  CHECK(hg.side() == det.params->d - 1);
  CHECK(hg.left_outer == det.params->d - 1 - det.params->alpha);
  CHECK(hg.is_regular(det.params->beta - 1));
  CHECK(hg.identity_units() == det.params->alpha * (det.params->beta - det.params->alpha));

  auto matchings = konig_decompose(hg);
  CHECK(matchings.size() == 3);
  int total_identity = 0;
  for (const auto& m : matchings) {
    CHECK(m.pairs.size() == static_cast<size_t>(hg.side()));
    std::set<int> l, r;
    for (auto [a, b] : m.pairs) {
      CHECK(l.insert(a).second);
      CHECK(r.insert(b).second);
      if (hg.cls[a][b] == HgClass::identity) ++total_identity;
    }
  }
  CHECK(total_identity == hg.identity_units());

  // hypercubes: 1-regular, a single matching, no identity units
  Graph q3 = hypercube(3);
  auto qdet = detect_arg(q3);
  BipartiteMultigraph qh = build_hg(q3, 0, 1, *qdet.params);
  CHECK(qh.is_regular(1));
  CHECK(qh.identity_units() == 0);
  CHECK(konig_decompose(qh).size() == 1);

  // K_{3,3}: 2-regular on two outer vertices a side
  Graph k33 = complete_bipartite(3, 3);
  auto kdet = detect_arg(k33);
  auto [kx, ky] = k33.edges()[0];
  BipartiteMultigraph kh = build_hg(k33, kx, ky, *kdet.params);
  CHECK(kh.is_regular(2));
  CHECK(konig_decompose(kh).size() == 2);

  // beta = 1 is outside the construction's hypothesis
  Graph p = petersen();
  auto pdet = detect_arg(p);
  REQUIRE(pdet.params);
  CHECK_THROWS_AS(build_hg(p, 0, 1, *pdet.params), std::invalid_argument);
}

TEST_CASE("certified lower bounds are tight on matched families") {
  auto run = [](const Graph& g) {
    auto det = detect_arg(g);
    REQUIRE(det.params);
    auto [x, y] = g.edges()[0];
    CertifiedBound cb = certified_lower_bound(g, x, y, *det.params);
    CHECK(cb.plan.valid());
    CHECK(cb.identity_units >=
          ceil_div(static_cast<long long>(det.params->alpha) *
                       (det.params->beta - det.params->alpha),
                   det.params->beta - 1));
    CHECK(cb.bound == Rational(2 + cb.identity_units, det.params->d));
    CHECK(cb.bound <= lly_curvature(g, x, y));
    return cb;
  };

  for (int d = 3; d <= 4; ++d) {
    auto cb = run(hypercube(d));
    CHECK(cb.identity_units == 0);
    CHECK(cb.bound == Rational(2, d));  // equals the curvature
  }
  {
    auto cb = run(hamming(2, 3));
    CHECK(cb.identity_units == 1);
    CHECK(cb.bound == Rational(3, 4));  // tight
  }
  {
    auto cb = run(complete_bipartite(2, 2));
    CHECK(cb.bound == Rational(1));  // tight: C4 is the 2-cube
  }
  {
    auto cb = run(johnson(5, 2));
    CHECK(cb.identity_units >= 1);
  }

  auto pdet = detect_arg(petersen());
  CHECK_THROWS_AS(certified_lower_bound(petersen(), 0, 1, *pdet.params), std::invalid_argument);
}
