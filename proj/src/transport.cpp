#include "argcurv/transport.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace argcurv {

Rational LocalMeasure::total() const {
  Rational t;
  for (const auto& [v, m] : mass) t += m;
  return t;
}

LocalMeasure LocalMeasure::mu_p(const Graph& g, int x, const Rational& p) {
  if (p < Rational(0) || p > Rational(1)) throw std::invalid_argument("p outside [0,1]");
  if (x < 0 || x >= g.vertex_count()) throw std::out_of_range("measure center");
  LocalMeasure mu;
  if (p != Rational(0)) mu.mass[x] = p;
  if (p != Rational(1)) {
    int d = g.degree(x);
    if (d == 0) throw std::invalid_argument("mu_p at isolated vertex with p < 1");
    Rational share = (Rational(1) - p) / Rational(d);
    for (int w : g.neighbors(x)) mu.mass[w] += share;
  }
  return mu;
}

bool TransportPlan::valid() const {
  std::map<int, Rational> row, col;
  for (const auto& [uv, m] : entries) {
    if (m < Rational(0)) return false;
    row[uv.first] += m;
    col[uv.second] += m;
  }
  auto matches = [](const std::map<int, Rational>& got, const LocalMeasure& want) {
    std::map<int, Rational> expect;
    for (const auto& [v, m] : want.mass)
      if (m != Rational(0)) expect[v] = m;
    return got == expect;
  };
  return matches(row, source) && matches(col, target);
}

Rational TransportPlan::cost(const Graph& g) const {
  Rational c;
  for (const auto& [uv, m] : entries) {
    int d = g.distance(uv.first, uv.second);
    if (d == Graph::kUnreachable) throw std::invalid_argument("plan moves mass across components");
    c += m * Rational(d);
  }
  return c;
}

bool WassersteinResult::certifies_optimality(const Graph& g) const {
  if (!plan.valid()) return false;
  // dual feasibility on every support pair, complementary slackness on the plan
  for (const auto& [u, pu] : potential_source) {
    for (const auto& [v, pv] : potential_target) {
      Rational slack = Rational(g.distance(u, v)) - pu + pv;
      if (slack < Rational(0)) return false;
      auto it = plan.entries.find({u, v});
      if (it != plan.entries.end() && it->second > Rational(0) && slack != Rational(0))
        return false;
    }
  }
  return plan.cost(g) == value;
}

WassersteinResult wasserstein(const Graph& g, const LocalMeasure& mu1, const LocalMeasure& mu2) {
  if (mu1.total() != Rational(1) || mu2.total() != Rational(1))
    throw std::invalid_argument("wasserstein needs probability measures");

  std::vector<int> sup1, sup2;
  std::vector<Rational> m1, m2;
  for (const auto& [v, m] : mu1.mass) {
    if (m < Rational(0)) throw std::invalid_argument("negative mass");
    if (m != Rational(0)) { sup1.push_back(v); m1.push_back(m); }
  }
  for (const auto& [v, m] : mu2.mass) {
    if (m < Rational(0)) throw std::invalid_argument("negative mass");
    if (m != Rational(0)) { sup2.push_back(v); m2.push_back(m); }
  }
  int L = static_cast<int>(sup1.size());
  int R = static_cast<int>(sup2.size());

  std::vector<std::vector<long long>> cost(L, std::vector<long long>(R));
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < R; ++j) {
      int d = g.distance(sup1[i], sup2[j]);
      if (d == Graph::kUnreachable)
        throw std::invalid_argument("measure supports lie in different components");
      cost[i][j] = d;
    }

  long long scale = 1;
  for (const auto& m : m1) scale = std::lcm(scale, m.den());
  for (const auto& m : m2) scale = std::lcm(scale, m.den());

  std::vector<long long> supply(L), demand(R);
  for (int i = 0; i < L; ++i) supply[i] = m1[i].num() * (scale / m1[i].den());
  for (int j = 0; j < R; ++j) demand[j] = m2[j].num() * (scale / m2[j].den());

  // successive shortest augmenting paths. The residual graph carries negative
  // backward arcs, so paths are found by Bellman-Ford; supports are tiny
  // (at most degree + 1 per side), which keeps this exact and cheap.
  const long long INF = std::numeric_limits<long long>::max() / 4;
  int nodes = L + R;
  std::vector<std::vector<long long>> flow(L, std::vector<long long>(R, 0));
  long long remaining = 0;
  for (long long s : supply) remaining += s;

  // shortest residual distances from the sources with remaining supply (or
  // from everywhere at once when `from_everywhere`, used for the final duals)
  auto residual_distances = [&](std::vector<long long>& dist, std::vector<int>& prev,
                                bool from_everywhere) {
    dist.assign(nodes, INF);
    prev.assign(nodes, -1);
    if (from_everywhere) {
      dist.assign(nodes, 0);
    } else {
      for (int i = 0; i < L; ++i)
        if (supply[i] > 0) dist[i] = 0;
    }
    for (int round = 0; round < nodes; ++round) {
      bool changed = false;
      for (int i = 0; i < L; ++i) {
        if (dist[i] == INF) continue;
        for (int j = 0; j < R; ++j)
          if (dist[i] + cost[i][j] < dist[L + j]) {
            dist[L + j] = dist[i] + cost[i][j];
            prev[L + j] = i;
            changed = true;
          }
      }
      for (int j = 0; j < R; ++j) {
        if (dist[L + j] == INF) continue;
        for (int i = 0; i < L; ++i)
          if (flow[i][j] > 0 && dist[L + j] - cost[i][j] < dist[i]) {
            dist[i] = dist[L + j] - cost[i][j];
            prev[i] = L + j;
            changed = true;
          }
      }
      if (!changed) return true;
    }
    return false;  // still relaxing: a negative residual cycle
  };

  std::vector<long long> dist;
  std::vector<int> prev;
  while (remaining > 0) {
    if (!residual_distances(dist, prev, false))
      throw std::runtime_error("negative cycle in transport residual graph");

    int target = -1;
    for (int j = 0; j < R; ++j)
      if (demand[j] > 0 && dist[L + j] < INF && (target == -1 || dist[L + j] < dist[L + target]))
        target = j;
    if (target == -1) throw std::runtime_error("transportation problem infeasible");

    // walk back to a source, collecting the bottleneck
    std::vector<int> path;  // nodes target..source
    for (int u = L + target; u != -1; u = prev[u]) path.push_back(u);
    long long delta = std::min(demand[target], supply[path.back()]);
    for (size_t k = 0; k + 1 < path.size(); ++k) {
      int to = path[k], from = path[k + 1];
      if (from >= L && to < L) delta = std::min(delta, flow[to][from - L]);
    }
    for (size_t k = 0; k + 1 < path.size(); ++k) {
      int to = path[k], from = path[k + 1];
      if (from < L && to >= L) flow[from][to - L] += delta;
      else flow[to][from - L] -= delta;
    }
    supply[path.back()] -= delta;
    demand[target] -= delta;
    remaining -= delta;
  }

  // dual certificate: distances over the final residual graph are feasible
  // potentials, with complementary slackness on every flow-carrying arc
  std::vector<long long> pot(nodes, 0);
  {
    std::vector<int> ignore;
    if (!residual_distances(pot, ignore, true))
      throw std::runtime_error("final transport plan is not optimal");
    for (auto& v : pot) v = -v;
  }

  WassersteinResult out;
  long long total_cost = 0;
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < R; ++j)
      if (flow[i][j] > 0) {
        total_cost += flow[i][j] * cost[i][j];
        out.plan.entries[{sup1[i], sup2[j]}] = Rational(flow[i][j], scale);
      }
  out.value = Rational(total_cost, scale);
  out.plan.source = mu1;
  out.plan.target = mu2;
  for (int i = 0; i < L; ++i) out.potential_source[sup1[i]] = Rational(pot[i]);
  for (int j = 0; j < R; ++j) out.potential_target[sup2[j]] = Rational(pot[L + j]);
  return out;
}

Rational ollivier_p(const Graph& g, int x, int y, const Rational& p) {
  if (x == y) throw std::invalid_argument("ollivier_p needs distinct vertices");
  int dxy = g.distance(x, y);
  if (dxy == Graph::kUnreachable)
    throw std::invalid_argument("ollivier_p across components");
  auto w = wasserstein(g, LocalMeasure::mu_p(g, x, p), LocalMeasure::mu_p(g, y, p));
  return Rational(1) - w.value / Rational(dxy);
}

Rational lly_curvature(const Graph& g, int x, int y) {
  auto d = g.regular_degree();
  if (!d) throw std::invalid_argument("lly_curvature needs a regular graph");
  if (!g.has_edge(x, y)) throw std::invalid_argument("lly_curvature needs an edge");
  Rational kappa = Rational(2) * ollivier_p(g, x, y, Rational(1, 2));
  // limit-free identity: the same value must come out of p = 1/(d+1)
  Rational alt = Rational(*d + 1, *d) * ollivier_p(g, x, y, Rational(1, *d + 1));
  if (kappa != alt)
    throw std::runtime_error("limit-free curvature identity violated (internal error)");
  return kappa;
}

namespace {

// Hopcroft-Karp maximum matching; adjacency lists must be sorted for
// deterministic output. Returns match_l (right partner or -1).
struct HopcroftKarp {
  int nl, nr;
  const std::vector<std::vector<int>>& adj;
  std::vector<int> match_l, match_r, level;

  HopcroftKarp(int nl_, int nr_, const std::vector<std::vector<int>>& adj_)
      : nl(nl_), nr(nr_), adj(adj_), match_l(nl_, -1), match_r(nr_, -1) {}

  bool bfs() {
    level.assign(nl, -1);
    std::queue<int> q;
    for (int u = 0; u < nl; ++u)
      if (match_l[u] == -1) { level[u] = 0; q.push(u); }
    bool found = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int w = match_r[v];
        if (w == -1) found = true;
        else if (level[w] == -1) { level[w] = level[u] + 1; q.push(w); }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : adj[u]) {
      int w = match_r[v];
      if (w == -1 || (level[w] == level[u] + 1 && dfs(w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    level[u] = -1;
    return false;
  }

  int run() {
    int size = 0;
    while (bfs())
      for (int u = 0; u < nl; ++u)
        if (match_l[u] == -1 && dfs(u)) ++size;
    return size;
  }

  // left vertices reachable from free left vertices by alternating paths;
  // a Hall violator when the matching is not perfect
  std::vector<int> hall_violator() const {
    std::vector<char> seen_l(nl, false), seen_r(nr, false);
    std::queue<int> q;
    for (int u = 0; u < nl; ++u)
      if (match_l[u] == -1) { seen_l[u] = true; q.push(u); }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (seen_r[v]) continue;
        seen_r[v] = true;
        int w = match_r[v];
        if (w != -1 && !seen_l[w]) { seen_l[w] = true; q.push(w); }
      }
    }
    std::vector<int> out;
    for (int u = 0; u < nl; ++u)
      if (seen_l[u]) out.push_back(u);
    return out;
  }
};

}  // namespace

MatchingCharacterization matching_characterization(const Graph& g, int x, int y) {
  auto d = g.regular_degree();
  if (!d) throw std::invalid_argument("matching_characterization needs a regular graph");
  auto ls = local_edge_structure(g, x, y);
  int nl = static_cast<int>(ls.only_x.size());
  int nr = static_cast<int>(ls.only_y.size());

  std::vector<std::vector<int>> adj(nl);
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j)
      if (g.has_edge(ls.only_x[i], ls.only_y[j])) adj[i].push_back(j);

  HopcroftKarp hk(nl, nr, adj);
  bool perfect = hk.run() == nl;

  Rational kappa = lly_curvature(g, x, y);
  Rational upper(2 + static_cast<long long>(ls.common.size()), *d);
  if (kappa > upper)
    throw std::runtime_error("curvature exceeds its matching upper bound (internal error)");
  bool attained = kappa == upper;
  if (attained != perfect)
    throw std::runtime_error("matching characterisation disagreement (internal error)");

  MatchingCharacterization out;
  out.attains_upper_bound = attained;
  if (perfect) {
    std::vector<std::pair<int, int>> m;
    for (int i = 0; i < nl; ++i)
      if (hk.match_l[i] != -1) m.emplace_back(ls.only_x[i], ls.only_y[hk.match_l[i]]);
    out.matching = std::move(m);
  } else {
    std::vector<int> viol;
    for (int i : hk.hall_violator()) viol.push_back(ls.only_x[i]);
    out.hall_violator = std::move(viol);
  }
  return out;
}

bool BipartiteMultigraph::is_regular(int k) const {
  int nl = side();
  for (int i = 0; i < nl; ++i) {
    int row = 0;
    for (int j = 0; j < nl; ++j) row += mult[i][j];
    if (row != k) return false;
  }
  for (int j = 0; j < nl; ++j) {
    int col = 0;
    for (int i = 0; i < nl; ++i) col += mult[i][j];
    if (col != k) return false;
  }
  return true;
}

int BipartiteMultigraph::identity_units() const {
  int total = 0;
  for (int i = 0; i < side(); ++i)
    for (int j = 0; j < side(); ++j)
      if (mult[i][j] > 0 && cls[i][j] == HgClass::identity) total += mult[i][j];
  return total;
}

BipartiteMultigraph build_hg(const Graph& g, int x, int y, const ArgParams& params) {
  if (params.beta == 1 || params.beta < params.alpha)
    throw std::invalid_argument("auxiliary multigraph needs 1 != beta >= alpha");
  if (!g.has_edge(x, y)) throw std::invalid_argument("build_hg needs an edge");
  auto ls = local_edge_structure(g, x, y);
  int a = static_cast<int>(ls.common.size());

  BipartiteMultigraph h;
  h.left = ls.only_x;
  h.left.insert(h.left.end(), ls.common.begin(), ls.common.end());
  h.right = ls.only_y;
  h.right.insert(h.right.end(), ls.common.begin(), ls.common.end());
  h.left_outer = static_cast<int>(ls.only_x.size());
  h.right_outer = static_cast<int>(ls.only_y.size());
  int side = h.side();
  h.mult.assign(side, std::vector<int>(side, 0));
  h.cls.assign(side, std::vector<HgClass>(side, HgClass::outer_outer));

  auto put = [&](int i, int j, int units, HgClass c) {
    h.mult[i][j] = units;
    h.cls[i][j] = c;
  };
  for (int i = 0; i < h.left_outer; ++i)
    for (int j = 0; j < h.right_outer; ++j)
      if (g.has_edge(h.left[i], h.right[j])) put(i, j, 1, HgClass::outer_outer);
  for (int i = 0; i < h.left_outer; ++i)
    for (int j = 0; j < a; ++j)
      if (g.has_edge(h.left[i], ls.common[j]))
        put(i, h.right_outer + j, 1, HgClass::outer_mirror);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < h.right_outer; ++j)
      if (g.has_edge(ls.common[i], h.right[j])) put(h.left_outer + i, j, 1, HgClass::common_outer);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j)
      if (i != j && g.has_edge(ls.common[i], ls.common[j]))
        put(h.left_outer + i, h.right_outer + j, 1, HgClass::common_mirror);
  for (int i = 0; i < a; ++i)
    put(h.left_outer + i, h.right_outer + i, params.beta - params.alpha, HgClass::identity);

  if (!h.is_regular(params.beta - 1))
    throw std::runtime_error("auxiliary multigraph is not (beta-1)-regular (internal error)");
  return h;
}

std::vector<HgMatching> konig_decompose(const BipartiteMultigraph& h) {
  int side = h.side();
  int k = 0;
  for (int j = 0; j < side; ++j) k += h.mult[0][j];
  if (!h.is_regular(k)) throw std::invalid_argument("konig_decompose needs a regular multigraph");

  auto residual = h.mult;
  std::vector<HgMatching> out;
  for (int round = 0; round < k; ++round) {
    std::vector<int> match_r(side, -1), match_l(side, -1);
    // Kuhn's augmenting paths, lowest index first
    std::vector<char> visited;
    std::function<bool(int)> augment = [&](int u) -> bool {
      for (int v = 0; v < side; ++v) {
        if (residual[u][v] <= 0 || visited[v]) continue;
        visited[v] = true;
        if (match_r[v] == -1 || augment(match_r[v])) {
          match_r[v] = u;
          match_l[u] = v;
          return true;
        }
      }
      return false;
    };
    for (int u = 0; u < side; ++u) {
      visited.assign(side, false);
      if (!augment(u))
        throw std::runtime_error("regular bipartite multigraph without perfect matching");
    }
    HgMatching m;
    for (int u = 0; u < side; ++u) {
      m.pairs.emplace_back(u, match_l[u]);
      residual[u][match_l[u]] -= 1;
    }
    out.push_back(std::move(m));
  }
  return out;
}

CertifiedBound certified_lower_bound(const Graph& g, int x, int y, const ArgParams& params) {
  auto h = build_hg(g, x, y, params);
  auto matchings = konig_decompose(h);

  auto identity_count = [&](const HgMatching& m) {
    int c = 0;
    for (auto [u, v] : m.pairs)
      if (h.cls[u][v] == HgClass::identity && h.mult[u][v] > 0) ++c;
    return c;
  };
  int best = 0;
  for (size_t i = 1; i < matchings.size(); ++i)
    if (identity_count(matchings[i]) > identity_count(matchings[best])) best = static_cast<int>(i);

  CertifiedBound out;
  out.matching = matchings[best];
  out.identity_units = identity_count(matchings[best]);

  long long pigeonhole =
      ceil_div(static_cast<long long>(params.alpha) * (params.beta - params.alpha),
               params.beta - 1);
  if (out.identity_units < pigeonhole)
    throw std::runtime_error("best matching misses the pigeonhole floor (internal error)");

  int d = params.d;
  Rational unit(1, d + 1);
  TransportPlan plan;
  plan.source = LocalMeasure::mu_p(g, x, Rational(1, d + 1));
  plan.target = LocalMeasure::mu_p(g, y, Rational(1, d + 1));
  plan.entries[{x, x}] += unit;
  plan.entries[{y, y}] += unit;
  for (auto [u, v] : out.matching.pairs)
    plan.entries[{h.left[u], h.right[v]}] += unit;
  if (!plan.valid())
    throw std::runtime_error("matching-induced plan has wrong marginals (internal error)");

  Rational bound = Rational(d + 1, d) * (Rational(1) - plan.cost(g));
  if (bound != Rational(2 + out.identity_units, d))
    throw std::runtime_error("certified bound disagrees with matching count (internal error)");
  out.bound = bound;
  out.plan = std::move(plan);

  if (lly_curvature(g, x, y) < out.bound)
    throw std::runtime_error("certified bound exceeds the exact curvature (internal error)");
  return out;
}

}  // namespace argcurv
