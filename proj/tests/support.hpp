#pragma once

// shared test fixtures: the named graph corpus, a seeded random-regular-graph
// generator, and a brute-force transportation oracle

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "argcurv/families.hpp"
#include "argcurv/graph.hpp"

namespace testsupport {

struct CorpusEntry {
  std::string name;
  argcurv::Graph g;
};

inline std::vector<CorpusEntry> full_corpus() {
  using namespace argcurv;
  std::vector<CorpusEntry> out;
  for (int d = 3; d <= 6; ++d)
    out.push_back({"hypercube(" + std::to_string(d) + ")", hypercube(d)});
  out.push_back({"hamming(2,3)", hamming(2, 3)});
  out.push_back({"shrikhande", shrikhande()});
  out.push_back({"rook(4)", rook(4)});
  out.push_back({"icosahedron", icosahedron()});
  out.push_back({"petersen", petersen()});
  out.push_back({"cycle(5)", cycle(5)});
  out.push_back({"cycle(6)", cycle(6)});
  out.push_back({"complete_bipartite(3,3)", complete_bipartite(3, 3)});
  out.push_back({"johnson(8,4)", johnson(8, 4)});
  return out;
}

// circulant base randomized by degree-preserving double-edge swaps; unlike
// the pairing model this cannot fail on small dense parameter choices
inline argcurv::Graph random_regular_graph(int n, int d, std::mt19937_64& rng) {
  if (n * d % 2 != 0 || d < 0 || d >= n)
    throw std::invalid_argument("bad regular graph parameters");
  std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
  std::vector<std::pair<int, int>> edges;
  auto add = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    seen[u][v] = seen[v][u] = 1;
    edges.emplace_back(u, v);
  };
  for (int k = 1; k <= d / 2; ++k)
    for (int v = 0; v < n; ++v) add(v, (v + k) % n);
  if (d % 2 == 1)  // n is even here, add the antipodal matching
    for (int v = 0; v < n / 2; ++v) add(v, v + n / 2);

  const size_t m = edges.size();
  long long done = 0, want = 20LL * static_cast<long long>(m);
  for (long long it = 0; it < 200 * want && done < want; ++it) {
    auto& e1 = edges[rng() % m];
    auto& e2 = edges[rng() % m];
    int a = e1.first, b = e1.second, c = e2.first, e = e2.second;
    if (rng() & 1) std::swap(c, e);
    if (a == c || a == e || b == c || b == e) continue;
    if (seen[a][c] || seen[b][e]) continue;
    seen[a][b] = seen[b][a] = seen[c][e] = seen[e][c] = 0;
    seen[a][c] = seen[c][a] = seen[b][e] = seen[e][b] = 1;
    e1 = {std::min(a, c), std::max(a, c)};
    e2 = {std::min(b, e), std::max(b, e)};
    ++done;
  }
  return argcurv::Graph(n, edges);
}

// brute force: minimum cost over every nonnegative integer matrix with the
// given row and column sums; returns -1 when no plan exists
inline long long exhaustive_transport_cost(const std::vector<long long>& rows,
                                           const std::vector<long long>& cols,
                                           const std::vector<std::vector<long long>>& cost) {
  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(cols.size());
  std::vector<long long> r = rows, c = cols;
  long long best = -1;
  std::function<void(int, long long)> rec = [&](int cell, long long acc) {
    if (best >= 0 && acc >= best) return;
    if (cell == nr * nc) {
      for (int i = 0; i < nr; ++i)
        if (r[i] != 0) return;
      for (int j = 0; j < nc; ++j)
        if (c[j] != 0) return;
      best = acc;
      return;
    }
    int i = cell / nc, j = cell % nc;
    long long lo = 0, hi = std::min(r[i], c[j]);
    if (j == nc - 1) {
      // row must close out here
      if (r[i] > c[j]) return;
      lo = hi = r[i];
    }
    for (long long f = lo; f <= hi; ++f) {
      r[i] -= f;
      c[j] -= f;
      rec(cell + 1, acc + f * cost[i][j]);
      r[i] += f;
      c[j] += f;
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace testsupport
