#include "argcurv/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace argcurv {

Graph hypercube(int d) {
  if (d < 1) throw std::invalid_argument("hypercube needs d >= 1");
  if (d > 20) throw std::invalid_argument("hypercube dimension too large");
  int n = 1 << d;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
  return Graph(n, std::move(edges));
}

Graph hamming(int n, int q) {
  if (n < 1 || q < 2) throw std::invalid_argument("hamming needs n >= 1, q >= 2");
  long long size = 1;
  for (int i = 0; i < n; ++i) {
    size *= q;
    if (size > 100000) throw std::invalid_argument("hamming graph too large");
  }
  int total = static_cast<int>(size);
  // vertex v encodes the word (v % q, v/q % q, ...), lowest coordinate first
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < total; ++v) {
    int base = 1;
    for (int coord = 0; coord < n; ++coord) {
      int digit = (v / base) % q;
      for (int other = digit + 1; other < q; ++other)
        edges.emplace_back(v, v + (other - digit) * base);
      base *= q;
    }
  }
  return Graph(total, std::move(edges));
}

namespace {

// All k-subsets of {0..n-1} in colexicographic order: compare largest
// elements first, so e.g. {0,1} < {0,2} < {1,2} < {0,3} < ...
std::vector<std::vector<int>> colex_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = 0;
    while (i < k) {
      int limit = (i + 1 < k) ? cur[i + 1] : n;
      if (cur[i] + 1 < limit) break;
      ++i;
    }
    if (i == k) break;
    ++cur[i];
    for (int j = 0; j < i; ++j) cur[j] = j;
  }
  return out;
}

}  // namespace

Graph johnson(int n, int k) {
  if (k < 1 || n < 2 * k) throw std::invalid_argument("johnson needs n >= 2k >= 2");
  auto subsets = colex_subsets(n, k);
  int total = static_cast<int>(subsets.size());
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < total; ++a) {
    for (int b = a + 1; b < total; ++b) {
      int inter = 0;
      auto ia = subsets[a].begin();
      auto ib = subsets[b].begin();
      while (ia != subsets[a].end() && ib != subsets[b].end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++inter; ++ia; ++ib; }
      }
      if (inter == k - 1) edges.emplace_back(a, b);
    }
  }
  return Graph(total, std::move(edges));
}

Graph rook(int m) {
  if (m < 2) throw std::invalid_argument("rook needs m >= 2");
  std::vector<std::pair<int, int>> edges;
  auto id = [m](int r, int c) { return r * m + c; };
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      for (int c2 = c + 1; c2 < m; ++c2) edges.emplace_back(id(r, c), id(r, c2));
      for (int r2 = r + 1; r2 < m; ++r2) edges.emplace_back(id(r, c), id(r2, c));
    }
  return Graph(m * m, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite needs a, b >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, std::move(edges));
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer pentagon
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, std::move(edges));
}

Graph shrikhande() {
  const std::pair<int, int> gens[] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (auto [da, db] : gens) {
        int u = 4 * a + b;
        int v = 4 * ((a + da) % 4) + (b + db) % 4;
        if (u < v) edges.emplace_back(u, v);
      }
  return Graph(16, std::move(edges));
}

Graph icosahedron() {
  // apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(0, 1 + i);
    edges.emplace_back(1 + i, 1 + (i + 1) % 5);
    edges.emplace_back(6 + i, 6 + (i + 1) % 5);
    edges.emplace_back(1 + i, 6 + i);
    edges.emplace_back(1 + i, 6 + (i + 4) % 5);
    edges.emplace_back(11, 6 + i);
  }
  return Graph(12, std::move(edges));
}

Graph generate(const std::string& family, const std::vector<int>& params) {
  auto need = [&](size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family '" + family + "' expects " + std::to_string(k) +
                                  " parameter(s), got " + std::to_string(params.size()));
  };
  if (family == "hypercube") { need(1); return hypercube(params[0]); }
  if (family == "hamming") { need(2); return hamming(params[0], params[1]); }
  if (family == "johnson") { need(2); return johnson(params[0], params[1]); }
  if (family == "rook") { need(1); return rook(params[0]); }
  if (family == "cycle") { need(1); return cycle(params[0]); }
  if (family == "complete") { need(1); return complete(params[0]); }
  if (family == "complete-bipartite") { need(2); return complete_bipartite(params[0], params[1]); }
  if (family == "petersen") { need(0); return petersen(); }
  if (family == "shrikhande") { need(0); return shrikhande(); }
  if (family == "icosahedron") { need(0); return icosahedron(); }
  throw std::invalid_argument("unknown family '" + family + "'");
}

std::vector<std::pair<std::string, int>> family_catalog() {
  return {{"hypercube", 1}, {"hamming", 2},   {"johnson", 2},
          {"rook", 1},      {"cycle", 1},     {"complete", 1},
          {"complete-bipartite", 2},          {"petersen", 0},
          {"shrikhande", 0},                  {"icosahedron", 0}};
}

}  // namespace argcurv
