#include "argcurv/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace argcurv {

Graph::Graph() : n_(0), cache_(std::make_shared<DistCache>()) {}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), adj_(n), edges_(std::move(edges)), cache_(std::make_shared<DistCache>()) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::optional<int> Graph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  int d = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

int Graph::distance(int u, int v) const {
  return distance_matrix().at(u).at(v);
}

const std::vector<std::vector<int>>& Graph::distance_matrix() const {
  std::call_once(cache_->once, [this] {
    cache_->dist.resize(n_);
    for (int v = 0; v < n_; ++v) cache_->dist[v] = bfs_distances(*this, v);
  });
  return cache_->dist;
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  auto d = bfs_distances(*this, 0);
  return std::find(d.begin(), d.end(), kUnreachable) == d.end();
}

std::optional<std::vector<int>> Graph::bipartite_classes() const {
  std::vector<int> colour(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj_[u]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          q.push(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.vertex_count()) throw std::out_of_range("bfs source");
  std::vector<int> dist(g.vertex_count(), Graph::kUnreachable);
  dist[source] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (dist[w] == Graph::kUnreachable) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

int diameter(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("diameter of empty graph");
  if (!g.is_connected()) throw std::invalid_argument("diameter of disconnected graph");
  int best = 0;
  const auto& dm = g.distance_matrix();
  for (const auto& row : dm)
    for (int d : row) best = std::max(best, d);
  return best;
}

SphereDecomposition sphere_decomposition(const Graph& g, int center) {
  auto dist = bfs_distances(g, center);
  int ecc = 0;
  for (int d : dist) ecc = std::max(ecc, d);
  SphereDecomposition out;
  out.center = center;
  out.spheres.assign(ecc + 1, {});
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] != Graph::kUnreachable) out.spheres[dist[v]].push_back(v);
  return out;
}

namespace {

int common_neighbor_count(const Graph& g, int u, int v) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  int count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) ++ia;
    else if (*ib < *ia) ++ib;
    else { ++count; ++ia; ++ib; }
  }
  return count;
}

}  // namespace

ArgDetection detect_arg(const Graph& g) {
  ArgDetection out;
  int n = g.vertex_count();
  if (n == 0) {
    out.reason = "empty graph";
    return out;
  }
  if (!g.is_connected()) {
    out.reason = "disconnected graph";
    return out;
  }
  if (g.edge_count() == n * (n - 1) / 2) {
    out.reason = "complete graph";
    return out;
  }
  int d = g.degree(0);
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) != d) {
      out.reason = "not regular";
      out.witness = {0, v};
      return out;
    }
  }
  const auto& dm = g.distance_matrix();
  int alpha = -1, beta = -1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (dm[u][v] == 1) {
        int c = common_neighbor_count(g, u, v);
        if (alpha == -1) alpha = c;
        else if (c != alpha) {
          out.reason = "adjacent pairs disagree on common neighbour count";
          out.witness = {u, v};
          return out;
        }
      } else if (dm[u][v] == 2) {
        int c = common_neighbor_count(g, u, v);
        if (beta == -1) beta = c;
        else if (c != beta) {
          out.reason = "distance-2 pairs disagree on common neighbour count";
          out.witness = {u, v};
          return out;
        }
      }
    }
  }
  // connected and non-complete, so both pair kinds exist
  out.params = ArgParams{n, d, alpha, beta};
  return out;
}

LocalEdgeStructure local_edge_structure(const Graph& g, int x, int y) {
  if (!g.has_edge(x, y)) throw std::invalid_argument("local_edge_structure needs an edge");
  LocalEdgeStructure out;
  for (int v : g.neighbors(x)) {
    if (v == y) continue;
    if (g.has_edge(v, y)) out.common.push_back(v);
    else out.only_x.push_back(v);
  }
  for (int w : g.neighbors(y)) {
    if (w == x) continue;
    if (!g.has_edge(w, x)) out.only_y.push_back(w);
  }
  return out;
}

std::pair<Graph, std::vector<int>> local_graph(const Graph& g, int x) {
  std::vector<int> verts = g.neighbors(x);
  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) pos[verts[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    for (int w : g.neighbors(verts[i]))
      if (pos[w] > i) edges.emplace_back(i, pos[w]);
  return {Graph(static_cast<int>(verts.size()), std::move(edges)), std::move(verts)};
}

}  // namespace argcurv
