#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace argcurv {

// Finite simple undirected graph. Immutable after construction; neighbor
// lists are kept sorted and the all-pairs BFS distance table is computed
// lazily and shared between copies, so concurrent queries are safe.
class Graph {
 public:
  static constexpr int kUnreachable = -1;

  Graph();
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  // Position of {u,v} in the sorted edge list, -1 if absent.
  int edge_index(int u, int v) const;

  // Degree if all vertices share one, nullopt otherwise.
  std::optional<int> regular_degree() const;

  // Distance, kUnreachable when in different components.
  int distance(int u, int v) const;
  const std::vector<std::vector<int>>& distance_matrix() const;

  bool is_connected() const;
  // 0/1 colouring when bipartite.
  std::optional<std::vector<int>> bipartite_classes() const;

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;

  struct DistCache {
    std::once_flag once;
    std::vector<std::vector<int>> dist;
  };
  std::shared_ptr<DistCache> cache_;
};

// Single-source BFS distances; kUnreachable marks other components.
std::vector<int> bfs_distances(const Graph& g, int source);

// Largest finite distance. Throws on disconnected or empty input.
int diameter(const Graph& g);

struct SphereDecomposition {
  int center;
  // spheres[i] = sorted vertices at distance exactly i; spheres[0] = {center}.
  std::vector<std::vector<int>> spheres;
};

SphereDecomposition sphere_decomposition(const Graph& g, int center);

struct ArgParams {
  int n;
  int d;
  int alpha;
  int beta;
};

// Outcome of amply-regular detection. On failure `reason` says which test
// broke and `witness` is the lexicographically first violating pair.
struct ArgDetection {
  std::optional<ArgParams> params;
  std::string reason;                       // empty on success
  std::optional<std::pair<int, int>> witness;
};

// Exact check that every adjacent pair has alpha common neighbours and every
// distance-2 pair has beta. Rejects empty, disconnected and complete graphs
// with distinct diagnostics.
ArgDetection detect_arg(const Graph& g);

// The three vertex sets an edge xy splits B_1 into.
struct LocalEdgeStructure {
  std::vector<int> common;   // triangle vertices: adjacent to both x and y
  std::vector<int> only_x;   // neighbours of x only (y removed)
  std::vector<int> only_y;   // neighbours of y only (x removed)
};

LocalEdgeStructure local_edge_structure(const Graph& g, int x, int y);

// Subgraph induced on the neighbourhood S_1(x); second member maps local
// indices back to vertices of g (ascending).
std::pair<Graph, std::vector<int>> local_graph(const Graph& g, int x);

}  // namespace argcurv
