#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "argcurv/families.hpp"
#include "argcurv/graph.hpp"
#include "argcurv/graph_io.hpp"
#include "argcurv/signature.hpp"
#include "support.hpp"

using namespace argcurv;

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::out_of_range);
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  Graph g(3, {{2, 0}, {0, 1}});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  CHECK(g.edge_index(1, 0) == 0);
  CHECK(g.edge_index(1, 2) == -1);
  CHECK(g.has_edge(2, 0));
}

TEST_CASE("bfs and diameter") {
  Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  auto d = bfs_distances(path, 0);
  CHECK(d == std::vector<int>{0, 1, 2, 3});
  CHECK(diameter(path) == 3);
  CHECK(diameter(cycle(7)) == 3);
  for (int k = 3; k <= 6; ++k) CHECK(diameter(hypercube(k)) == k);
  CHECK(diameter(johnson(8, 4)) == 4);

  Graph two(4, {{0, 1}, {2, 3}});
  CHECK(two.distance(0, 2) == Graph::kUnreachable);
  CHECK_FALSE(two.is_connected());
  CHECK_THROWS_AS(diameter(two), std::invalid_argument);
  CHECK_THROWS_AS(diameter(Graph()), std::invalid_argument);
}

TEST_CASE("distance matrix is symmetric with zero diagonal") {
  Graph g = petersen();
  const auto& m = g.distance_matrix();
  for (int u = 0; u < 10; ++u) {
    CHECK(m[u][u] == 0);
    for (int v = 0; v < 10; ++v) CHECK(m[u][v] == m[v][u]);
  }
}

TEST_CASE("sphere decomposition of the 3-cube") {
  auto s = sphere_decomposition(hypercube(3), 0);
  REQUIRE(s.spheres.size() == 4);
  CHECK(s.spheres[0] == std::vector<int>{0});
  CHECK(s.spheres[1].size() == 3);
  CHECK(s.spheres[2].size() == 3);
  CHECK(s.spheres[3] == std::vector<int>{7});
}

TEST_CASE("family sizes and degrees") {
  CHECK(hypercube(4).vertex_count() == 16);
  CHECK(hypercube(4).edge_count() == 32);
  CHECK(hamming(2, 3).vertex_count() == 9);
  CHECK(hamming(2, 3).edge_count() == 18);
  CHECK(johnson(8, 4).vertex_count() == 70);
  CHECK(johnson(8, 4).edge_count() == 560);
  CHECK(rook(4).vertex_count() == 16);
  CHECK(rook(4).edge_count() == 48);
  CHECK(petersen().edge_count() == 15);
  CHECK(shrikhande().edge_count() == 48);
  CHECK(icosahedron().edge_count() == 30);
  CHECK(complete(5).edge_count() == 10);
  CHECK(complete_bipartite(3, 4).edge_count() == 12);
  for (const auto& e : testsupport::full_corpus()) {
    CAPTURE(e.name);
    CHECK(e.g.is_connected());
    CHECK(e.g.regular_degree().has_value());
  }
}

TEST_CASE("generate dispatch") {
  CHECK(generate("hypercube", {3}).vertex_count() == 8);
  CHECK(generate("petersen", {}).vertex_count() == 10);
  CHECK_THROWS_AS(generate("nosuch", {}), std::invalid_argument);
  CHECK_THROWS_AS(generate("hypercube", {}), std::invalid_argument);
  CHECK_THROWS_AS(generate("hypercube", {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(generate("cycle", {2}), std::invalid_argument);
  CHECK(!family_catalog().empty());
}

// independent recount of alpha/beta uniformity for every vertex pair
static void recount_arg(const Graph& g, const ArgDetection& det) {
  const int n = g.vertex_count();
  std::set<int> adjacent_counts, distance2_counts;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::set<int> nu(g.neighbors(u).begin(), g.neighbors(u).end());
      int common = 0;
      for (int w : g.neighbors(v)) common += nu.count(w);
      if (g.distance(u, v) == 1)
        adjacent_counts.insert(common);
      else if (g.distance(u, v) == 2)
        distance2_counts.insert(common);
    }
  bool uniform = adjacent_counts.size() <= 1 && distance2_counts.size() <= 1 &&
                 g.regular_degree().has_value() && g.is_connected() &&
                 g.edge_count() <
                     static_cast<long long>(g.vertex_count()) * (g.vertex_count() - 1) / 2;
  CHECK(det.params.has_value() == uniform);
  if (det.params) {
    if (!adjacent_counts.empty()) CHECK(det.params->alpha == *adjacent_counts.begin());
    if (!distance2_counts.empty()) CHECK(det.params->beta == *distance2_counts.begin());
    CHECK(det.params->n == n);
    CHECK(det.params->d == *g.regular_degree());
  }
}

TEST_CASE("amply regular detection on the corpus") {
  auto check = [](const Graph& g, int n, int d, int a, int b) {
    auto det = detect_arg(g);
    REQUIRE(det.params.has_value());
    CHECK(det.params->n == n);
    CHECK(det.params->d == d);
    CHECK(det.params->alpha == a);
    CHECK(det.params->beta == b);
    recount_arg(g, det);
  };
  check(hypercube(3), 8, 3, 0, 2);
  check(hypercube(6), 64, 6, 0, 2);
  check(petersen(), 10, 3, 0, 1);
  check(johnson(8, 4), 70, 16, 6, 4);
  check(johnson(5, 2), 10, 6, 3, 4);
  check(icosahedron(), 12, 5, 2, 2);
  check(shrikhande(), 16, 6, 2, 2);
  check(rook(4), 16, 6, 2, 2);
  check(hamming(2, 3), 9, 4, 1, 2);
  check(cycle(5), 5, 2, 0, 1);
  check(cycle(6), 6, 2, 0, 1);
  check(complete_bipartite(3, 3), 6, 3, 0, 3);
  check(complete_bipartite(2, 2), 4, 2, 0, 2);
}

TEST_CASE("detection diagnostics") {
  auto complete4 = detect_arg(complete(4));
  CHECK_FALSE(complete4.params);
  CHECK(complete4.reason.find("complete") != std::string::npos);

  auto empty = detect_arg(Graph());
  CHECK_FALSE(empty.params);

  auto disconnected = detect_arg(Graph(4, {{0, 1}, {2, 3}}));
  CHECK_FALSE(disconnected.params);
  CHECK(disconnected.reason.find("connected") != std::string::npos);

  Graph k4_minus(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto irregular = detect_arg(k4_minus);
  CHECK_FALSE(irregular.params);
  CHECK(irregular.reason.find("regular") != std::string::npos);
  REQUIRE(irregular.witness.has_value());
  CHECK(irregular.witness->first == 0);

  // triangular prism: triangle edges see 1 common neighbour, spokes see 0
  Graph prism(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
  auto adj = detect_arg(prism);
  CHECK_FALSE(adj.params);
  CHECK(adj.reason.find("adjacent") != std::string::npos);
  REQUIRE(adj.witness.has_value());

  // circulant C8(1,4): adjacent pairs uniform, distance-2 pairs see 1 or 2
  std::vector<std::pair<int, int>> ced;
  for (int i = 0; i < 8; ++i) ced.push_back({i, (i + 1) % 8});
  for (int i = 0; i < 4; ++i) ced.push_back({i, i + 4});
  auto dist2 = detect_arg(Graph(8, ced));
  CHECK_FALSE(dist2.params);
  CHECK(dist2.reason.find("distance-2") != std::string::npos);
  REQUIRE(dist2.witness.has_value());
  recount_arg(Graph(8, ced), dist2);
}

TEST_CASE("local graphs distinguish families with equal parameters") {
  // icosahedron: links are 5-cycles
  auto [ico_local, ico_map] = local_graph(icosahedron(), 0);
  CHECK(ico_local.vertex_count() == 5);
  CHECK(ico_local.regular_degree() == 2);
  CHECK(ico_local.is_connected());
  CHECK(ico_map.size() == 5);

  // rook's graph: links are two disjoint triangles
  auto [rook_local, rook_map] = local_graph(rook(4), 0);
  CHECK(rook_local.vertex_count() == 6);
  CHECK(rook_local.regular_degree() == 2);
  CHECK_FALSE(rook_local.is_connected());

  // shrikhande: links are 6-cycles
  auto [shri_local, shri_map] = local_graph(shrikhande(), 0);
  CHECK(shri_local.vertex_count() == 6);
  CHECK(shri_local.regular_degree() == 2);
  CHECK(shri_local.is_connected());

  // johnson(8,4): links look like the 4x4 rook's graph
  auto [j_local, j_map] = local_graph(johnson(8, 4), 0);
  CHECK(j_local.vertex_count() == 16);
  CHECK(j_local.regular_degree() == 6);
  auto det = detect_arg(j_local);
  REQUIRE(det.params.has_value());
  CHECK(det.params->alpha == 2);
  CHECK(det.params->beta == 2);
  auto [jj, jj_map] = local_graph(j_local, 0);
  CHECK_FALSE(jj.is_connected());  // rook-like, not shrikhande-like

  // hamming(2,3): links are two disjoint edges
  auto [ham_local, ham_map] = local_graph(hamming(2, 3), 0);
  CHECK(ham_local.vertex_count() == 4);
  CHECK(ham_local.regular_degree() == 1);
}

TEST_CASE("local edge structure sizes on an ARG") {
  Graph g = johnson(8, 4);
  auto s = local_edge_structure(g, g.edges()[0].first, g.edges()[0].second);
  CHECK(s.common.size() == 6);
  CHECK(s.only_x.size() == 16 - 6 - 1);
  CHECK(s.only_y.size() == 16 - 6 - 1);
}

TEST_CASE("bipartite classes") {
  CHECK(hypercube(4).bipartite_classes().has_value());
  CHECK(complete_bipartite(3, 3).bipartite_classes().has_value());
  CHECK(cycle(6).bipartite_classes().has_value());
  CHECK_FALSE(cycle(5).bipartite_classes().has_value());
  CHECK_FALSE(petersen().bipartite_classes().has_value());
  Graph c6 = cycle(6);
  auto cls = *c6.bipartite_classes();
  for (auto [u, v] : c6.edges()) CHECK(cls[u] != cls[v]);
}

TEST_CASE("graph io round trip") {
  Graph g = petersen();
  std::string text = write_graph(g);
  std::istringstream in(text);
  LoadedGraph back = read_graph(in);
  CHECK(back.graph.edges() == g.edges());
  CHECK_FALSE(back.signature.has_value());

  Signature sigma = Signature::all_minus(g);
  std::string signed_text = write_graph(g, sigma);
  std::istringstream sin(signed_text);
  LoadedGraph sback = read_graph(sin);
  REQUIRE(sback.signature.has_value());
  for (auto [u, v] : g.edges()) CHECK(sback.signature->sign(sback.graph, u, v) == -1);
}

TEST_CASE("graph io rejects malformed input with line numbers") {
  auto expect_error = [](const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    try {
      read_graph(in);
      FAIL_CHECK("expected parse failure for: " << text);
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("", "empty");
  expect_error("1 2 3\n", "header");
  expect_error("2 1\n0 0\n", "self-loop");
  expect_error("2 1\n1 0\n", "u < v");
  expect_error("2 2\n0 1\n0 1\n", "duplicate");
  expect_error("2 1\n0 5\n", "range");
  expect_error("3 2\n0 1 +1\n1 2\n", "sign");
  expect_error("2 2\n0 1\n", "expected 2 edges");
  expect_error("2 1\n0 1 7\n", "sign");

  // comments and the signed column parse; errors carry 1-based line numbers
  std::istringstream ok("# signed triangle\n3 3\n0 1 +1\n# middle comment\n0 2 -1\n1 2 -1\n");
  LoadedGraph lg = read_graph(ok);
  CHECK(lg.graph.edge_count() == 3);
  REQUIRE(lg.signature.has_value());
  CHECK(lg.signature->sign(lg.graph, 0, 1) == 1);
  CHECK(lg.signature->sign(lg.graph, 2, 1) == -1);

  try {
    std::istringstream bad("2 1\n0 0\n");
    read_graph(bad);
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("random regular generator produces simple regular graphs") {
  std::mt19937_64 rng(11);
  for (auto [n, d] : {std::pair{8, 3}, {10, 4}, {12, 5}, {6, 2}}) {
    Graph g = testsupport::random_regular_graph(n, d, rng);
    CHECK(g.vertex_count() == n);
    CHECK(g.regular_degree() == d);
  }
}
