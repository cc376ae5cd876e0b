#include <doctest.h>

#include <bit>

#include "wythoff/errors.hpp"
#include "wythoff/graphs.hpp"
#include "wythoff/isomorphism.hpp"
#include "wythoff/polytopes.hpp"
#include "wythoff/wythoff.hpp"

using namespace wythoff;

namespace {

// Floyd-Warshall on the adjacency matrix.
std::vector<std::vector<int>> floyd(const MetricGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

MetricGraph skeleton_of(const FaceComplex& k, TypeSubset v) { return skeleton(wythoffian(k, v).complex); }

}  // namespace

TEST_CASE("graph construction") {
  const MetricGraph g(3, {{1, 0}, {1, 2}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.distance(0, 2) == 2);
  CHECK_THROWS_AS(MetricGraph(2, {{0, 0}}), StructuralError);
  CHECK_THROWS_AS(MetricGraph(2, {{0, 1}, {1, 0}}), StructuralError);
  CHECK_THROWS_AS(MetricGraph(2, {{0, 2}}), StructuralError);
  const MetricGraph split(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(split.is_connected());
  CHECK_THROWS_AS(split.distances(), StructuralError);
  CHECK_THROWS_AS(all_pairs_distances(split), StructuralError);
  const auto back = graph_from_json(to_json(g));
  CHECK(back.edges() == g.edges());
}

TEST_CASE("distances agree with Floyd-Warshall") {
  for (const auto& g : {path_graph(3), cycle_graph(9), half_cube_graph(5), johnson_graph(6, 3),
                        cocktail_party_graph(4), skeleton(make_polytope(RegularPolytopeSpec::parse("ico")))}) {
    const auto ref = floyd(g);
    const auto& d = g.distances();
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        REQUIRE(d.at(static_cast<Vertex>(u), static_cast<Vertex>(v)) == ref[u][v]);
  }
  CHECK(path_graph(3).distance(0, 2) == 2);
  const auto cp = cocktail_party_graph(4);
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v)
      if (u != v) CHECK(cp.distance(u, v) == (u / 2 == v / 2 ? 2 : 1));
}

TEST_CASE("reference graphs follow their definitions") {
  const auto h = half_cube_graph(6);
  CHECK(h.vertex_count() == 32);
  CHECK(h.edge_count() == 32 * 15 / 2);
  const auto j = johnson_graph(7, 3);
  CHECK(j.vertex_count() == 35);
  CHECK(j.edge_count() == 35 * 12 / 2);
  CHECK(hypercube_graph(4).edge_count() == 32);
  CHECK(complete_minus_cycle(7, 5).edge_count() == 21 - 5);
  const auto hm = hypercube_minus_antipodes(4);
  CHECK(hm.vertex_count() == 14);
  CHECK(hm.is_connected());
  CHECK(hypercube_graph(5).is_bipartite());
  CHECK_FALSE(complete_graph(3).is_bipartite());
}

TEST_CASE("skeletons") {
  for (int d = 2; d <= 6; ++d) CHECK(is_isomorphic(skeleton(simplex(d)), complete_graph(d + 1)));
  CHECK(skeleton_of(cross_polytope(3), TypeSubset{0, 1}).vertex_count() == 24);
  CHECK(is_isomorphic(skeleton(dual(cross_polytope(3))), hypercube_graph(3)));
  CHECK(dual_skeleton(wythoffian(cross_polytope(3), TypeSubset{1}).complex).vertex_count() == 14);
  CHECK(dual_skeleton(wythoffian(simplex(3), TypeSubset{0, 1}).complex).vertex_count() == 8);
  const auto k = wythoffian(cross_polytope(3), TypeSubset{0, 2}).complex;
  CHECK(is_isomorphic(dual_skeleton(k), skeleton(dual(k))));
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(skeleton_of(simplex(3), TypeSubset{1}), johnson_graph(4, 2)));
  CHECK(is_isomorphic(skeleton(cross_polytope(4)), half_cube_graph(4)));
  const auto g = skeleton(make_polytope(RegularPolytopeSpec::parse("dodeca")));
  CHECK(is_isomorphic(g, g));
  CHECK_FALSE(is_isomorphic(cycle_graph(6), MetricGraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  CHECK_FALSE(is_isomorphic(path_graph(4), MetricGraph(4, {{0, 1}, {0, 2}, {0, 3}})));
  // Same degree sequence, different graphs: the 3-prism and K_{3,3}.
  const MetricGraph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  const MetricGraph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK_FALSE(is_isomorphic(prism, k33));
  CHECK_THROWS_AS(is_isomorphic(hypercube_graph(11), hypercube_graph(11)), ResourceError);
  // An explicit relabelling is recovered.
  const auto c = cube(4);
  const auto h = hypercube_graph(4);
  std::vector<Edge> shuffled;
  for (const auto& [u, v] : h.edges()) shuffled.emplace_back(u ^ 5, v ^ 5);
  CHECK(is_isomorphic(h, MetricGraph(16, shuffled)));
  CHECK(is_isomorphic(skeleton(c), h));
}
