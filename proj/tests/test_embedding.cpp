#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "wythoff/embedding.hpp"
#include "wythoff/errors.hpp"
#include "wythoff/factorization.hpp"
#include "wythoff/graphs.hpp"
#include "wythoff/inequalities.hpp"
#include "wythoff/isomorphism.hpp"
#include "wythoff/polytopes.hpp"
#include "wythoff/wythoff.hpp"

using namespace wythoff;

namespace {

MetricGraph skeleton_of(const char* polytope, TypeSubset v) {
  return skeleton(wythoffian(make_polytope(RegularPolytopeSpec::parse(polytope)), v).complex);
}

// Hamming distances compared through bitstrings.
bool labels_embed(const MetricGraph& g, const EmbeddingCertificate& cert) {
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    const auto a = cert.bitstring(static_cast<Vertex>(u));
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const auto b = cert.bitstring(static_cast<Vertex>(v));
      int h = 0;
      for (std::size_t i = 0; i < a.size(); ++i) h += a[i] != b[i];
      if (h != cert.scale() * g.distance(static_cast<Vertex>(u), static_cast<Vertex>(v))) return false;
    }
  }
  return true;
}

// Number of multisets of cuts (multiplicity <= scale) summing to scale * dist.
std::size_t brute_decompositions(const MetricGraph& g, int scale) {
  const auto n = g.vertex_count();
  const std::size_t cuts = (std::size_t{1} << (n - 1)) - 1;  // sides avoiding vertex 0
  std::vector<int> mult(cuts, 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v) {
        int sum = 0;
        for (std::size_t c = 0; c < cuts; ++c) {
          const std::size_t side = (c + 1) << 1;
          if (((side >> u) & 1) != ((side >> v) & 1)) sum += mult[c];
        }
        ok = sum == scale * g.distance(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    count += ok ? 1 : 0;
    std::size_t i = 0;
    while (i < cuts && mult[i] == scale) mult[i++] = 0;
    if (i == cuts) break;
    ++mult[i];
  }
  return count;
}

MetricGraph random_connected(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) && std::find(edges.begin(), edges.end(), Edge{u, v}) == edges.end()) edges.emplace_back(u, v);
  return MetricGraph(static_cast<std::size_t>(n), std::move(edges));
}

MetricGraph star_tree(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
  return MetricGraph(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace

TEST_CASE("partial cubes") {
  for (int m = 1; m <= 6; ++m) {
    const auto cert = partial_cube(hypercube_graph(m));
    REQUIRE(cert);
    CHECK(cert->dimension() == static_cast<std::size_t>(m));
    CHECK(labels_embed(hypercube_graph(m), *cert));
  }
  for (int n : {4, 6, 10}) CHECK(partial_cube(cycle_graph(n))->dimension() == static_cast<std::size_t>(n / 2));
  CHECK(partial_cube(star_tree(9))->dimension() == 8);
  CHECK_FALSE(partial_cube(cycle_graph(5)));
  CHECK_FALSE(partial_cube(MetricGraph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})));  // K_{2,3}
  for (int m = 3; m <= 6; ++m) CHECK(partial_cube(hypercube_minus_antipodes(m))->dimension() == static_cast<std::size_t>(m));
  const auto truncated_octahedron = skeleton_of("b3", TypeSubset{0, 1});
  CHECK(partial_cube(truncated_octahedron)->dimension() == 6);
  CHECK(partial_cube(skeleton_of("ico", TypeSubset{0, 1, 2}))->dimension() == 15);
}

TEST_CASE("certificate checks catch a flipped bit") {
  const auto g = skeleton_of("b3", TypeSubset{0, 1, 2});
  auto cert = *partial_cube(g);
  CHECK(check_certificate(g, cert));
  cert.flip(7, 3);
  const auto check = check_certificate(g, cert);
  CHECK_FALSE(check);
  REQUIRE(check.witness);
  const auto [u, v] = *check.witness;
  CHECK((u == 7 || v == 7));
}

TEST_CASE("scale search agrees with brute force on small graphs") {
  const std::vector<MetricGraph> graphs{complete_graph(4), cycle_graph(5), complete_graph(5), path_graph(4),
                                        MetricGraph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}),
                                        cycle_graph(4), complete_minus_cycle(5, 4)};
  for (const auto& g : graphs) {
    for (int scale : {1, 2}) {
      ScaleSearchLimits all;
      all.max_solutions = 1'000'000;
      const auto result = scale_search(g, scale, all);
      CHECK(result.complete);
      CHECK(result.solutions.size() == brute_decompositions(g, scale));
      for (const auto& s : result.solutions) {
        CHECK(labels_embed(g, s.certificate()));
      }
    }
  }
}

TEST_CASE("K4 has two scale-2 decompositions") {
  ScaleSearchLimits all;
  all.max_solutions = 10;
  const auto result = scale2_search(complete_graph(4), all);
  CHECK(result.status == ScaleSearchResult::Status::Found);
  CHECK(result.solutions.size() == 2);
  std::vector<std::size_t> dims;
  for (const auto& s : result.solutions) dims.push_back(s.occurrences());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{3, 4});
}

TEST_CASE("scale 2 verdicts") {
  const auto ico = skeleton_of("ico", TypeSubset{0});
  const auto found = scale2_search(ico);
  REQUIRE(found.status == ScaleSearchResult::Status::Found);
  const auto cert = found.solutions.front().certificate();
  CHECK(cert.dimension() == 6);
  CHECK(labels_embed(ico, cert));

  const auto k52 = scale2_search(cocktail_party_graph(5));
  CHECK(k52.status == ScaleSearchResult::Status::None);
  CHECK(k52.complete);
  for (int k = 2; k <= 4; ++k) CHECK(scale2_search(cocktail_party_graph(k)).status == ScaleSearchResult::Status::Found);

  const auto k7c5 = complete_minus_cycle(7, 5);
  for (int scale = 1; scale <= 4; ++scale) CHECK(scale_search(k7c5, scale).status == ScaleSearchResult::Status::None);
}

TEST_CASE("five-gonal search") {
  CHECK_FALSE(five_gonal_violation(star_tree(12)));
  CHECK_FALSE(five_gonal_violation(hypercube_graph(4)));
  CHECK_FALSE(five_gonal_violation(complete_minus_cycle(7, 5)));
  const auto k23 = MetricGraph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  const auto v = five_gonal_violation(k23);
  REQUIRE(v);
  CHECK(v->value == inequality_value(k23, v->support, v->b));
  CHECK(v->value > 0);

  const auto truncated_cube = skeleton_of("b3", TypeSubset{1, 2});
  const auto w = five_gonal_violation(truncated_cube);
  REQUIRE(w);
  CHECK(inequality_value(truncated_cube, w->support, w->b) == w->value);
  CHECK(std::accumulate(w->b.begin(), w->b.end(), 0) == 1);
  CHECK(scale2_search(truncated_cube).status == ScaleSearchResult::Status::None);
  CHECK_FALSE(partial_cube(truncated_cube));

  FiveGonalOptions window;
  window.window = 8;
  CHECK(five_gonal_search(hypercube_graph(4), window).status == FiveGonalResult::Status::Inconclusive);
  CHECK(five_gonal_search(hypercube_graph(4)).status == FiveGonalResult::Status::Holds);
}

TEST_CASE("hypermetric search") {
  CHECK_FALSE(hypermetric_check(complete_minus_cycle(7, 5), 7).violation);
  CHECK(hypermetric_check(complete_minus_cycle(7, 5), 7).complete);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_connected(7, 0.3, rng);
    CHECK_FALSE(hypermetric_check(g, 3).violation);
    const auto h = hypermetric_check(g, 5);
    CHECK(h.violation.has_value() == five_gonal_violation(g).has_value());
    if (h.violation) {
      CHECK(inequality_value(g, h.violation->support, h.violation->b) == h.violation->value);
      CHECK(std::accumulate(h.violation->b.begin(), h.violation->b.end(), 0) == 1);
    }
  }
  const auto big = hypermetric_check(hypercube_graph(4), 9);
  CHECK_FALSE(big.complete);
}

TEST_CASE("Graham-Winkler factors") {
  const auto cube = gw_factorize(hypercube_graph(5));
  CHECK(cube.size() == 5);
  for (const auto& f : cube) CHECK(factor_shape(f.graph) == "K2");
  CHECK(gw_factorize(complete_graph(6)).size() == 1);

  std::vector<std::string> shapes;
  for (const auto& f : gw_factorize(skeleton_of("b3", TypeSubset{0, 2}))) shapes.push_back(factor_shape(f.graph));
  std::sort(shapes.begin(), shapes.end());
  CHECK(shapes == std::vector<std::string>{"K2", "K2", "K2", "K_{3x2}"});
}

TEST_CASE("l1 verdicts") {
  for (int k = 2; k <= 4; ++k) {
    const auto v = l1_verdict(cocktail_party_graph(k));
    CHECK(v.kind == L1Verdict::Kind::L1);
    CHECK(v.scale == (k == 2 ? 1 : 2));
  }
  const auto k52 = l1_verdict(cocktail_party_graph(5));
  CHECK(k52.kind == L1Verdict::Kind::L1);
  CHECK(k52.scale > 2);
  CHECK(k52.minimal);

  const auto notl1 = l1_verdict(skeleton_of("b3", TypeSubset{1, 2}));
  CHECK(notl1.kind == L1Verdict::Kind::NotL1);

  const auto k7c5 = l1_verdict(complete_minus_cycle(7, 5), {.max_scale = 4});
  CHECK(k7c5.kind == L1Verdict::Kind::Undecided);
}
