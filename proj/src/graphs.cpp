#include "wythoff/graphs.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "wythoff/errors.hpp"

namespace wythoff {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

}  // namespace

MetricGraph skeleton(const FaceComplex& k) {
  if (k.dimension() < 1) throw StructuralError("skeleton needs dimension at least 1");
  const auto& verts = k.faces_of_dim(0);
  std::vector<int> index(k.size(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (FaceId e : k.faces_of_dim(1)) {
    const auto ends = k.down_covers(e);
    if (ends.size() != 2) throw StructuralError("edge without exactly two vertices");
    edges.emplace_back(index[ends[0]], index[ends[1]]);
  }
  return MetricGraph(verts.size(), std::move(edges));
}

MetricGraph dual_skeleton(const FaceComplex& k) { return skeleton(dual(k)); }

MetricGraph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return MetricGraph(n, std::move(edges));
}

MetricGraph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return MetricGraph(n, std::move(edges));
}

MetricGraph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return MetricGraph(n, std::move(edges));
}

MetricGraph hypercube_graph(int m) {
  require(m >= 0 && m <= 20, "hypercube dimension out of range");
  const int n = 1 << m;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int b = 0; b < m; ++b)
      if (!(u & (1 << b))) edges.emplace_back(u, u | (1 << b));
  return MetricGraph(n, std::move(edges));
}

MetricGraph half_cube_graph(int m) {
  require(m >= 1 && m <= 20, "half-cube dimension out of range");
  std::vector<int> masks;
  std::vector<int> index(std::size_t{1} << m, -1);
  for (int x = 0; x < (1 << m); ++x) {
    if (std::popcount(static_cast<unsigned>(x)) % 2 == 0) {
      index[x] = static_cast<int>(masks.size());
      masks.push_back(x);
    }
  }
  std::vector<Edge> edges;
  for (int x : masks)
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        const int y = x ^ (1 << a) ^ (1 << b);
        if (x < y) edges.emplace_back(index[x], index[y]);
      }
  return MetricGraph(masks.size(), std::move(edges));
}

MetricGraph johnson_graph(int m, int n) {
  require(m >= 1 && m <= 24 && n >= 0 && n <= m, "Johnson parameters out of range");
  std::vector<int> masks;
  for (int x = 0; x < (1 << m); ++x)
    if (std::popcount(static_cast<unsigned>(x)) == n) masks.push_back(x);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (std::popcount(static_cast<unsigned>(masks[i] ^ masks[j])) == 2)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return MetricGraph(masks.size(), std::move(edges));
}

MetricGraph cocktail_party_graph(int k) {
  require(k >= 1, "cocktail party needs k >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < 2 * k; ++u)
    for (int v = u + 1; v < 2 * k; ++v)
      if (u / 2 != v / 2) edges.emplace_back(u, v);
  return MetricGraph(2 * k, std::move(edges));
}

MetricGraph complete_minus_cycle(int n, int c) {
  require(c >= 3 && c <= n, "cycle length out of range");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const bool on_cycle = v < c && (v == u + 1 || (u == 0 && v == c - 1));
      if (!on_cycle) edges.emplace_back(u, v);
    }
  return MetricGraph(n, std::move(edges));
}

MetricGraph hypercube_minus_antipodes(int m) {
  require(m >= 2 && m <= 20, "hypercube dimension out of range");
  const int full = (1 << m) - 1;
  std::vector<int> index(std::size_t{1} << m, -1);
  int next = 0;
  for (int x = 1; x < full; ++x) index[x] = next++;
  std::vector<Edge> edges;
  for (int x = 1; x < full; ++x)
    for (int b = 0; b < m; ++b) {
      const int y = x | (1 << b);
      if (y != x && y != full) edges.emplace_back(index[x], index[y]);
    }
  return MetricGraph(static_cast<std::size_t>(next), std::move(edges));
}

}  // namespace wythoff
