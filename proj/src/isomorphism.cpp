#include "wythoff/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "wythoff/errors.hpp"

namespace wythoff {

namespace {

// The disjoint union of the two inputs; vertices of b are shifted by na.
class JointRefiner {
 public:
  JointRefiner(const ColoredGraph& a, const ColoredGraph& b)
      : a_(a), b_(b), na_(a.graph.vertex_count()), n_(na_ + b.graph.vertex_count()) {}

  std::optional<std::vector<Vertex>> solve() {
    if (a_.graph.vertex_count() != b_.graph.vertex_count() ||
        a_.graph.edge_count() != b_.graph.edge_count()) {
      return std::nullopt;
    }
    std::vector<int> colors(n_);
    for (std::size_t v = 0; v < na_; ++v) colors[v] = a_.colors[v];
    for (std::size_t v = na_; v < n_; ++v) colors[v] = b_.colors[v - na_];
    normalize(colors);
    if (!refine(colors)) return std::nullopt;
    return search(std::move(colors));
  }

  bool refinement_agrees() const {
    if (a_.graph.vertex_count() != b_.graph.vertex_count() ||
        a_.graph.edge_count() != b_.graph.edge_count()) {
      return false;
    }
    std::vector<int> colors(n_);
    for (std::size_t v = 0; v < na_; ++v) colors[v] = a_.colors[v];
    for (std::size_t v = na_; v < n_; ++v) colors[v] = b_.colors[v - na_];
    normalize(colors);
    return refine(colors);
  }

 private:
  std::span<const Vertex> neighbors(std::size_t v) const {
    return v < na_ ? a_.graph.neighbors(static_cast<Vertex>(v))
                   : b_.graph.neighbors(static_cast<Vertex>(v - na_));
  }
  std::size_t shift(std::size_t v) const { return v < na_ ? 0 : na_; }

  static std::size_t normalize(std::vector<int>& colors) {
    std::vector<int> values = colors;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (auto& c : colors) c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
    return values.size();
  }

  // Every colour class has equally many vertices on both sides.
  bool balanced(const std::vector<int>& colors, std::size_t classes) const {
    std::vector<long> diff(classes, 0);
    for (std::size_t v = 0; v < n_; ++v) diff[colors[v]] += v < na_ ? 1 : -1;
    return std::all_of(diff.begin(), diff.end(), [](long x) { return x == 0; });
  }

  bool refine(std::vector<int>& colors) const {
    std::size_t classes = *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<std::vector<int>> signature(n_);
    std::vector<std::size_t> order(n_);
    while (true) {
      if (!balanced(colors, classes)) return false;
      for (std::size_t v = 0; v < n_; ++v) {
        auto& sig = signature[v];
        sig.clear();
        sig.push_back(colors[v]);
        const auto base = shift(v);
        for (Vertex w : neighbors(v)) sig.push_back(colors[static_cast<std::size_t>(w) + base]);
        std::sort(sig.begin() + 1, sig.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::size_t x, std::size_t y) { return signature[x] < signature[y]; });
      std::vector<int> next(n_);
      int label = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && signature[order[i]] != signature[order[i - 1]]) ++label;
        next[order[i]] = label;
      }
      const auto count = static_cast<std::size_t>(label) + 1;
      colors = std::move(next);
      if (count == classes) return balanced(colors, classes);
      classes = count;
    }
  }

  std::optional<std::vector<Vertex>> search(std::vector<int> colors) const {
    const std::size_t classes = *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<std::size_t> size(classes, 0);
    for (std::size_t v = 0; v < na_; ++v) ++size[colors[v]];
    // Smallest non-singleton cell.
    int target = -1;
    for (std::size_t c = 0; c < classes; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = static_cast<int>(c);
    if (target < 0) return extract(colors);

    std::size_t pivot = 0;
    while (colors[pivot] != target) ++pivot;
    for (std::size_t cand = na_; cand < n_; ++cand) {
      if (colors[cand] != target) continue;
      auto trial = colors;
      trial[pivot] = static_cast<int>(classes);
      trial[cand] = static_cast<int>(classes);
      if (!refine(trial)) continue;
      if (auto found = search(std::move(trial))) return found;
    }
    return std::nullopt;
  }

  std::optional<std::vector<Vertex>> extract(const std::vector<int>& colors) const {
    std::vector<Vertex> by_color(na_, -1);
    for (std::size_t v = na_; v < n_; ++v) by_color[colors[v]] = static_cast<Vertex>(v - na_);
    std::vector<Vertex> map(na_);
    for (std::size_t v = 0; v < na_; ++v) map[v] = by_color[colors[v]];
    for (const auto& [u, w] : a_.graph.edges())
      if (!b_.graph.has_edge(map[u], map[w])) return std::nullopt;
    return map;
  }

  const ColoredGraph& a_;
  const ColoredGraph& b_;
  std::size_t na_;
  std::size_t n_;
};

}  // namespace

bool refinement_equivalent(const ColoredGraph& a, const ColoredGraph& b) {
  return JointRefiner(a, b).refinement_agrees();
}

std::optional<std::vector<Vertex>> find_isomorphism(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.graph.vertex_count() == 0 && b.graph.vertex_count() == 0) return std::vector<Vertex>{};
  return JointRefiner(a, b).solve();
}

bool is_isomorphic(const MetricGraph& g, const MetricGraph& h, std::size_t cap) {
  if (g.vertex_count() > cap || h.vertex_count() > cap) {
    throw ResourceError("graph isomorphism limited to " + std::to_string(cap) + " vertices");
  }
  const ColoredGraph a{g, std::vector<int>(g.vertex_count(), 0)};
  const ColoredGraph b{h, std::vector<int>(h.vertex_count(), 0)};
  return find_isomorphism(a, b).has_value();
}

ColoredGraph hasse_graph(const FaceComplex& k) {
  std::vector<Edge> edges;
  for (const auto& [lo, hi] : k.covers()) edges.emplace_back(lo, hi);
  return {MetricGraph(k.size(), std::move(edges)), k.dims()};
}

ComplexComparison compare_complexes(const FaceComplex& a, const FaceComplex& b, std::size_t exact_cap) {
  if (a.dimension() != b.dimension() || a.f_vector() != b.f_vector() ||
      a.cover_count() != b.cover_count()) {
    return {false, true};
  }
  if (a.size() > exact_cap) {
    for (TypeSubset t : nonempty_subsets(a.dimension()))
      if (a.count_flags(t) != b.count_flags(t)) return {false, true};
    return {refinement_equivalent(hasse_graph(a), hasse_graph(b)), false};
  }
  return {find_isomorphism(hasse_graph(a), hasse_graph(b)).has_value(), true};
}

bool is_isomorphic(const FaceComplex& a, const FaceComplex& b, std::size_t exact_cap) {
  return compare_complexes(a, b, exact_cap).isomorphic;
}

}  // namespace wythoff
