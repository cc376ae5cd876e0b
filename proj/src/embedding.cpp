#include "wythoff/embedding.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace wythoff {

namespace {

struct SplitLabels {
  ThetaClasses classes;
  std::vector<std::vector<char>> far_side;  // per class: vertex on the side away from 0
};

std::optional<SplitLabels> djokovic_winkler(const MetricGraph& g) {
  if (!g.is_connected() || !g.is_bipartite()) return std::nullopt;
  const auto& edges = g.edges();
  SplitLabels out;
  out.classes.edge_class.assign(edges.size(), -1);
  std::vector<std::uint16_t> du;
  std::vector<std::uint16_t> dv;
  std::vector<Vertex> queue;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (out.classes.edge_class[e] >= 0) continue;
    const int c = static_cast<int>(out.classes.count++);
    g.bfs_into(edges[e].first, du, queue);
    g.bfs_into(edges[e].second, dv, queue);
    for (std::size_t f = 0; f < edges.size(); ++f) {
      const auto [x, y] = edges[f];
      if ((du[x] < dv[x]) == (du[y] < dv[y])) continue;
      if (out.classes.edge_class[f] >= 0) return std::nullopt;
      out.classes.edge_class[f] = c;
    }
    std::vector<char> side(g.vertex_count());
    const bool origin = du[0] < dv[0];
    for (std::size_t x = 0; x < g.vertex_count(); ++x) side[x] = (du[x] < dv[x]) != origin;
    out.far_side.push_back(std::move(side));
  }
  return out;
}

}  // namespace

std::optional<ThetaClasses> theta_classes(const MetricGraph& g) {
  auto split = djokovic_winkler(g);
  if (!split) return std::nullopt;
  return std::move(split->classes);
}

std::optional<EmbeddingCertificate> partial_cube(const MetricGraph& g) {
  const auto split = djokovic_winkler(g);
  if (!split) return std::nullopt;
  EmbeddingCertificate cert(1, split->classes.count, g.vertex_count());
  for (std::size_t c = 0; c < split->classes.count; ++c)
    for (std::size_t x = 0; x < g.vertex_count(); ++x)
      if (split->far_side[c][x]) cert.set(static_cast<Vertex>(x), c);
  CheckOptions all_pairs;
  all_pairs.exhaustive_limit = std::numeric_limits<std::size_t>::max();
  if (!check_certificate(g, cert, all_pairs)) return std::nullopt;
  return cert;
}

std::size_t CutDecomposition::occurrences() const {
  std::size_t total = 0;
  for (int k : multiplicity) total += static_cast<std::size_t>(k);
  return total;
}

EmbeddingCertificate CutDecomposition::certificate() const {
  const std::size_t n = vertex_count;
  EmbeddingCertificate cert(scale, occurrences(), n);
  std::size_t coord = 0;
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (int k = 0; k < multiplicity[i]; ++k, ++coord)
      for (std::size_t x = 0; x < n; ++x)
        if (cuts[i][x]) cert.set(static_cast<Vertex>(x), coord);
  return cert;
}

namespace {

class ConvexCutEnumerator {
 public:
  explicit ConvexCutEnumerator(const MetricGraph& g) : g_(g), d_(g.distances()), n_(g.vertex_count()) {}

  std::vector<VertexSet> run() {
    for (const auto& [u, v] : g_.edges()) {
      Sides sides{VertexSet(n_), VertexSet(n_), {}, {}};
      std::vector<Vertex> open;
      std::vector<Vertex> near;
      std::vector<Vertex> far;
      for (std::size_t x = 0; x < n_; ++x) {
        const auto du = d_.at(u, static_cast<Vertex>(x));
        const auto dv = d_.at(v, static_cast<Vertex>(x));
        if (du < dv) near.push_back(static_cast<Vertex>(x));
        if (dv < du) far.push_back(static_cast<Vertex>(x));
        if (du == dv) open.push_back(static_cast<Vertex>(x));
      }
      if (!add_all(sides.a, sides.a_members, sides.b, near)) continue;
      if (!add_all(sides.b, sides.b_members, sides.a, far)) continue;
      branch(sides, open, 0);
    }
    return {found_.begin(), found_.end()};
  }

 private:
  struct Sides {
    VertexSet a;
    VertexSet b;
    std::vector<Vertex> a_members;
    std::vector<Vertex> b_members;
  };

  bool add_all(VertexSet& side, std::vector<Vertex>& members, const VertexSet& other,
               const std::vector<Vertex>& xs) {
    for (Vertex x : xs)
      if (!side[x] && !add(side, members, other, x)) return false;
    return true;
  }

  // Adds x and closes the side under geodesic intervals; fails on meeting `other`.
  bool add(VertexSet& side, std::vector<Vertex>& members, const VertexSet& other, Vertex x) {
    if (other[x]) return false;
    std::vector<Vertex> queue{x};
    side.set(x);
    members.push_back(x);
    while (!queue.empty()) {
      const Vertex a = queue.back();
      queue.pop_back();
      const auto row_a = d_.row(a);
      for (std::size_t i = 0; i < members.size(); ++i) {
        const Vertex b = members[i];
        const auto dab = row_a[b];
        if (dab < 2) continue;
        const auto row_b = d_.row(b);
        for (std::size_t z = 0; z < n_; ++z) {
          if (side[z] || row_a[z] + row_b[z] != dab) continue;
          if (other[z]) return false;
          side.set(z);
          members.push_back(static_cast<Vertex>(z));
          queue.push_back(static_cast<Vertex>(z));
        }
      }
    }
    return true;
  }

  void branch(const Sides& sides, const std::vector<Vertex>& open, std::size_t i) {
    while (i < open.size() && (sides.a[open[i]] || sides.b[open[i]])) ++i;
    if (i == open.size()) {
      found_.insert(sides.a[0] ? sides.b : sides.a);
      return;
    }
    const Vertex x = open[i];
    {
      Sides next = sides;
      if (add(next.a, next.a_members, next.b, x)) branch(next, open, i + 1);
    }
    {
      Sides next = sides;
      if (add(next.b, next.b_members, next.a, x)) branch(next, open, i + 1);
    }
  }

  const MetricGraph& g_;
  const DistanceMatrix& d_;
  std::size_t n_;
  std::set<VertexSet> found_;
};

class ExactCover {
 public:
  ExactCover(const MetricGraph& g, std::vector<VertexSet> cuts, int scale, const ScaleSearchLimits& limits)
      : cuts_(std::move(cuts)), scale_(scale), limits_(limits), vertices_(g.vertex_count()) {
    const auto& edges = g.edges();
    need_.assign(edges.size(), scale);
    edge_cuts_.resize(edges.size());
    cut_edges_.resize(cuts_.size());
    for (std::size_t c = 0; c < cuts_.size(); ++c)
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (cuts_[c][edges[e].first] != cuts_[c][edges[e].second]) {
          cut_edges_[c].push_back(e);
          edge_cuts_[e].push_back(c);
        }
    forbidden_.assign(cuts_.size(), 0);
    multiplicity_.assign(cuts_.size(), 0);
  }

  ScaleSearchResult run() {
    ScaleSearchResult result;
    result.candidate_cuts = cuts_.size();
    descend(result);
    result.nodes = nodes_;
    result.complete = !stopped_;
    if (!result.solutions.empty()) {
      result.status = ScaleSearchResult::Status::Found;
    } else {
      result.status = stopped_ ? ScaleSearchResult::Status::Undecided : ScaleSearchResult::Status::None;
    }
    return result;
  }

 private:
  bool usable(std::size_t c) const {
    if (forbidden_[c]) return false;
    return std::all_of(cut_edges_[c].begin(), cut_edges_[c].end(), [&](std::size_t e) { return need_[e] > 0; });
  }

  void descend(ScaleSearchResult& result) {
    if (stopped_) return;
    if (++nodes_ > limits_.node_budget) {
      stopped_ = true;
      return;
    }
    std::optional<std::size_t> pick;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t e = 0; e < need_.size(); ++e) {
      if (need_[e] == 0) continue;
      std::size_t options = 0;
      for (std::size_t c : edge_cuts_[e]) options += usable(c) ? 1 : 0;
      if (options < best) {
        best = options;
        pick = e;
        if (options == 0) return;
      }
    }
    if (!pick) {
      record(result);
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t c : edge_cuts_[*pick]) {
      if (!usable(c)) continue;
      for (std::size_t e : cut_edges_[c]) --need_[e];
      ++multiplicity_[c];
      descend(result);
      --multiplicity_[c];
      for (std::size_t e : cut_edges_[c]) ++need_[e];
      if (stopped_) break;
      ++forbidden_[c];
      tried.push_back(c);
    }
    for (std::size_t c : tried) --forbidden_[c];
  }

  void record(ScaleSearchResult& result) {
    CutDecomposition dec;
    dec.scale = scale_;
    dec.vertex_count = vertices_;
    for (std::size_t c = 0; c < cuts_.size(); ++c) {
      if (multiplicity_[c] == 0) continue;
      dec.cuts.push_back(cuts_[c]);
      dec.multiplicity.push_back(multiplicity_[c]);
    }
    result.solutions.push_back(std::move(dec));
    if (result.solutions.size() >= limits_.max_solutions) stopped_ = true;
  }

  std::vector<VertexSet> cuts_;
  int scale_;
  ScaleSearchLimits limits_;
  std::size_t vertices_;
  std::vector<int> need_;
  std::vector<std::vector<std::size_t>> edge_cuts_;
  std::vector<std::vector<std::size_t>> cut_edges_;
  std::vector<int> forbidden_;
  std::vector<int> multiplicity_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace

std::vector<VertexSet> convex_cuts(const MetricGraph& g) { return ConvexCutEnumerator(g).run(); }

ScaleSearchResult scale_search(const MetricGraph& g, int scale, const ScaleSearchLimits& limits) {
  if (scale < 1) throw std::invalid_argument("scale must be positive");
  ScaleSearchResult result;
  if (g.vertex_count() > limits.max_vertices) return result;
  if (g.vertex_count() <= 1) {
    result.status = ScaleSearchResult::Status::Found;
    CutDecomposition empty;
    empty.scale = scale;
    empty.vertex_count = g.vertex_count();
    result.solutions.push_back(empty);
    result.complete = true;
    return result;
  }
  return ExactCover(g, convex_cuts(g), scale, limits).run();
}

ScaleSearchResult scale2_search(const MetricGraph& g, const ScaleSearchLimits& limits) {
  return scale_search(g, 2, limits);
}

}  // namespace wythoff
