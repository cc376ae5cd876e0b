#include "wythoff/metric_graph.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include "wythoff/errors.hpp"

namespace wythoff {

struct MetricGraph::Cache {
  std::once_flag once;
  DistanceMatrix matrix;
};

MetricGraph::MetricGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), cache_(std::make_shared<Cache>()) {
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_) {
      throw StructuralError("edge endpoint out of range");
    }
    if (u == v) throw StructuralError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw StructuralError("duplicate edge");
  }
  offsets_.assign(n_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  targets_.resize(2 * edges_.size());
  auto cursor = offsets_;
  for (const auto& [u, v] : edges_) {
    targets_[cursor[u]++] = v;
    targets_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

bool MetricGraph::has_edge(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void MetricGraph::bfs_into(Vertex source, std::vector<std::uint16_t>& dist,
                           std::vector<Vertex>& queue) const {
  dist.assign(n_, kUnreachable);
  queue.resize(n_);
  std::size_t head = 0;
  std::size_t tail = 0;
  dist[source] = 0;
  queue[tail++] = source;
  while (head < tail) {
    const Vertex u = queue[head++];
    const auto next = static_cast<std::uint16_t>(dist[u] + 1);
    for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
      const Vertex w = targets_[i];
      if (dist[w] == kUnreachable) {
        dist[w] = next;
        queue[tail++] = w;
      }
    }
  }
}

std::vector<std::uint16_t> MetricGraph::bfs(Vertex source) const {
  std::vector<std::uint16_t> dist;
  std::vector<Vertex> queue;
  bfs_into(source, dist, queue);
  return dist;
}

bool MetricGraph::is_connected() const {
  if (n_ == 0) return true;
  const auto dist = bfs(0);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

bool MetricGraph::is_bipartite() const {
  std::vector<int> color(n_, -1);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n_; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

DistanceMatrix all_pairs_distances(const MetricGraph& g) {
  const auto n = g.vertex_count();
  std::vector<std::uint16_t> entries(n * n);
  std::vector<std::uint16_t> row;
  std::vector<Vertex> queue;
  for (std::size_t s = 0; s < n; ++s) {
    g.bfs_into(static_cast<Vertex>(s), row, queue);
    if (std::find(row.begin(), row.end(), kUnreachable) != row.end()) {
      throw StructuralError("graph is disconnected");
    }
    std::copy(row.begin(), row.end(), entries.begin() + static_cast<std::ptrdiff_t>(s * n));
  }
  return DistanceMatrix(n, std::move(entries));
}

const DistanceMatrix& MetricGraph::distances() const {
  if (n_ > matrix_cap_) {
    throw ResourceError("distance matrix for " + std::to_string(n_) +
                        " vertices exceeds the cap of " + std::to_string(matrix_cap_));
  }
  std::call_once(cache_->once, [this] { cache_->matrix = all_pairs_distances(*this); });
  return cache_->matrix;
}

int MetricGraph::diameter() const {
  int best = 0;
  std::vector<std::uint16_t> row;
  std::vector<Vertex> queue;
  for (std::size_t s = 0; s < n_; ++s) {
    bfs_into(static_cast<Vertex>(s), row, queue);
    for (auto d : row) {
      if (d == kUnreachable) throw StructuralError("graph is disconnected");
      best = std::max(best, static_cast<int>(d));
    }
  }
  return best;
}

MetricGraph MetricGraph::induced(const std::vector<Vertex>& keep) const {
  std::vector<Vertex> position(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> kept;
  for (const auto& [u, v] : edges_) {
    if (position[u] >= 0 && position[v] >= 0) kept.emplace_back(position[u], position[v]);
  }
  return MetricGraph(keep.size(), std::move(kept));
}

nlohmann::json to_json(const MetricGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

MetricGraph graph_from_json(const nlohmann::json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  return MetricGraph(j.at("n").get<std::size_t>(), std::move(edges));
}

}  // namespace wythoff
