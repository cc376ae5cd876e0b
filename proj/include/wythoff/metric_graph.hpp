#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

namespace wythoff {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::uint16_t kUnreachable = 0xFFFF;

/// Dense all-pairs distance table with 16-bit entries.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<std::uint16_t> entries)
      : n_(n), entries_(std::move(entries)) {}

  std::size_t size() const { return n_; }
  std::uint16_t at(Vertex u, Vertex v) const {
    return entries_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
  }
  std::span<const std::uint16_t> row(Vertex u) const {
    return {entries_.data() + static_cast<std::size_t>(u) * n_, n_};
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint16_t> entries_;
};

/// A finite simple undirected graph with shortest-path distances.
///
/// Edges are normalized to (min, max) and kept sorted; adjacency is stored in
/// compressed rows. The dense distance table is computed once on first use
/// (only up to `matrix_cap()` vertices); larger graphs go through `bfs`.
class MetricGraph {
 public:
  static constexpr std::size_t kDefaultMatrixCap = 6000;

  MetricGraph() : MetricGraph(0, {}) {}
  MetricGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  bool is_connected() const;
  bool is_bipartite() const;

  /// Distances from `source`; unreachable vertices get kUnreachable.
  std::vector<std::uint16_t> bfs(Vertex source) const;
  void bfs_into(Vertex source, std::vector<std::uint16_t>& dist, std::vector<Vertex>& queue) const;

  std::size_t matrix_cap() const { return matrix_cap_; }
  void set_matrix_cap(std::size_t cap) { matrix_cap_ = cap; }
  bool has_distance_matrix_room() const { return n_ <= matrix_cap_; }

  /// Throws StructuralError when disconnected, ResourceError above the cap.
  const DistanceMatrix& distances() const;
  std::uint16_t distance(Vertex u, Vertex v) const { return distances().at(u, v); }
  int diameter() const;

  MetricGraph induced(const std::vector<Vertex>& keep) const;

 private:
  struct Cache;

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::size_t matrix_cap_ = kDefaultMatrixCap;
  std::shared_ptr<Cache> cache_;
};

/// BFS from every vertex. Throws StructuralError when disconnected.
DistanceMatrix all_pairs_distances(const MetricGraph& g);

/// `{n, edges:[[u,v]]}`
nlohmann::json to_json(const MetricGraph& g);
MetricGraph graph_from_json(const nlohmann::json& j);

}  // namespace wythoff
