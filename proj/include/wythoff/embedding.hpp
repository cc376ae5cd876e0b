#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "wythoff/certificate.hpp"
#include "wythoff/metric_graph.hpp"

namespace wythoff {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Djokovic-Winkler classes, one per hypercube coordinate.
struct ThetaClasses {
  std::vector<int> edge_class;  // indexed like MetricGraph::edges()
  std::size_t count = 0;
};

/// The Theta classes of a partial cube, or nothing when G is not one.
std::optional<ThetaClasses> theta_classes(const MetricGraph& g);

/// Scale-1 certificate with one coordinate per Theta class, vertex 0
/// labelled zero. Every returned certificate has been verified on all pairs.
std::optional<EmbeddingCertificate> partial_cube(const MetricGraph& g);

/// A cut is stored as the side that does not contain vertex 0.
struct CutDecomposition {
  int scale = 1;
  std::size_t vertex_count = 0;
  std::vector<VertexSet> cuts;
  std::vector<int> multiplicity;

  std::size_t occurrences() const;
  /// One coordinate per cut occurrence.
  EmbeddingCertificate certificate() const;
};

/// All cuts whose two sides are both geodesically convex. Only these can
/// occur in a decomposition of a multiple of the path metric.
std::vector<VertexSet> convex_cuts(const MetricGraph& g);

struct ScaleSearchLimits {
  std::size_t max_vertices = 128;
  std::uint64_t node_budget = 5'000'000;
  /// Stop after this many decompositions (each multiset is found once).
  std::size_t max_solutions = 1;
};

struct ScaleSearchResult {
  enum class Status { Found, None, Undecided };

  Status status = Status::Undecided;
  std::vector<CutDecomposition> solutions;
  std::uint64_t nodes = 0;
  std::size_t candidate_cuts = 0;
  /// True when every decomposition has been listed.
  bool complete = false;
};

/// Decomposes scale * dist into convex cuts with multiplicities: every edge
/// must be cut exactly `scale` times. Status None is a proof of exhaustion;
/// Undecided means a limit was hit.
ScaleSearchResult scale_search(const MetricGraph& g, int scale, const ScaleSearchLimits& limits = {});

ScaleSearchResult scale2_search(const MetricGraph& g, const ScaleSearchLimits& limits = {});

}  // namespace wythoff
