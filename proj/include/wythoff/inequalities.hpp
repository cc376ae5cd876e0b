#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "wythoff/metric_graph.hpp"

namespace wythoff {

/// An integer vector b with sum 1 and sum_{i<j} b_i b_j d(i,j) > 0.
struct InequalityViolation {
  std::vector<Vertex> support;
  std::vector<int> b;  // coefficient of support[i]
  long value = 0;
};

/// `{support, b, value}`
nlohmann::json to_json(const InequalityViolation& v);

/// Recomputes sum_{i<j} b_i b_j d(i,j) from graph distances.
long inequality_value(const MetricGraph& g, const std::vector<Vertex>& support, const std::vector<int>& b);

struct FiveGonalOptions {
  /// Only the first `window` vertices in breadth-first order from vertex 0
  /// are used; 0 means all of them.
  std::size_t window = 0;
  /// Maximum number of 5-subsets examined; 0 means no limit.
  std::uint64_t budget = 0;
};

struct FiveGonalResult {
  enum class Status { Violation, Holds, Inconclusive };

  Status status = Status::Inconclusive;
  std::optional<InequalityViolation> violation;
  std::uint64_t subsets = 0;
};

/// Searches 5-subsets in colex order of breadth-first rank, trying each
/// choice of the two vertices weighted -1. Holds only when every subset of
/// the whole graph was examined.
FiveGonalResult five_gonal_search(const MetricGraph& g, const FiveGonalOptions& options = {});

/// Exhaustive form; requires at least 5 vertices.
std::optional<InequalityViolation> five_gonal_violation(const MetricGraph& g);

struct HypermetricLimits {
  std::size_t max_vertices = 14;
  int max_norm = 7;
};

struct HypermetricResult {
  std::optional<InequalityViolation> violation;
  /// False when the graph exceeds max_vertices and only the first
  /// max_vertices vertices in breadth-first order were used.
  bool complete = true;
  std::uint64_t vectors = 0;
};

/// All integer b with sum 1 and sum |b_i| <= max_norm.
HypermetricResult hypermetric_check(const MetricGraph& g, int max_norm,
                                    const HypermetricLimits& limits = {});

}  // namespace wythoff
