#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wythoff/certificate.hpp"
#include "wythoff/embedding.hpp"
#include "wythoff/inequalities.hpp"
#include "wythoff/metric_graph.hpp"

namespace wythoff {

/// One factor of the canonical metric representation together with the
/// projection of G onto it.
struct Factor {
  MetricGraph graph;
  std::vector<Vertex> projection;  // vertex of G -> vertex of the factor
};

/// Graham-Winkler factorization: one factor per class of the transitive
/// closure of Theta, obtained by contracting every edge outside the class.
/// The sum of factor distances is checked against dist on all pairs;
/// throws StructuralError if it fails and ResourceError above the matrix cap.
std::vector<Factor> gw_factorize(const MetricGraph& g);

/// K_2, a cocktail party graph K_{k x 2}, or neither.
std::string factor_shape(const MetricGraph& f);

struct L1Limits {
  int max_scale = 8;
  /// Breadth-first window for the 5-gonal search on G itself.
  std::size_t five_gonal_window = 40;
  ScaleSearchLimits search{.max_vertices = 128, .node_budget = 2'000'000, .max_solutions = 1};
};

struct FactorVerdict {
  std::size_t vertices = 0;
  std::string shape;
  /// Smallest scale found, 0 if none up to the limit.
  int min_scale = 0;
  /// True when every scale below min_scale (or up to the limit) was refuted.
  bool decided = true;
};

struct L1Verdict {
  enum class Kind { L1, NotL1, Undecided };

  Kind kind = Kind::Undecided;
  int scale = 0;
  /// False when a smaller scale was left undecided for some factor.
  bool minimal = true;
  std::optional<EmbeddingCertificate> certificate;
  /// On vertices of G, or of factors[violating_factor] when that is set.
  std::optional<InequalityViolation> violation;
  std::optional<std::size_t> violating_factor;
  std::vector<FactorVerdict> factors;
};

/// Factorizes, finds the admissible scales of each factor up to
/// limits.max_scale, and takes the least scale admitted by all factors.
/// A 5-gonal violation gives NotL1.
L1Verdict l1_verdict(const MetricGraph& g, const L1Limits& limits = {});

}  // namespace wythoff
