#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wythoff/certificate.hpp"
#include "wythoff/embedding.hpp"
#include "wythoff/inequalities.hpp"
#include "wythoff/metric_graph.hpp"

namespace wythoff {

/// One isometric embedding found for a graph.
struct EmbeddingClaim {
  enum class Family { Hypercube, HalfCube, Johnson };

  Family family = Family::Hypercube;
  std::size_t m = 0;
  std::size_t n = 0;  // Johnson weight
  BalanceProfile balance;
  EmbeddingCertificate certificate{1, 0, 0};

  /// "H6", "½H6" or "J(10,5)".
  std::string label() const;
  /// "H 6, equicut", "halfcube 12, q=1", "J(10,5), neither" ...
  std::string description() const;
};

struct EmbedOptions {
  ScaleSearchLimits search{.max_vertices = 128, .node_budget = 5'000'000, .max_solutions = 4};
  /// Breadth-first windows tried in turn by the 5-gonal search.
  std::vector<std::size_t> windows{40, 64, 96};
  /// Used when the scale-2 search hits a limit.
  std::optional<EmbeddingCertificate> golden;
};

struct GraphVerdict {
  enum class Kind { Embedded, NotEmbeddable, Undecided };

  Kind kind = Kind::Undecided;
  /// Distinct (label, balance) pairs in the order found.
  std::vector<EmbeddingClaim> embeddings;
  std::optional<InequalityViolation> witness;
  /// The scale-2 search ran to completion without a decomposition.
  bool exhausted = false;
  /// The embedding came from a stored certificate.
  bool golden = false;

  /// "H6 yes", "J(4,1) q=1; ½H3 yes", "non-5-gonal", "no half-cube", "undecided".
  std::string summary() const;
};

/// partial_cube, then scale2_search, then the 5-gonal search.
GraphVerdict embed_graph(const MetricGraph& g, const EmbedOptions& options = {});

nlohmann::json to_json(const GraphVerdict& v);

}  // namespace wythoff
