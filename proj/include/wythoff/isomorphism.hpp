#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wythoff/face_complex.hpp"
#include "wythoff/metric_graph.hpp"

namespace wythoff {

/// A vertex-coloured graph; isomorphisms must preserve colours.
struct ColoredGraph {
  MetricGraph graph;
  std::vector<int> colors;
};

/// Colour refinement on both graphs at once, then individualization with
/// backtracking. Returns the vertex map a -> b when one exists.
/// Colour refinement on the disjoint union leaves every class balanced.
/// Necessary for isomorphism, not sufficient.
bool refinement_equivalent(const ColoredGraph& a, const ColoredGraph& b);

std::optional<std::vector<Vertex>> find_isomorphism(const ColoredGraph& a, const ColoredGraph& b);

inline constexpr std::size_t kGraphIsomorphismCap = 2000;
inline constexpr std::size_t kComplexIsomorphismCap = 5000;

/// Exact test; throws ResourceError above `cap` vertices.
bool is_isomorphic(const MetricGraph& g, const MetricGraph& h, std::size_t cap = kGraphIsomorphismCap);

struct ComplexComparison {
  bool isomorphic;
  /// False when only invariants (face counts per dimension, flag counts per
  /// type, colour refinement) were compared because the complexes exceed
  /// the exact cap.
  bool exact;
};

/// Compares the Hasse diagrams coloured by dimension.
ComplexComparison compare_complexes(const FaceComplex& a, const FaceComplex& b,
                                    std::size_t exact_cap = kComplexIsomorphismCap);

bool is_isomorphic(const FaceComplex& a, const FaceComplex& b,
                   std::size_t exact_cap = kComplexIsomorphismCap);

/// The Hasse diagram of k as a graph coloured by face dimension.
ColoredGraph hasse_graph(const FaceComplex& k);

}  // namespace wythoff
