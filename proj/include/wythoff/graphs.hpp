#pragma once

#include "wythoff/face_complex.hpp"
#include "wythoff/metric_graph.hpp"

namespace wythoff {

/// Vertices and edges of K.
MetricGraph skeleton(const FaceComplex& k);
/// Facets of K, adjacent when they share a ridge.
MetricGraph dual_skeleton(const FaceComplex& k);

MetricGraph complete_graph(int n);
MetricGraph path_graph(int n);
MetricGraph cycle_graph(int n);
/// The m-cube H(m, 2); vertex i is the bitmask i.
MetricGraph hypercube_graph(int m);
/// Even-weight vertices of the m-cube at distance 2, listed in increasing mask order.
MetricGraph half_cube_graph(int m);
/// n-subsets of an m-set adjacent when they differ in one element, in colex order.
MetricGraph johnson_graph(int m, int n);
/// Cocktail party K_{k x 2}: vertex 2i+1 is the antipode of 2i.
MetricGraph cocktail_party_graph(int k);
/// K_n with the edges of a cycle on its first c vertices removed.
MetricGraph complete_minus_cycle(int n, int c);
/// The m-cube with vertex 2^m - 1 (antipode of 0) removed, together with vertex 0.
MetricGraph hypercube_minus_antipodes(int m);

}  // namespace wythoff
