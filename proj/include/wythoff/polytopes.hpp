#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wythoff/coxeter.hpp"
#include "wythoff/face_complex.hpp"

namespace wythoff {

/// A regular convex polytope, by family and (where it applies) dimension or
/// number of polygon sides. A d-polytope is a (d-1)-complex of proper faces.
struct RegularPolytopeSpec {
  enum class Kind { Simplex, Cross, Cube, Polygon, Icosahedron, Dodecahedron, Cell24, Cell600, Cell120 };

  Kind kind;
  int n = 0;  // dimension for Simplex/Cross/Cube, sides for Polygon

  /// Accepts a3, b4, c4, p5, ico, dodeca, 24cell, 600cell, 120cell and the
  /// spelled-out forms simplex(3), cross(4), cube(4), polygon(5),
  /// icosahedron, dodecahedron, cell24, cell600, cell120.
  static RegularPolytopeSpec parse(const std::string& text);

  /// Short CLI name, e.g. "b4".
  std::string name() const;
  /// Dimension of the polytope; the face complex has dimension one less.
  int dimension() const;
  /// Schlaefli symbol, e.g. {3,5} for the icosahedron.
  std::vector<int> schlafli() const;
  bool self_dual() const;
};

/// Proper nonempty subsets of {0..d}, ordered by inclusion.
FaceComplex simplex(int d);
/// Signed subsets {+-i1,...,+-ik} with distinct indices, 1 <= k <= d.
FaceComplex cross_polytope(int d);
/// dual(cross_polytope(d))
FaceComplex cube(int d);
/// p vertices and p edges; edge p+i joins vertices i and i+1 mod p.
FaceComplex polygon(int p);

/// A polytope built from the cosets of the maximal standard parabolic
/// subgroups of a Coxeter group with a path diagram.
struct CosetPolytope {
  FaceComplex complex;
  /// element_flags[w]: the maximal flag {w<S - s_i> : i} as sorted face ids.
  std::vector<Flag> element_flags;
};

/// i-faces are the cosets w<S - s_i>; incidence is nonempty intersection.
/// Throws UnsupportedError unless the diagram is a path.
CosetPolytope coset_polytope(const CoxeterGroup& w);

CosetPolytope regular_from_coxeter(const RegularPolytopeSpec& spec,
                                   std::size_t cap = CoxeterGroup::kDefaultCap);

/// Combinatorial constructions for simplex, cross, cube and polygon; cosets
/// for the others.
FaceComplex make_polytope(const RegularPolytopeSpec& spec);

}  // namespace wythoff
