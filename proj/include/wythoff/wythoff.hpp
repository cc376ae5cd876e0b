#pragma once

#include <vector>

#include "wythoff/face_complex.hpp"
#include "wythoff/type_subset.hpp"

namespace wythoff {

/// The Wythoffian K(V) together with the flag of K that each of its faces is.
struct Wythoffian {
  FaceComplex complex;
  /// flags[f] is the chain of K realizing face f (sorted face ids of K).
  std::vector<Flag> flags;
  /// types[f] is the type of flags[f]; always essential for V.
  std::vector<TypeSubset> types;
};

/// Builds K(V): faces are the flags of K whose type is essential for V,
/// F' < F when t(F') strictly precedes t(F) and F u F' is a chain, and
/// dim(F) = d + 1 - |M([t(F)])|.
///
/// The relation is checked to be transitive and its Hasse diagram is checked
/// against the dimension formula (via the FaceComplex invariants); failures
/// throw StructuralError. Faces are numbered by (dim, type, flag).
Wythoffian wythoffian(const FaceComplex& k, TypeSubset base);

}  // namespace wythoff
