#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wythoff/type_subset.hpp"

namespace wythoff {

using FaceId = int;

/// A chain of faces, canonicalized as a sorted tuple of face ids.
using Flag = std::vector<FaceId>;

/// A ranked poset of faces stored through its Hasse covers.
///
/// Faces are the integers 0..size()-1. Construction checks the d-complex
/// invariants: every cover raises the dimension by exactly one, minimal faces
/// have dimension 0, maximal faces have dimension d, and (for d >= 1) the
/// Hasse diagram is connected. Violations throw StructuralError.
///
/// The strict upper sets used for chain enumeration are computed on first use
/// and shared between copies; the complex itself is immutable.
class FaceComplex {
 public:
  FaceComplex(int d, std::vector<int> dims, std::vector<std::pair<FaceId, FaceId>> covers);

  int dimension() const { return d_; }
  std::size_t size() const { return dims_.size(); }
  int dim(FaceId f) const { return dims_[f]; }
  const std::vector<int>& dims() const { return dims_; }

  std::span<const FaceId> faces_of_dim(int k) const;
  std::span<const FaceId> up_covers(FaceId f) const;
  std::span<const FaceId> down_covers(FaceId f) const;
  /// All (lower, upper) cover pairs ordered by (lower, upper).
  std::vector<std::pair<FaceId, FaceId>> covers() const;
  std::size_t cover_count() const { return up_targets_.size(); }

  /// Strict upper set of f, sorted by (dim, id).
  std::span<const FaceId> above(FaceId f) const;
  bool less(FaceId lower, FaceId upper) const;

  /// Number of faces of each dimension 0..d.
  std::vector<std::size_t> f_vector() const;

  /// Every flag of size d lies in exactly two maximal flags.
  bool is_polytope() const;

  /// Calls `visit` with every chain whose set of dimensions equals `type`;
  /// faces are passed in increasing dimension.
  void for_each_flag(TypeSubset type,
                     const std::function<void(std::span<const FaceId>)>& visit) const;
  std::size_t count_flags(TypeSubset type) const;
  std::vector<Flag> flags(TypeSubset type) const;

 private:
  struct UpperSets;
  const UpperSets& upper_sets() const;

  int d_;
  std::vector<int> dims_;
  std::vector<std::size_t> by_dim_offsets_;
  std::vector<FaceId> by_dim_;
  std::vector<std::size_t> up_offsets_;
  std::vector<FaceId> up_targets_;
  std::vector<std::size_t> down_offsets_;
  std::vector<FaceId> down_targets_;
  std::shared_ptr<UpperSets> upper_;
};

/// Order reversed, dimensions replaced by d - dim. Face ids are unchanged.
FaceComplex dual(const FaceComplex& k);

/// `{d, faces:[{id,dim}], covers:[[lo,hi]]}` with faces sorted by (dim, id).
nlohmann::json to_json(const FaceComplex& k);
FaceComplex complex_from_json(const nlohmann::json& j);

}  // namespace wythoff
