#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wythoff/exact_scalar.hpp"
#include "wythoff/metric_graph.hpp"
#include "wythoff/type_subset.hpp"

namespace wythoff {

class EmbeddingCertificate;

/// Symmetric Coxeter matrix; m(i,i) = 1 and m(i,j) >= 2 otherwise.
class CoxeterMatrix {
 public:
  CoxeterMatrix(int rank, std::vector<int> entries);

  int rank() const { return rank_; }
  int at(int i, int j) const { return entries_[static_cast<std::size_t>(i * rank_ + j)]; }
  /// The diagram is a path 0 - 1 - ... - (rank-1) with no other edges.
  bool is_path() const;

 private:
  int rank_;
  std::vector<int> entries_;
};

/// A finite irreducible type: A_n, B_n, D_n, E_n, F4, H3, H4 or I2(p).
struct CoxeterType {
  enum class Family { A, B, D, E, F, H, I };

  Family family;
  int n;  // rank, or p for I2(p)

  /// Accepts "A3", "b4", "D5", "E6", "F4", "H3", "H4", "I2(7)", "I2_7".
  static CoxeterType parse(const std::string& text);
  std::string name() const;
  int rank() const { return family == Family::I ? 2 : n; }
  CoxeterMatrix matrix() const;
  /// Number of reflections from the closed-form count for this type.
  std::size_t reflection_count_formula() const;
};

/// Coxeter matrix of a path diagram with the given consecutive labels.
CoxeterMatrix linear_coxeter_matrix(const std::vector<int>& labels);

using ElementId = std::uint32_t;
using ExactMatrix = std::vector<ExactScalar>;

struct ExactMatrixHash {
  std::size_t operator()(const ExactMatrix& m) const;
};

/// A finite Coxeter group with every element enumerated.
///
/// Elements are stored as exact matrices of a faithful linear representation
/// and numbered in breadth-first order from the identity (id 0), so ids are
/// sorted by word length. Right multiplication by generators is tabulated.
class CoxeterGroup {
 public:
  static constexpr std::size_t kDefaultCap = 20000;

  explicit CoxeterGroup(const CoxeterType& type, std::size_t cap = kDefaultCap);
  CoxeterGroup(std::string name, CoxeterMatrix m, std::size_t cap = kDefaultCap);

  const std::string& name() const { return name_; }
  int rank() const { return m_.rank(); }
  const CoxeterMatrix& coxeter_matrix() const { return m_; }
  std::size_t order() const { return length_.size(); }

  ElementId identity() const { return 0; }
  ElementId generator(int s) const { return right_[static_cast<std::size_t>(s)]; }
  /// w * s
  ElementId times(ElementId w, int s) const {
    return right_[static_cast<std::size_t>(w) * static_cast<std::size_t>(rank()) +
                  static_cast<std::size_t>(s)];
  }
  /// s * w
  ElementId times_left(int s, ElementId w) const { return inverse(times(inverse(w), s)); }
  ElementId inverse(ElementId w) const { return inverse_[w]; }
  ElementId multiply(ElementId a, ElementId b) const;
  int length(ElementId w) const { return length_[w]; }
  /// A reduced word, read left to right.
  std::vector<int> word(ElementId w) const;
  ElementId longest_element() const { return static_cast<ElementId>(order() - 1); }

  const ExactMatrix& matrix(ElementId w) const { return matrices_[w]; }
  std::optional<ElementId> find(const ExactMatrix& m) const;
  /// Dimension of the representation.
  int degree() const { return degree_; }

 private:
  void enumerate(std::vector<ExactMatrix> generators, std::size_t cap);

  std::string name_;
  CoxeterMatrix m_;
  int degree_ = 0;
  std::vector<ExactMatrix> matrices_;
  std::unordered_map<ExactMatrix, ElementId, ExactMatrixHash> index_;
  std::vector<ElementId> right_;
  std::vector<ElementId> parent_;
  std::vector<int> last_generator_;
  std::vector<int> length_;
  std::vector<ElementId> inverse_;
};

/// The reflections T, sorted by element id.
class ReflectionSet {
 public:
  explicit ReflectionSet(const CoxeterGroup& w);

  std::size_t size() const { return elements_.size(); }
  const std::vector<ElementId>& elements() const { return elements_; }
  /// Position of `t` in elements(), if it is a reflection.
  std::optional<std::size_t> index_of(ElementId t) const;

 private:
  std::vector<ElementId> elements_;
  std::vector<int> position_;
};

ReflectionSet reflections(const CoxeterGroup& w);

/// Vertex w adjacent to w*s for every generator s; vertex ids are element ids.
MetricGraph cayley_graph(const CoxeterGroup& w);

/// Scale-1 labels: coordinate i of w is set when the i-th reflection lies in
/// the left inversion set of w.
EmbeddingCertificate inversion_embedding(const CoxeterGroup& w);

struct CosetPartition {
  std::vector<int> coset_of;  // element -> coset index (cosets numbered by smallest element)
  std::size_t coset_count = 0;
  std::size_t subgroup_order = 0;
};

/// Left cosets w<J> of the standard parabolic subgroup generated by J.
CosetPartition parabolic_cosets(const CoxeterGroup& w, TypeSubset j);

}  // namespace wythoff
