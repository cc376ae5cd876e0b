#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace wythoff {

/// A subset of {0,...,d} stored as a bitmask; bit k set means k is a member.
class TypeSubset {
 public:
  static constexpr int kMaxElement = 31;

  constexpr TypeSubset() = default;
  constexpr explicit TypeSubset(std::uint32_t bits) : bits_(bits) {}
  TypeSubset(std::initializer_list<int> members);

  /// {0,...,d}
  static TypeSubset full(int d);
  static TypeSubset single(int k);
  /// Parses "0,2" or "{0,2}".
  static TypeSubset parse(const std::string& text);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;
  bool contains(int k) const;
  int min() const;
  int max() const;
  std::vector<int> members() const;

  TypeSubset with(int k) const;
  TypeSubset without(int k) const;
  bool subset_of(TypeSubset other) const { return (bits_ & ~other.bits_) == 0; }
  /// True when every member lies in {0,...,d}.
  bool within(int d) const;
  /// {d - v | v in this}
  TypeSubset reflected(int d) const;

  TypeSubset operator|(TypeSubset o) const { return TypeSubset(bits_ | o.bits_); }
  TypeSubset operator&(TypeSubset o) const { return TypeSubset(bits_ & o.bits_); }

  std::string to_string() const;

  friend constexpr bool operator==(TypeSubset, TypeSubset) = default;
  friend constexpr auto operator<=>(TypeSubset a, TypeSubset b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// All nonempty subsets of {0,...,d}, in increasing bitmask order.
std::vector<TypeSubset> nonempty_subsets(int d);

/// True iff `blocker` blocks `target` from `from`: for every u in target and
/// v in from there is some u' in blocker lying between u and v (inclusive).
/// Throws std::domain_error for empty arguments or members outside {0..d}.
bool blocks(TypeSubset blocker, TypeSubset target, TypeSubset from, int d);

/// One class of the blocking equivalence, with its smallest and largest members.
struct BlockingClass {
  std::vector<TypeSubset> members;
  TypeSubset smallest;  // m(X)
  TypeSubset largest;   // M(X)
};

/// The blocking preorder on nonempty subsets of {0..d} relative to a fixed
/// base subset, its equivalence classes, and the essential subsets (class
/// minima) ordered by strict blocking.
class EssentialFamily {
 public:
  EssentialFamily(TypeSubset base, int d);

  TypeSubset base() const { return base_; }
  int dimension() const { return d_; }
  const std::vector<BlockingClass>& classes() const { return classes_; }
  /// Essential subsets in increasing bitmask order.
  const std::vector<TypeSubset>& essential() const { return essential_; }

  bool is_essential(TypeSubset u) const;
  /// U' <= U in the blocking preorder.
  bool preceq(TypeSubset lower, TypeSubset upper) const;
  /// U' < U: U' blocks U but not conversely.
  bool precedes(TypeSubset lower, TypeSubset upper) const;
  const BlockingClass& class_of(TypeSubset u) const;
  TypeSubset smallest(TypeSubset u) const { return class_of(u).smallest; }
  TypeSubset largest(TypeSubset u) const { return class_of(u).largest; }
  /// Dimension carried by faces of type u in the Wythoffian: d + 1 - |M([u])|.
  int face_dimension(TypeSubset u) const;

 private:
  std::size_t index(TypeSubset u) const { return u.bits() - 1; }

  TypeSubset base_;
  int d_;
  std::vector<char> le_;  // row-major over nonempty subsets, (lower, upper)
  std::vector<int> class_index_;
  std::vector<BlockingClass> classes_;
  std::vector<TypeSubset> essential_;
};

EssentialFamily essential_family(TypeSubset base, int d);

struct BoundaryTypes {
  std::vector<TypeSubset> edge_types;
  std::vector<TypeSubset> facet_types;
};

/// Types of the 1-faces (one per member k of the base, obtained by replacing
/// k with its neighbours) and of the facets of the Wythoffian.
BoundaryTypes boundary_types(TypeSubset base, int d);

/// Number of Wythoffians of a d-complex, merged under V -> d-V when the
/// complex is self-dual.
std::uint64_t wythoff_type_count(int d, bool self_dual);

}  // namespace wythoff
