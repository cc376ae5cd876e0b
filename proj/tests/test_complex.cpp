#include <doctest.h>

#include <algorithm>
#include <set>

#include "wythoff/errors.hpp"
#include "wythoff/isomorphism.hpp"
#include "wythoff/polytopes.hpp"
#include "wythoff/wythoff.hpp"

using namespace wythoff;

namespace {

// Literal reading of the quantifiers, on explicit member lists.
bool blocks_oracle(const std::vector<int>& blocker, const std::vector<int>& target,
                   const std::vector<int>& from) {
  for (int u : target)
    for (int v : from) {
      bool hit = false;
      for (int w : blocker) hit = hit || (u <= w && w <= v) || (u >= w && w >= v);
      if (!hit) return false;
    }
  return true;
}

std::vector<std::vector<int>> all_subsets(int d) {
  std::vector<std::vector<int>> out;
  for (int x = 1; x < (1 << (d + 1)); ++x) {
    std::vector<int> s;
    for (int k = 0; k <= d; ++k)
      if (x & (1 << k)) s.push_back(k);
    out.push_back(s);
  }
  return out;
}

TypeSubset from_members(const std::vector<int>& m) {
  TypeSubset t;
  for (int k : m) t = t.with(k);
  return t;
}

std::set<TypeSubset> types_of_dim(const Wythoffian& w, int dim) {
  std::set<TypeSubset> out;
  for (FaceId f : w.complex.faces_of_dim(dim)) out.insert(w.types[f]);
  return out;
}

}  // namespace

TEST_CASE("type subsets parse and print") {
  CHECK(TypeSubset::parse("0,2") == TypeSubset{0, 2});
  CHECK(TypeSubset::parse("{1}") == TypeSubset::single(1));
  CHECK(TypeSubset{0, 2}.to_string() == "{0,2}");
  CHECK(TypeSubset{0, 1}.reflected(3) == TypeSubset{2, 3});
  CHECK(nonempty_subsets(3).size() == 15);
}

TEST_CASE("blocking matches the quantifier definition for d = 3") {
  const auto subsets = all_subsets(3);
  for (const auto& v : subsets)
    for (const auto& a : subsets)
      for (const auto& b : subsets)
        REQUIRE(blocks(from_members(a), from_members(b), from_members(v), 3) == blocks_oracle(a, b, v));
}

TEST_CASE("blocking is reflexive and rejects empty input") {
  for (TypeSubset v : nonempty_subsets(3))
    for (TypeSubset u : nonempty_subsets(3)) CHECK(blocks(u, u, v, 3));
  CHECK(blocks(TypeSubset{1}, TypeSubset{1}, TypeSubset{0, 2}, 3));
  CHECK_THROWS_AS(blocks(TypeSubset{}, TypeSubset{1}, TypeSubset{0}, 3), std::domain_error);
  CHECK_THROWS_AS(blocks(TypeSubset{4}, TypeSubset{1}, TypeSubset{0}, 3), std::domain_error);
}

TEST_CASE("class minima and maxima agree with direct search") {
  for (int d = 1; d <= 4; ++d) {
    for (TypeSubset v : nonempty_subsets(d)) {
      const auto family = essential_family(v, d);
      for (TypeSubset u : nonempty_subsets(d)) {
        // Smallest nonempty subset of u blocking u.
        std::vector<TypeSubset> blockers;
        for (TypeSubset s : nonempty_subsets(d))
          if (s.subset_of(u) && blocks(s, u, v, d)) blockers.push_back(s);
        TypeSubset least = blockers.front();
        for (TypeSubset s : blockers)
          if (s.size() < least.size()) least = s;
        for (TypeSubset s : blockers) REQUIRE(least.subset_of(s));
        CHECK(family.smallest(u) == least);
        // Largest subset blocked by u.
        TypeSubset most;
        for (TypeSubset s : nonempty_subsets(d))
          if (blocks(u, s, v, d)) most = most | s;
        CHECK(blocks(u, most, v, d));
        CHECK(family.largest(u) == most);
      }
    }
  }
}

TEST_CASE("base subset is the least essential subset") {
  for (int d = 1; d <= 4; ++d)
    for (TypeSubset v : nonempty_subsets(d)) {
      const auto family = essential_family(v, d);
      CHECK(family.is_essential(v));
      for (TypeSubset e : family.essential()) {
        CHECK(family.preceq(v, e));
        if (e != v) CHECK(family.precedes(v, e));
      }
      for (TypeSubset u : nonempty_subsets(d)) CHECK(family.is_essential(family.smallest(u)));
      for (const auto& cls : family.classes()) {
        CHECK(cls.smallest.subset_of(cls.largest));
        CHECK(blocks(cls.smallest, cls.largest, v, d));
        CHECK(blocks(cls.largest, cls.smallest, v, d));
      }
    }
  const auto full = essential_family(TypeSubset::full(3), 3);
  CHECK(full.largest(TypeSubset::full(3)) == TypeSubset::full(3));
}

TEST_CASE("boundary types") {
  const auto b = boundary_types(TypeSubset{0, 2}, 3);
  CHECK(b.edge_types == std::vector<TypeSubset>{TypeSubset{1, 2}, TypeSubset{0, 1, 3}});
  CHECK(boundary_types(TypeSubset{1}, 2).facet_types ==
        std::vector<TypeSubset>{TypeSubset{0}, TypeSubset{2}});
}

TEST_CASE("boundary types match the constructed Wythoffians") {
  for (const auto& k : {simplex(4), cross_polytope(4)}) {
    const int d = k.dimension();
    for (TypeSubset v : nonempty_subsets(d)) {
      const auto w = wythoffian(k, v);
      const auto b = boundary_types(v, d);
      CHECK(b.edge_types.size() == static_cast<std::size_t>(v.size()));
      CHECK(std::set<TypeSubset>(b.edge_types.begin(), b.edge_types.end()) == types_of_dim(w, 1));
      CHECK(std::set<TypeSubset>(b.facet_types.begin(), b.facet_types.end()) == types_of_dim(w, d));
    }
  }
}

TEST_CASE("Wythoffian type counts") {
  CHECK(wythoff_type_count(3, false) == 15);
  CHECK(wythoff_type_count(3, true) == 9);
  CHECK(wythoff_type_count(1, true) == 2);
  // Orbits of V -> d-V on nonempty subsets.
  for (int d = 1; d <= 8; ++d) {
    std::set<TypeSubset> orbits;
    for (TypeSubset v : nonempty_subsets(d)) orbits.insert(std::min(v, v.reflected(d)));
    CHECK(wythoff_type_count(d, true) == orbits.size());
  }
}

TEST_CASE("extreme Wythoffians recover the complex and its dual") {
  for (const auto& k : {simplex(3), cross_polytope(3), polygon(5), cross_polytope(4)}) {
    const int d = k.dimension();
    CHECK(is_isomorphic(wythoffian(k, TypeSubset{0}).complex, k));
    CHECK(is_isomorphic(wythoffian(k, TypeSubset{d}).complex, dual(k)));
  }
  const auto rhombi = wythoffian(cross_polytope(3), TypeSubset{0, 2});
  CHECK(rhombi.complex.faces_of_dim(0).size() == 24);
}

TEST_CASE("duality") {
  const auto k = cross_polytope(3);
  CHECK(is_isomorphic(dual(dual(k)), k));
  CHECK(is_isomorphic(dual(simplex(3)), simplex(3)));
  const auto c = dual(k);
  CHECK(c.faces_of_dim(2).size() == 6);
  CHECK(c.faces_of_dim(0).size() == 8);
}

TEST_CASE("Wythoffian vertices are the flags of the base type") {
  const auto k = cross_polytope(3);
  for (TypeSubset v : nonempty_subsets(2)) {
    const auto w = wythoffian(k, v);
    CHECK(w.complex.faces_of_dim(0).size() == k.count_flags(v));
    for (FaceId f : w.complex.faces_of_dim(0)) CHECK(w.types[f] == v);
    CHECK(w.complex.is_polytope());
  }
  CHECK(wythoffian(k, TypeSubset{1}).complex.faces_of_dim(0).size() == k.faces_of_dim(1).size());
  CHECK(wythoffian(k, TypeSubset::full(2)).complex.faces_of_dim(0).size() == 48);
}

TEST_CASE("face complex validation") {
  CHECK_THROWS_AS(FaceComplex(1, {0, 0, 1}, {{0, 2}}), StructuralError);
  CHECK_THROWS_AS(FaceComplex(1, {0, 1}, {{0, 1}, {1, 0}}), StructuralError);
  CHECK_THROWS_AS(FaceComplex(2, {0, 2}, {{0, 1}}), StructuralError);
  CHECK_THROWS_AS(wythoffian(simplex(3), TypeSubset{}), std::domain_error);
  CHECK_THROWS_AS(wythoffian(simplex(3), TypeSubset{3}), std::domain_error);
  const auto k = polygon(4);
  const auto back = complex_from_json(to_json(k));
  CHECK(back.covers() == k.covers());
  CHECK(back.dims() == k.dims());
}
