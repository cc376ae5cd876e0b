#include <doctest.h>

#include <functional>

#include "wythoff/graphs.hpp"
#include "wythoff/isomorphism.hpp"
#include "wythoff/polytopes.hpp"

using namespace wythoff;

namespace {

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Maximal chains counted by walking up covers from every vertex.
std::uint64_t maximal_chains(const FaceComplex& k) {
  std::function<std::uint64_t(FaceId)> up = [&](FaceId f) -> std::uint64_t {
    if (k.dim(f) == k.dimension()) return 1;
    std::uint64_t total = 0;
    for (FaceId g : k.up_covers(f)) total += up(g);
    return total;
  };
  std::uint64_t total = 0;
  for (FaceId v : k.faces_of_dim(0)) total += up(v);
  return total;
}

}  // namespace

TEST_CASE("simplex face counts") {
  for (int d = 1; d <= 6; ++d) {
    const auto k = simplex(d);
    CHECK(k.dimension() == d - 1);
    const auto f = k.f_vector();
    for (int i = 0; i < d; ++i) CHECK(f[static_cast<std::size_t>(i)] == binomial(d + 1, i + 1));
    CHECK(k.is_polytope());
  }
  CHECK(simplex(3).f_vector() == std::vector<std::size_t>{4, 6, 4});
  CHECK(maximal_chains(simplex(4)) == 120);
  CHECK(simplex(4).count_flags(TypeSubset::full(3)) == 120);
}

TEST_CASE("cross-polytope face counts") {
  for (int d = 1; d <= 6; ++d) {
    const auto f = cross_polytope(d).f_vector();
    for (int i = 0; i < d; ++i)
      CHECK(f[static_cast<std::size_t>(i)] == (std::uint64_t{1} << (i + 1)) * binomial(d, i + 1));
  }
  CHECK(cross_polytope(3).f_vector() == std::vector<std::size_t>{6, 12, 8});
  CHECK(is_isomorphic(skeleton(cube(4)), hypercube_graph(4)));
  CHECK(is_isomorphic(skeleton(polygon(7)), cycle_graph(7)));
}

TEST_CASE("spec names") {
  CHECK(RegularPolytopeSpec::parse("b4").kind == RegularPolytopeSpec::Kind::Cross);
  CHECK(RegularPolytopeSpec::parse("simplex(3)").name() == "a3");
  CHECK(RegularPolytopeSpec::parse("600cell").dimension() == 4);
  CHECK(RegularPolytopeSpec::parse("ico").schlafli() == std::vector<int>{3, 5});
  CHECK(RegularPolytopeSpec::parse("24cell").self_dual());
  CHECK_FALSE(RegularPolytopeSpec::parse("b3").self_dual());
  CHECK_THROWS(RegularPolytopeSpec::parse("q3"));
  CHECK_THROWS(RegularPolytopeSpec::parse("p2"));
}

TEST_CASE("coset polytopes agree with the combinatorial ones") {
  for (int d = 1; d <= 4; ++d) {
    const auto a = regular_from_coxeter({RegularPolytopeSpec::Kind::Simplex, d});
    CHECK(is_isomorphic(a.complex, simplex(d)));
    CHECK(a.element_flags.size() == maximal_chains(simplex(d)));
    if (d >= 2) {
      const auto b = regular_from_coxeter({RegularPolytopeSpec::Kind::Cross, d});
      CHECK(is_isomorphic(b.complex, cross_polytope(d)));
      const auto c = regular_from_coxeter({RegularPolytopeSpec::Kind::Cube, d});
      CHECK(is_isomorphic(c.complex, cube(d)));
    }
  }
  CHECK(is_isomorphic(regular_from_coxeter({RegularPolytopeSpec::Kind::Polygon, 9}).complex, polygon(9)));
}

TEST_CASE("sporadic polytopes") {
  const auto ico = regular_from_coxeter(RegularPolytopeSpec::parse("ico"));
  CHECK(ico.complex.f_vector() == std::vector<std::size_t>{12, 30, 20});
  CHECK(ico.element_flags.size() == 120);
  CHECK(ico.complex.count_flags(TypeSubset::full(2)) == 120);
  CHECK(ico.complex.is_polytope());
  const auto dodeca = make_polytope(RegularPolytopeSpec::parse("dodeca"));
  CHECK(is_isomorphic(dual(dodeca), ico.complex));

  const auto c24 = make_polytope(RegularPolytopeSpec::parse("24cell"));
  CHECK(c24.f_vector() == std::vector<std::size_t>{24, 96, 96, 24});
  CHECK(c24.is_polytope());
  CHECK(is_isomorphic(dual(c24), c24));
}

TEST_CASE("600-cell and 120-cell") {
  const auto c600 = regular_from_coxeter(RegularPolytopeSpec::parse("600cell"));
  const auto& k = c600.complex;
  CHECK(k.f_vector() == std::vector<std::size_t>{120, 720, 1200, 600});
  CHECK(k.is_polytope());
  CHECK(c600.element_flags.size() == 14400);
  CHECK(k.count_flags(TypeSubset::full(3)) == 14400);
  // Face count times stabilizer order equals the group order.
  const std::vector<std::size_t> stabilizers{120, 20, 12, 24};
  for (int i = 0; i < 4; ++i) CHECK(k.f_vector()[static_cast<std::size_t>(i)] * stabilizers[static_cast<std::size_t>(i)] == 14400);
  const auto c120 = make_polytope(RegularPolytopeSpec::parse("120cell"));
  CHECK(c120.f_vector() == std::vector<std::size_t>{600, 1200, 720, 120});
  CHECK(is_isomorphic(c120, dual(k)));
}
