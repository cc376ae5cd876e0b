#include <doctest.h>

#include "wythoff/certificate.hpp"
#include "wythoff/coxeter.hpp"
#include "wythoff/errors.hpp"

using namespace wythoff;

namespace {

ElementId power(const CoxeterGroup& w, ElementId x, int k) {
  ElementId r = w.identity();
  for (int i = 0; i < k; ++i) r = w.multiply(r, x);
  return r;
}

// Order of x by repeated multiplication.
int element_order(const CoxeterGroup& w, ElementId x) {
  int k = 1;
  for (ElementId y = x; y != w.identity(); y = w.multiply(y, x)) ++k;
  return k;
}

const CoxeterGroup& h4() {
  static const CoxeterGroup group(CoxeterType::parse("H4"));
  return group;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(CoxeterGroup(CoxeterType::parse("A3")).order() == 24);
  CHECK(CoxeterGroup(CoxeterType::parse("H3")).order() == 120);
  CHECK(CoxeterGroup(CoxeterType::parse("F4")).order() == 1152);
  CHECK(CoxeterGroup(CoxeterType::parse("B4")).order() == 384);
  CHECK(CoxeterGroup(CoxeterType::parse("D4")).order() == 192);
  CHECK(h4().order() == 14400);
  for (int p = 2; p <= 12; ++p) CHECK(CoxeterGroup(CoxeterType{CoxeterType::Family::I, p}).order() == 2 * static_cast<std::size_t>(p));
}

TEST_CASE("type names") {
  CHECK(CoxeterType::parse("I2(7)").name() == "I2(7)");
  CHECK(CoxeterType::parse("i2_7").n == 7);
  CHECK(CoxeterType::parse("b4").name() == "B4");
  CHECK_THROWS(CoxeterType::parse("H5"));
  CHECK_THROWS(CoxeterType::parse("X3"));
  CHECK(CoxeterType::parse("D5").matrix().at(2, 4) == 3);
  CHECK(CoxeterType::parse("D5").matrix().at(3, 4) == 2);
  CHECK(CoxeterType::parse("H4").matrix().is_path());
  CHECK_FALSE(CoxeterType::parse("D4").matrix().is_path());
}

TEST_CASE("Coxeter relations hold with the exact orders") {
  for (const char* name : {"A4", "B4", "D4", "F4", "H3", "I2(5)", "I2(8)", "I2(6)"}) {
    const CoxeterGroup w(CoxeterType::parse(name));
    const auto& m = w.coxeter_matrix();
    for (int i = 0; i < w.rank(); ++i) {
      CHECK(w.generator(i) != w.identity());
      CHECK(power(w, w.generator(i), 2) == w.identity());
      for (int j = i + 1; j < w.rank(); ++j) {
        const ElementId st = w.multiply(w.generator(i), w.generator(j));
        CHECK(element_order(w, st) == m.at(i, j));
      }
    }
  }
}

TEST_CASE("group operations") {
  const CoxeterGroup w(CoxeterType::parse("B3"));
  for (ElementId x = 0; x < w.order(); ++x) {
    CHECK(w.multiply(x, w.inverse(x)) == w.identity());
    CHECK(static_cast<int>(w.word(x).size()) == w.length(x));
    CHECK(w.find(w.matrix(x)) == x);
    for (int s = 0; s < w.rank(); ++s) CHECK(w.times_left(s, x) == w.multiply(w.generator(s), x));
  }
  CHECK(w.length(w.longest_element()) == 9);
}

TEST_CASE("reflection counts match the closed forms") {
  for (int d = 1; d <= 5; ++d) {
    for (auto family : {CoxeterType::Family::A, CoxeterType::Family::B, CoxeterType::Family::D}) {
      if (family == CoxeterType::Family::B && d < 2) continue;
      if (family == CoxeterType::Family::D && d < 3) continue;
      const CoxeterType type{family, d};
      CHECK(reflections(CoxeterGroup(type)).size() == type.reflection_count_formula());
    }
  }
  CHECK(reflections(CoxeterGroup(CoxeterType::parse("A3"))).size() == 6);
  CHECK(reflections(CoxeterGroup(CoxeterType::parse("B4"))).size() == 16);
  CHECK(reflections(CoxeterGroup(CoxeterType::parse("D5"))).size() == 20);
  CHECK(reflections(CoxeterGroup(CoxeterType::parse("F4"))).size() == 24);
  CHECK(reflections(CoxeterGroup(CoxeterType::parse("H3"))).size() == 15);
  CHECK(reflections(h4()).size() == 60);
  for (int p = 2; p <= 12; ++p) CHECK(reflections(CoxeterGroup(CoxeterType{CoxeterType::Family::I, p})).size() == static_cast<std::size_t>(p));
}

TEST_CASE("reflections are involutions other than the identity") {
  const CoxeterGroup w(CoxeterType::parse("H3"));
  const auto t = reflections(w);
  for (ElementId r : t.elements()) {
    CHECK(r != w.identity());
    CHECK(w.multiply(r, r) == w.identity());
    CHECK(w.length(r) % 2 == 1);
  }
}

TEST_CASE("large groups exceed the cap") {
  CHECK_THROWS_AS(CoxeterGroup(CoxeterType::parse("E6")), ResourceError);
  CHECK_THROWS_AS(CoxeterGroup(CoxeterType::parse("A3"), 10), ResourceError);
}

TEST_CASE("Cayley graphs") {
  const CoxeterGroup w(CoxeterType::parse("H3"));
  const auto g = cayley_graph(w);
  CHECK(g.vertex_count() == 120);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(static_cast<Vertex>(v)) == 3);
  const auto from_identity = g.bfs(0);
  for (ElementId x = 0; x < w.order(); ++x) CHECK(from_identity[x] == w.length(x));
  CHECK(g.diameter() == 15);
  CHECK(w.length(w.longest_element()) == 15);
}

TEST_CASE("inversion embeddings are isometric") {
  for (const char* name : {"A3", "B4", "D4", "H3", "F4", "I2(7)"}) {
    const CoxeterGroup w(CoxeterType::parse(name));
    const auto cert = inversion_embedding(w);
    const auto t = reflections(w);
    CHECK(cert.dimension() == t.size());
    CHECK(cert.weight(0) == 0);
    CHECK(cert.weight(static_cast<Vertex>(w.longest_element())) == t.size());
    for (ElementId x = 0; x < w.order(); ++x) CHECK(cert.weight(static_cast<Vertex>(x)) == static_cast<std::size_t>(w.length(x)));
    const auto check = check_certificate(cayley_graph(w), cert);
    CHECK(check.ok);
    CHECK_FALSE(check.sampled);
  }
}

TEST_CASE("H4 inversion embedding on sampled pairs") {
  const auto cert = inversion_embedding(h4());
  CHECK(cert.dimension() == 60);
  const auto check = check_certificate(cayley_graph(h4()), cert);
  CHECK(check.ok);
  CHECK(check.sampled);
  CHECK(check.pairs_checked >= 1'000'000);
}

TEST_CASE("parabolic cosets") {
  const CoxeterGroup a3(CoxeterType::parse("A3"));
  const auto all = TypeSubset::full(2);
  CHECK(parabolic_cosets(a3, all).coset_count == 1);
  CHECK(parabolic_cosets(a3, all.without(0)).coset_count == 4);
  CHECK(parabolic_cosets(a3, TypeSubset{}).coset_count == 24);
  const auto vertices = parabolic_cosets(h4(), TypeSubset::full(3).without(0));
  CHECK(vertices.coset_count == 120);
  CHECK(vertices.subgroup_order == 120);
  for (int i = 0; i < 4; ++i) {
    const auto p = parabolic_cosets(h4(), TypeSubset::full(3).without(i));
    CHECK(p.coset_count * p.subgroup_order == 14400);
  }
}
