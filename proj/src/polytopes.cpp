#include "wythoff/polytopes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <regex>
#include <stdexcept>

#include "wythoff/errors.hpp"

namespace wythoff {

using Kind = RegularPolytopeSpec::Kind;

RegularPolytopeSpec RegularPolytopeSpec::parse(const std::string& raw) {
  std::string text;
  for (char c : raw) text.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  static const std::map<std::string, Kind> sporadic = {
      {"ico", Kind::Icosahedron},     {"icosahedron", Kind::Icosahedron},
      {"dodeca", Kind::Dodecahedron}, {"dodecahedron", Kind::Dodecahedron},
      {"24cell", Kind::Cell24},       {"cell24", Kind::Cell24},
      {"600cell", Kind::Cell600},     {"cell600", Kind::Cell600},
      {"120cell", Kind::Cell120},     {"cell120", Kind::Cell120},
  };
  if (const auto it = sporadic.find(text); it != sporadic.end()) return {it->second, 0};

  static const std::regex pattern(R"(([abcp]|simplex|cross|cube|polygon)\(?(\d+)\)?)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) throw std::invalid_argument("unknown polytope " + raw);
  const std::string family = match[1].str();
  const int n = std::stoi(match[2].str());
  Kind kind = Kind::Simplex;
  if (family == "b" || family == "cross") kind = Kind::Cross;
  if (family == "c" || family == "cube") kind = Kind::Cube;
  if (family == "p" || family == "polygon") kind = Kind::Polygon;
  if (kind == Kind::Polygon ? n < 3 : n < 1) throw std::invalid_argument("parameter out of range in " + raw);
  return {kind, n};
}

std::string RegularPolytopeSpec::name() const {
  switch (kind) {
    case Kind::Simplex: return "a" + std::to_string(n);
    case Kind::Cross: return "b" + std::to_string(n);
    case Kind::Cube: return "c" + std::to_string(n);
    case Kind::Polygon: return "p" + std::to_string(n);
    case Kind::Icosahedron: return "ico";
    case Kind::Dodecahedron: return "dodeca";
    case Kind::Cell24: return "24cell";
    case Kind::Cell600: return "600cell";
    case Kind::Cell120: return "120cell";
  }
  return "?";
}

int RegularPolytopeSpec::dimension() const {
  switch (kind) {
    case Kind::Simplex:
    case Kind::Cross:
    case Kind::Cube: return n;
    case Kind::Polygon: return 2;
    case Kind::Icosahedron:
    case Kind::Dodecahedron: return 3;
    default: return 4;
  }
}

std::vector<int> RegularPolytopeSpec::schlafli() const {
  switch (kind) {
    case Kind::Simplex: return std::vector<int>(static_cast<std::size_t>(std::max(0, n - 1)), 3);
    case Kind::Cross:
    case Kind::Cube: {
      std::vector<int> s(static_cast<std::size_t>(std::max(0, n - 1)), 3);
      if (!s.empty()) (kind == Kind::Cross ? s.back() : s.front()) = 4;
      return s;
    }
    case Kind::Polygon: return {n};
    case Kind::Icosahedron: return {3, 5};
    case Kind::Dodecahedron: return {5, 3};
    case Kind::Cell24: return {3, 4, 3};
    case Kind::Cell600: return {3, 3, 5};
    case Kind::Cell120: return {5, 3, 3};
  }
  return {};
}

bool RegularPolytopeSpec::self_dual() const {
  const auto s = schlafli();
  return std::equal(s.begin(), s.end(), s.rbegin());
}

FaceComplex simplex(int d) {
  if (d < 1 || d > 16) throw std::domain_error("simplex dimension out of range");
  const std::uint32_t full = (1U << (d + 1)) - 1;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t x = 1; x < full; ++x) masks.push_back(x);
  std::stable_sort(masks.begin(), masks.end(),
                   [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  std::vector<int> id(full + 1, -1);
  std::vector<int> dims;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    id[masks[i]] = static_cast<int>(i);
    dims.push_back(std::popcount(masks[i]) - 1);
  }
  std::vector<std::pair<FaceId, FaceId>> covers;
  for (auto x : masks)
    for (int b = 0; b <= d; ++b) {
      const auto y = x | (1U << b);
      if (y != x && y != full) covers.emplace_back(id[x], id[y]);
    }
  return FaceComplex(d - 1, std::move(dims), std::move(covers));
}

FaceComplex cross_polytope(int d) {
  if (d < 1 || d > 12) throw std::domain_error("cross-polytope dimension out of range");
  // A face is (support, signs) with signs a subset of support; key = support | signs << d.
  std::vector<std::uint32_t> keys;
  for (std::uint32_t support = 1; support < (1U << d); ++support)
    for (std::uint32_t signs = support;; signs = (signs - 1) & support) {
      keys.push_back(support | (signs << d));
      if (signs == 0) break;
    }
  const std::uint32_t low = (1U << d) - 1;
  std::stable_sort(keys.begin(), keys.end(), [&](auto a, auto b) {
    const auto ka = std::popcount(a & low);
    const auto kb = std::popcount(b & low);
    return ka != kb ? ka < kb : a < b;
  });
  std::map<std::uint32_t, int> id;
  std::vector<int> dims;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    id[keys[i]] = static_cast<int>(i);
    dims.push_back(std::popcount(keys[i] & low) - 1);
  }
  std::vector<std::pair<FaceId, FaceId>> covers;
  for (auto key : keys) {
    const auto support = key & low;
    for (int b = 0; b < d; ++b) {
      if (support & (1U << b)) continue;
      covers.emplace_back(id[key], id.at(key | (1U << b)));
      covers.emplace_back(id[key], id.at(key | (1U << b) | (1U << (b + d))));
    }
  }
  return FaceComplex(d - 1, std::move(dims), std::move(covers));
}

FaceComplex cube(int d) { return dual(cross_polytope(d)); }

FaceComplex polygon(int p) {
  if (p < 3) throw std::domain_error("polygon needs at least 3 sides");
  std::vector<int> dims(static_cast<std::size_t>(2 * p), 0);
  std::vector<std::pair<FaceId, FaceId>> covers;
  for (int i = 0; i < p; ++i) {
    dims[static_cast<std::size_t>(p + i)] = 1;
    covers.emplace_back(i, p + i);
    covers.emplace_back((i + 1) % p, p + i);
  }
  return FaceComplex(1, std::move(dims), std::move(covers));
}

CosetPolytope coset_polytope(const CoxeterGroup& w) {
  const int r = w.rank();
  if (!w.coxeter_matrix().is_path()) {
    throw UnsupportedError("Coxeter diagram of " + w.name() + " is not a path");
  }
  const auto all = TypeSubset::full(r - 1);
  std::vector<CosetPartition> parts;
  std::vector<int> offset{0};
  for (int i = 0; i < r; ++i) {
    parts.push_back(parabolic_cosets(w, all.without(i)));
    offset.push_back(offset.back() + static_cast<int>(parts.back().coset_count));
  }
  std::vector<int> dims(static_cast<std::size_t>(offset.back()));
  for (int i = 0; i < r; ++i)
    std::fill(dims.begin() + offset[i], dims.begin() + offset[i + 1], i);

  std::vector<std::pair<FaceId, FaceId>> covers;
  std::vector<Flag> element_flags(w.order());
  for (ElementId x = 0; x < w.order(); ++x) {
    Flag flag;
    for (int i = 0; i < r; ++i) flag.push_back(offset[i] + parts[i].coset_of[x]);
    for (int i = 0; i + 1 < r; ++i) covers.emplace_back(flag[i], flag[i + 1]);
    element_flags[x] = std::move(flag);
  }
  return {FaceComplex(r - 1, std::move(dims), std::move(covers)), std::move(element_flags)};
}

CosetPolytope regular_from_coxeter(const RegularPolytopeSpec& spec, std::size_t cap) {
  const auto labels = spec.schlafli();
  if (labels.empty()) {
    // The segment: rank one, two vertices.
    return coset_polytope(CoxeterGroup(spec.name(), CoxeterMatrix(1, {1}), cap));
  }
  return coset_polytope(CoxeterGroup(spec.name(), linear_coxeter_matrix(labels), cap));
}

FaceComplex make_polytope(const RegularPolytopeSpec& spec) {
  switch (spec.kind) {
    case Kind::Simplex: return simplex(spec.n);
    case Kind::Cross: return cross_polytope(spec.n);
    case Kind::Cube: return cube(spec.n);
    case Kind::Polygon: return polygon(spec.n);
    default: return regular_from_coxeter(spec).complex;
  }
}

}  // namespace wythoff
