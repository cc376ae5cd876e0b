#include "wythoff/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>

#include "wythoff/certificate.hpp"
#include "wythoff/errors.hpp"

namespace wythoff {

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank < 1 || entries_.size() != static_cast<std::size_t>(rank * rank)) {
    throw std::invalid_argument("Coxeter matrix has the wrong shape");
  }
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      const int m = at(i, j);
      if (m != at(j, i)) throw std::invalid_argument("Coxeter matrix is not symmetric");
      if ((i == j) != (m == 1) || m < 1) throw std::invalid_argument("invalid Coxeter matrix entry");
    }
  }
}

bool CoxeterMatrix::is_path() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if ((j == i + 1) != (at(i, j) >= 3)) return false;
  return true;
}

CoxeterMatrix linear_coxeter_matrix(const std::vector<int>& labels) {
  const int r = static_cast<int>(labels.size()) + 1;
  std::vector<int> e(static_cast<std::size_t>(r * r), 2);
  for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(i * r + i)] = 1;
  for (int i = 0; i + 1 < r; ++i) {
    e[static_cast<std::size_t>(i * r + i + 1)] = labels[static_cast<std::size_t>(i)];
    e[static_cast<std::size_t>((i + 1) * r + i)] = labels[static_cast<std::size_t>(i)];
  }
  return CoxeterMatrix(r, std::move(e));
}

CoxeterType CoxeterType::parse(const std::string& text) {
  static const std::regex pattern(R"(([A-Za-z])(\d+)(?:[\(_](\d+)\)?)?)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) throw std::invalid_argument("unknown Coxeter type " + text);
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(match[1].str()[0])));
  const int n = std::stoi(match[2].str());
  const bool has_p = match[3].matched;
  auto bad = [&] { return std::invalid_argument("unknown Coxeter type " + text); };
  if (letter == 'I') {
    if (n != 2 || !has_p) throw bad();
    const int p = std::stoi(match[3].str());
    if (p < 2) throw bad();
    return {Family::I, p};
  }
  if (has_p) throw bad();
  switch (letter) {
    case 'A':
      if (n >= 1) return {Family::A, n};
      break;
    case 'B':
    case 'C':
      if (n >= 2) return {Family::B, n};
      break;
    case 'D':
      if (n >= 3) return {Family::D, n};
      break;
    case 'E':
      if (n >= 6 && n <= 8) return {Family::E, n};
      break;
    case 'F':
      if (n == 4) return {Family::F, 4};
      break;
    case 'H':
      if (n == 3 || n == 4) return {Family::H, n};
      break;
    default:
      break;
  }
  throw bad();
}

std::string CoxeterType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(n);
    case Family::B: return "B" + std::to_string(n);
    case Family::D: return "D" + std::to_string(n);
    case Family::E: return "E" + std::to_string(n);
    case Family::F: return "F" + std::to_string(n);
    case Family::H: return "H" + std::to_string(n);
    case Family::I: return "I2(" + std::to_string(n) + ")";
  }
  return "?";
}

CoxeterMatrix CoxeterType::matrix() const {
  switch (family) {
    case Family::A:
      return linear_coxeter_matrix(std::vector<int>(static_cast<std::size_t>(n - 1), 3));
    case Family::B: {
      std::vector<int> labels(static_cast<std::size_t>(n - 1), 3);
      labels.back() = 4;
      return linear_coxeter_matrix(labels);
    }
    case Family::F:
      return linear_coxeter_matrix({3, 4, 3});
    case Family::H:
      return n == 3 ? linear_coxeter_matrix({3, 5}) : linear_coxeter_matrix({3, 3, 5});
    case Family::I:
      return linear_coxeter_matrix({n});
    case Family::D:
    case Family::E: {
      // A path on n-1 nodes with node n-1 attached to node n-3 (D) or node 2 (E).
      const int branch = family == Family::D ? n - 3 : 2;
      std::vector<int> e(static_cast<std::size_t>(n * n), 2);
      auto set = [&](int i, int j, int m) {
        e[static_cast<std::size_t>(i * n + j)] = m;
        e[static_cast<std::size_t>(j * n + i)] = m;
      };
      for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i * n + i)] = 1;
      for (int i = 0; i + 2 < n; ++i) set(i, i + 1, 3);
      set(branch, n - 1, 3);
      return CoxeterMatrix(n, std::move(e));
    }
  }
  throw std::logic_error("unreachable Coxeter family");
}

std::size_t CoxeterType::reflection_count_formula() const {
  const auto k = static_cast<std::size_t>(n);
  switch (family) {
    case Family::A: return k * (k + 1) / 2;
    case Family::B: return k * k;
    case Family::D: return k * (k - 1);
    case Family::E: return k == 6 ? 36 : (k == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::H: return k == 3 ? 15 : 60;
    case Family::I: return k;
  }
  return 0;
}

std::size_t ExactMatrixHash::operator()(const ExactMatrix& m) const {
  std::size_t h = m.size();
  for (const auto& x : m) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

namespace {

// Off-diagonal Cartan entries (a_ij, a_ji) with a_ij * a_ji = 4 cos^2(pi / m).
std::optional<std::pair<ExactScalar, ExactScalar>> cartan_pair(int m) {
  switch (m) {
    case 2: return std::pair{ExactScalar(0), ExactScalar(0)};
    case 3: return std::pair{ExactScalar(-1), ExactScalar(-1)};
    case 4: return std::pair{ExactScalar(-1), ExactScalar(-2)};
    case 5: return std::pair{-ExactScalar::golden(), -ExactScalar::golden()};
    case 6: return std::pair{ExactScalar(-1), ExactScalar(-3)};
    default: return std::nullopt;
  }
}

// Simple reflections s_i = I - e_i a_i^T on the basis of simple roots.
std::optional<std::vector<ExactMatrix>> root_representation(const CoxeterMatrix& m) {
  const int r = m.rank();
  std::vector<ExactScalar> cartan(static_cast<std::size_t>(r * r));
  for (int i = 0; i < r; ++i) {
    cartan[static_cast<std::size_t>(i * r + i)] = 2;
    for (int j = i + 1; j < r; ++j) {
      const auto pair = cartan_pair(m.at(i, j));
      if (!pair) return std::nullopt;
      cartan[static_cast<std::size_t>(i * r + j)] = pair->first;
      cartan[static_cast<std::size_t>(j * r + i)] = pair->second;
    }
  }
  std::vector<ExactMatrix> gens;
  for (int i = 0; i < r; ++i) {
    ExactMatrix s(static_cast<std::size_t>(r * r));
    for (int k = 0; k < r; ++k) s[static_cast<std::size_t>(k * r + k)] = 1;
    for (int c = 0; c < r; ++c) s[static_cast<std::size_t>(i * r + c)] -= cartan[static_cast<std::size_t>(i * r + c)];
    gens.push_back(std::move(s));
  }
  return gens;
}

// The dihedral group of order 2p acting on Z/p by i -> -i and i -> 1 - i.
std::vector<ExactMatrix> dihedral_permutations(int p) {
  std::vector<ExactMatrix> gens;
  for (int shift = 0; shift < 2; ++shift) {
    ExactMatrix s(static_cast<std::size_t>(p * p));
    for (int i = 0; i < p; ++i) {
      const int image = ((shift - i) % p + p) % p;
      s[static_cast<std::size_t>(image * p + i)] = 1;
    }
    gens.push_back(std::move(s));
  }
  return gens;
}

ExactMatrix product(const ExactMatrix& a, const ExactMatrix& b, int r) {
  ExactMatrix out(static_cast<std::size_t>(r * r));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      const auto& x = a[static_cast<std::size_t>(i * r + k)];
      if (x.is_zero()) continue;
      for (int j = 0; j < r; ++j) {
        const auto& y = b[static_cast<std::size_t>(k * r + j)];
        if (!y.is_zero()) out[static_cast<std::size_t>(i * r + j)] += x * y;
      }
    }
  return out;
}

}  // namespace

CoxeterGroup::CoxeterGroup(const CoxeterType& type, std::size_t cap)
    : CoxeterGroup(type.name(), type.matrix(), cap) {}

CoxeterGroup::CoxeterGroup(std::string name, CoxeterMatrix m, std::size_t cap)
    : name_(std::move(name)), m_(std::move(m)) {
  auto gens = root_representation(m_);
  if (!gens) {
    if (m_.rank() != 2) throw UnsupportedError("no exact representation for " + name_);
    gens = dihedral_permutations(m_.at(0, 1));
  }
  enumerate(std::move(*gens), cap);
}

void CoxeterGroup::enumerate(std::vector<ExactMatrix> generators, std::size_t cap) {
  const int r = rank();
  std::size_t size = 1;
  while (size * size < generators.front().size()) ++size;
  degree_ = static_cast<int>(size);

  ExactMatrix one(size * size);
  for (std::size_t i = 0; i < size; ++i) one[i * size + i] = 1;
  matrices_.push_back(one);
  index_.emplace(std::move(one), 0);
  parent_.push_back(0);
  last_generator_.push_back(-1);
  length_.push_back(0);

  for (std::size_t w = 0; w < matrices_.size(); ++w) {
    for (int s = 0; s < r; ++s) {
      auto next = product(matrices_[w], generators[static_cast<std::size_t>(s)], degree_);
      auto it = index_.find(next);
      ElementId id;
      if (it != index_.end()) {
        id = it->second;
      } else {
        if (matrices_.size() >= cap) {
          throw ResourceError("group " + name_ + " has more than " + std::to_string(cap) + " elements");
        }
        id = static_cast<ElementId>(matrices_.size());
        index_.emplace(next, id);
        matrices_.push_back(std::move(next));
        parent_.push_back(static_cast<ElementId>(w));
        last_generator_.push_back(s);
        length_.push_back(length_[w] + 1);
      }
      right_.push_back(id);
    }
  }

  inverse_.resize(order());
  for (std::size_t w = 0; w < order(); ++w) {
    ElementId inv = 0;
    const auto letters = word(static_cast<ElementId>(w));
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) inv = times(inv, *it);
    inverse_[w] = inv;
  }
}

ElementId CoxeterGroup::multiply(ElementId a, ElementId b) const {
  for (int s : word(b)) a = times(a, s);
  return a;
}

std::vector<int> CoxeterGroup::word(ElementId w) const {
  std::vector<int> letters;
  while (w != 0) {
    letters.push_back(last_generator_[w]);
    w = parent_[w];
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

std::optional<ElementId> CoxeterGroup::find(const ExactMatrix& m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ReflectionSet::ReflectionSet(const CoxeterGroup& w) : position_(w.order(), -1) {
  std::vector<char> is_reflection(w.order(), 0);
  for (ElementId x = 0; x < w.order(); ++x)
    for (int s = 0; s < w.rank(); ++s) is_reflection[w.multiply(w.times(x, s), w.inverse(x))] = 1;
  for (ElementId x = 0; x < w.order(); ++x) {
    if (is_reflection[x]) {
      position_[x] = static_cast<int>(elements_.size());
      elements_.push_back(x);
    }
  }
}

std::optional<std::size_t> ReflectionSet::index_of(ElementId t) const {
  if (t >= position_.size() || position_[t] < 0) return std::nullopt;
  return static_cast<std::size_t>(position_[t]);
}

ReflectionSet reflections(const CoxeterGroup& w) { return ReflectionSet(w); }

MetricGraph cayley_graph(const CoxeterGroup& w) {
  std::vector<Edge> edges;
  for (ElementId x = 0; x < w.order(); ++x)
    for (int s = 0; s < w.rank(); ++s) {
      const ElementId y = w.times(x, s);
      if (x < y) edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
    }
  return MetricGraph(w.order(), std::move(edges));
}

EmbeddingCertificate inversion_embedding(const CoxeterGroup& w) {
  const ReflectionSet t(w);
  EmbeddingCertificate cert(1, t.size(), w.order());
  // Ids are in breadth-first order, so the parent p of x = p * s is already labelled.
  for (ElementId x = 1; x < w.order(); ++x) {
    const auto letters = w.word(x);
    const int s = letters.back();
    const ElementId p = w.times(x, s);
    for (std::size_t c = 0; c < t.size(); ++c) cert.set(static_cast<Vertex>(x), c, cert.bit(static_cast<Vertex>(p), c));
    const ElementId r = w.multiply(w.times(p, s), w.inverse(p));
    cert.flip(static_cast<Vertex>(x), *t.index_of(r));
  }
  return cert;
}

CosetPartition parabolic_cosets(const CoxeterGroup& w, TypeSubset j) {
  CosetPartition out;
  out.coset_of.assign(w.order(), -1);
  std::vector<ElementId> stack;
  for (ElementId start = 0; start < w.order(); ++start) {
    if (out.coset_of[start] >= 0) continue;
    const int label = static_cast<int>(out.coset_count++);
    out.coset_of[start] = label;
    stack.push_back(start);
    std::size_t members = 0;
    while (!stack.empty()) {
      const ElementId x = stack.back();
      stack.pop_back();
      ++members;
      for (int s : j.members()) {
        if (s >= w.rank()) throw std::invalid_argument("generator index out of range");
        const ElementId y = w.times(x, s);
        if (out.coset_of[y] < 0) {
          out.coset_of[y] = label;
          stack.push_back(y);
        }
      }
    }
    if (label == 0) out.subgroup_order = members;
  }
  return out;
}

}  // namespace wythoff
