#include "wythoff/factorization.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/pending/disjoint_sets.hpp>

#include "wythoff/errors.hpp"

namespace wythoff {

namespace {

using UnionFind = boost::disjoint_sets_with_storage<>;

// Roots relabelled 0, 1, ... in order of first appearance.
std::vector<int> compact_classes(UnionFind& uf, std::size_t n, std::size_t& count) {
  std::map<std::size_t, int> ids;
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = ids.try_emplace(uf.find_set(i), static_cast<int>(ids.size()));
    out[i] = it->second;
  }
  count = ids.size();
  return out;
}

}  // namespace

std::vector<Factor> gw_factorize(const MetricGraph& g) {
  const auto& d = g.distances();
  const auto& edges = g.edges();
  const auto n = g.vertex_count();
  const auto m = edges.size();

  UnionFind theta(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto [x, y] = edges[i];
    const auto rx = d.row(x);
    const auto ry = d.row(y);
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto [u, v] = edges[j];
      if (rx[u] + ry[v] != rx[v] + ry[u]) theta.union_set(i, j);
    }
  }
  std::size_t class_count = 0;
  const auto edge_class = compact_classes(theta, m, class_count);

  std::vector<Factor> factors;
  for (std::size_t c = 0; c < class_count; ++c) {
    UnionFind contract(n);
    for (std::size_t e = 0; e < m; ++e)
      if (edge_class[e] != static_cast<int>(c)) contract.union_set(edges[e].first, edges[e].second);
    std::size_t size = 0;
    auto projection = compact_classes(contract, n, size);
    std::set<Edge> kept;
    for (std::size_t e = 0; e < m; ++e) {
      if (edge_class[e] != static_cast<int>(c)) continue;
      const Vertex a = projection[edges[e].first];
      const Vertex b = projection[edges[e].second];
      if (a != b) kept.insert({std::min(a, b), std::max(a, b)});
    }
    factors.push_back({MetricGraph(size, {kept.begin(), kept.end()}), std::move(projection)});
  }

  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      int sum = 0;
      for (const auto& f : factors) sum += f.graph.distance(f.projection[u], f.projection[v]);
      if (sum != d.at(static_cast<Vertex>(u), static_cast<Vertex>(v)))
        throw StructuralError("factor distances do not add up");
    }
  return factors;
}

std::string factor_shape(const MetricGraph& f) {
  const auto n = f.vertex_count();
  if (n == 2 && f.edge_count() == 1) return "K2";
  if (n >= 4 && n % 2 == 0 && f.edge_count() == n * (n - 2) / 2) {
    bool regular = true;
    for (std::size_t v = 0; v < n; ++v) regular = regular && f.degree(static_cast<Vertex>(v)) == n - 2;
    if (regular) return "K_{" + std::to_string(n / 2) + "x2}";
  }
  if (f.edge_count() == n * (n - 1) / 2) return "K" + std::to_string(n);
  return "other";
}

namespace {

EmbeddingCertificate repeated(const EmbeddingCertificate& cert, int times) {
  EmbeddingCertificate out(cert.scale() * times, cert.dimension() * static_cast<std::size_t>(times),
                           cert.vertex_count());
  for (std::size_t v = 0; v < cert.vertex_count(); ++v)
    for (std::size_t c = 0; c < cert.dimension(); ++c)
      if (cert.bit(static_cast<Vertex>(v), c))
        for (int k = 0; k < times; ++k) out.set(static_cast<Vertex>(v), c * static_cast<std::size_t>(times) + k);
  return out;
}

class FactorScales {
 public:
  FactorScales(const Factor& f, const L1Limits& limits) : factor_(f), limits_(limits) {
    if (auto cube = partial_cube(f.graph)) base_ = std::move(*cube);
  }

  bool partial() const { return base_.has_value(); }

  ScaleSearchResult::Status admits(int scale) {
    if (base_) return ScaleSearchResult::Status::Found;
    auto it = cache_.find(scale);
    if (it == cache_.end()) {
      auto result = scale_search(factor_.graph, scale, limits_.search);
      std::optional<EmbeddingCertificate> cert;
      if (!result.solutions.empty()) cert = result.solutions.front().certificate();
      it = cache_.emplace(scale, std::make_pair(result.status, std::move(cert))).first;
    }
    return it->second.first;
  }

  EmbeddingCertificate certificate(int scale) {
    if (base_) return repeated(*base_, scale);
    admits(scale);
    return *cache_.at(scale).second;
  }

 private:
  const Factor& factor_;
  const L1Limits& limits_;
  std::optional<EmbeddingCertificate> base_;
  std::map<int, std::pair<ScaleSearchResult::Status, std::optional<EmbeddingCertificate>>> cache_;
};

}  // namespace

L1Verdict l1_verdict(const MetricGraph& g, const L1Limits& limits) {
  L1Verdict verdict;
  const auto n = g.vertex_count();
  if (n >= 5) {
    FiveGonalOptions window;
    window.window = limits.five_gonal_window;
    if (auto v = five_gonal_search(g, window).violation) {
      verdict.kind = L1Verdict::Kind::NotL1;
      verdict.violation = std::move(v);
      return verdict;
    }
  }

  const auto factors = gw_factorize(g);
  std::vector<FactorScales> scales;
  scales.reserve(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    scales.emplace_back(f, limits);
    verdict.factors.push_back({f.graph.vertex_count(), factor_shape(f.graph), scales.back().partial() ? 1 : 0, true});
    if (scales.back().partial() || f.graph.vertex_count() < 5) continue;
    if (auto v = five_gonal_violation(f.graph)) {
      verdict.kind = L1Verdict::Kind::NotL1;
      verdict.violation = std::move(v);
      verdict.violating_factor = i;
      return verdict;
    }
  }

  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto& fv = verdict.factors[i];
    if (fv.min_scale == 1) continue;
    for (int s = 1; s <= limits.max_scale; ++s) {
      const auto status = scales[i].admits(s);
      if (status == ScaleSearchResult::Status::Found) {
        fv.min_scale = s;
        break;
      }
      if (status == ScaleSearchResult::Status::Undecided) fv.decided = false;
    }
  }

  bool uncertain = false;
  for (int s = 1; s <= limits.max_scale; ++s) {
    bool all = true;
    for (std::size_t i = 0; i < factors.size() && all; ++i) {
      const auto status = scales[i].admits(s);
      if (status == ScaleSearchResult::Status::Undecided) uncertain = true;
      all = status == ScaleSearchResult::Status::Found;
    }
    if (!all) continue;

    std::size_t dimension = 0;
    std::vector<EmbeddingCertificate> parts;
    for (auto& fs : scales) {
      parts.push_back(fs.certificate(s));
      dimension += parts.back().dimension();
    }
    EmbeddingCertificate cert(s, dimension, n);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t c = 0; c < parts[i].dimension(); ++c)
          if (parts[i].bit(factors[i].projection[v], c)) cert.set(static_cast<Vertex>(v), offset + c);
      offset += parts[i].dimension();
    }
    if (!check_certificate(g, cert)) throw StructuralError("combined certificate failed verification");
    verdict.kind = L1Verdict::Kind::L1;
    verdict.scale = s;
    verdict.minimal = !uncertain;
    verdict.certificate = normalized_at_zero(cert);
    return verdict;
  }
  return verdict;
}

}  // namespace wythoff
