#include "wythoff/certificate.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <random>
#include <stdexcept>

namespace wythoff {

EmbeddingCertificate::EmbeddingCertificate(int scale, std::size_t dimension,
                                           std::size_t vertex_count)
    : scale_(scale),
      m_(dimension),
      n_(vertex_count),
      stride_(std::max<std::size_t>(1, (dimension + 63) / 64)),
      words_(stride_ * vertex_count, 0) {
  if (scale < 1) throw std::invalid_argument("scale must be positive");
}

void EmbeddingCertificate::set(Vertex v, std::size_t c, bool value) {
  const auto mask = std::uint64_t{1} << (c % 64);
  auto& word = words_[offset(v) + c / 64];
  word = value ? (word | mask) : (word & ~mask);
}

void EmbeddingCertificate::complement_coordinate(std::size_t c) {
  for (std::size_t v = 0; v < n_; ++v) flip(static_cast<Vertex>(v), c);
}

std::size_t EmbeddingCertificate::weight(Vertex v) const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < stride_; ++i) w += static_cast<std::size_t>(std::popcount(words_[offset(v) + i]));
  return w;
}

std::size_t EmbeddingCertificate::hamming(Vertex u, Vertex v) const {
  std::size_t h = 0;
  const auto* a = words_.data() + offset(u);
  const auto* b = words_.data() + offset(v);
  for (std::size_t i = 0; i < stride_; ++i) h += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  return h;
}

std::size_t EmbeddingCertificate::coordinate_count(std::size_t c) const {
  std::size_t count = 0;
  for (std::size_t v = 0; v < n_; ++v) count += bit(static_cast<Vertex>(v), c) ? 1 : 0;
  return count;
}

std::string EmbeddingCertificate::bitstring(Vertex v) const {
  std::string s(m_, '0');
  for (std::size_t c = 0; c < m_; ++c)
    if (bit(v, c)) s[m_ - 1 - c] = '1';
  return s;
}

void EmbeddingCertificate::set_bitstring(Vertex v, const std::string& bits) {
  if (bits.size() != m_) throw std::invalid_argument("label length differs from certificate dimension");
  for (std::size_t c = 0; c < m_; ++c) {
    const char ch = bits[m_ - 1 - c];
    if (ch != '0' && ch != '1') throw std::invalid_argument("label is not a bitstring");
    set(v, c, ch == '1');
  }
}

nlohmann::json to_json(const EmbeddingCertificate& cert) {
  nlohmann::json labels = nlohmann::json::object();
  for (std::size_t v = 0; v < cert.vertex_count(); ++v) {
    labels[std::to_string(v)] = cert.bitstring(static_cast<Vertex>(v));
  }
  return {{"scale", cert.scale()}, {"m", cert.dimension()}, {"labels", std::move(labels)}};
}

EmbeddingCertificate certificate_from_json(const nlohmann::json& j) {
  const auto& labels = j.at("labels");
  EmbeddingCertificate cert(j.at("scale").get<int>(), j.at("m").get<std::size_t>(), labels.size());
  std::vector<char> seen(labels.size(), 0);
  for (const auto& [key, value] : labels.items()) {
    const auto v = std::stoul(key);
    if (v >= labels.size() || seen[v]) throw std::invalid_argument("labels must cover vertices 0..n-1");
    seen[v] = 1;
    cert.set_bitstring(static_cast<Vertex>(v), value.get<std::string>());
  }
  return cert;
}

EmbeddingCertificate read_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open certificate " + path);
  return certificate_from_json(nlohmann::json::parse(in));
}

void write_certificate(const std::string& path, const EmbeddingCertificate& cert) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write certificate " + path);
  out << to_json(cert).dump() << '\n';
}

CertificateCheck check_certificate(const MetricGraph& g, const EmbeddingCertificate& cert,
                                   const CheckOptions& options) {
  const auto n = g.vertex_count();
  if (cert.vertex_count() != n) {
    throw std::invalid_argument("certificate labels " + std::to_string(cert.vertex_count()) +
                                " vertices, graph has " + std::to_string(n));
  }
  CertificateCheck result;
  std::vector<std::uint16_t> dist;
  std::vector<Vertex> queue;
  auto compare = [&](Vertex u, Vertex v) {
    ++result.pairs_checked;
    if (dist[v] == kUnreachable ||
        cert.hamming(u, v) != static_cast<std::size_t>(cert.scale()) * dist[v]) {
      result.ok = false;
      result.witness = {u, v};
      return false;
    }
    return true;
  };

  if (n <= options.exhaustive_limit) {
    for (std::size_t u = 0; u < n; ++u) {
      g.bfs_into(static_cast<Vertex>(u), dist, queue);
      for (std::size_t v = u + 1; v < n; ++v)
        if (!compare(static_cast<Vertex>(u), static_cast<Vertex>(v))) return result;
    }
    return result;
  }

  result.sampled = true;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::pair<Vertex, Vertex>> pairs(options.samples);
  for (auto& p : pairs) p = {static_cast<Vertex>(pick(rng)), static_cast<Vertex>(pick(rng))};
  std::sort(pairs.begin(), pairs.end());
  Vertex current = -1;
  for (const auto& [u, v] : pairs) {
    if (u != current) {
      g.bfs_into(u, dist, queue);
      current = u;
    }
    if (!compare(u, v)) return result;
  }
  return result;
}

std::string BalanceProfile::label() const {
  switch (kind) {
    case Kind::Equicut:
      return "yes";
    case Kind::Balanced:
      return "q=" + std::to_string(q);
    case Kind::Neither:
      break;
  }
  return "no";
}

BalanceProfile equicut_profile(const MetricGraph& g, const EmbeddingCertificate& cert) {
  const auto n = g.vertex_count();
  if (cert.vertex_count() != n) throw std::invalid_argument("certificate does not match graph");
  BalanceProfile profile;
  std::optional<std::size_t> common;
  bool balanced = true;
  for (std::size_t c = 0; c < cert.dimension(); ++c) {
    const auto size = cert.coordinate_count(c);
    if (size == 0 || size == n) continue;
    profile.cut_sizes.push_back(size);
    const auto side = std::min(size, n - size);
    if (!common) common = side;
    balanced = balanced && side == *common;
  }
  if (!common || !balanced) return profile;
  profile.q = *common;
  profile.kind = 2 * *common == n ? BalanceProfile::Kind::Equicut : BalanceProfile::Kind::Balanced;
  return profile;
}

EmbeddingCertificate normalized_at_zero(const EmbeddingCertificate& cert) {
  auto out = cert;
  if (cert.vertex_count() == 0) return out;
  for (std::size_t c = 0; c < cert.dimension(); ++c)
    if (cert.bit(0, c)) out.complement_coordinate(c);
  return out;
}

namespace {

// Chooses z with |y_v & z| = |y_v| / 2 for every vertex v, where y_v is the
// label of v relative to vertex 0.
class HalvingSearch {
 public:
  HalvingSearch(const EmbeddingCertificate& y, std::uint64_t budget) : budget_(budget) {
    const auto n = y.vertex_count();
    const auto m = y.dimension();
    need_.resize(n);
    have_.assign(n, 0);
    open_.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      const auto w = y.weight(static_cast<Vertex>(v));
      if (w % 2 != 0) feasible_ = false;
      need_[v] = static_cast<int>(w / 2);
      open_[v] = static_cast<int>(w);
    }
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<Vertex> members;
      for (std::size_t v = 0; v < n; ++v)
        if (y.bit(static_cast<Vertex>(v), c)) members.push_back(static_cast<Vertex>(v));
      if (members.empty()) {
        ++free_;
      } else {
        columns_.push_back(std::move(members));
      }
    }
    std::sort(columns_.begin(), columns_.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });
    achievable_.assign(columns_.size() + 1, 0);
  }

  // Returns false when the budget ran out.
  bool run() {
    if (feasible_) descend(0, 0);
    return !exhausted_;
  }

  std::size_t free_columns() const { return free_; }
  const std::vector<char>& achievable() const { return achievable_; }

 private:
  void descend(std::size_t i, std::size_t chosen) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (i == columns_.size()) {
      achievable_[chosen] = 1;
      return;
    }
    const auto& col = columns_[i];
    for (Vertex v : col) --open_[v];
    for (int take = 0; take < 2; ++take) {
      bool ok = true;
      for (Vertex v : col) {
        have_[v] += take;
        if (have_[v] > need_[v] || have_[v] + open_[v] < need_[v]) ok = false;
      }
      if (ok) descend(i + 1, chosen + static_cast<std::size_t>(take));
      for (Vertex v : col) have_[v] -= take;
    }
    for (Vertex v : col) ++open_[v];
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool feasible_ = true;
  std::size_t free_ = 0;
  std::vector<int> need_;
  std::vector<int> have_;
  std::vector<int> open_;
  std::vector<std::vector<Vertex>> columns_;
  std::vector<char> achievable_;
};

}  // namespace

std::optional<JohnsonForm> johnson_form(const EmbeddingCertificate& cert,
                                        std::uint64_t node_budget) {
  const auto m = cert.dimension();
  if (cert.vertex_count() <= 1) return JohnsonForm{m, 0};
  const auto y = normalized_at_zero(cert);
  HalvingSearch search(y, node_budget);
  if (!search.run()) return std::nullopt;
  std::optional<std::size_t> best;
  const auto& achievable = search.achievable();
  for (std::size_t k = 0; k < achievable.size(); ++k) {
    if (!achievable[k]) continue;
    for (std::size_t extra = 0; extra <= search.free_columns(); ++extra) {
      const auto w = k + extra;
      const auto n = std::min(w, m - w);
      if (!best || n < *best) best = n;
    }
  }
  if (!best) return std::nullopt;
  return JohnsonForm{m, *best};
}

}  // namespace wythoff
