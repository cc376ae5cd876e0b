#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wythoff/metric_graph.hpp"

namespace wythoff {

/// Binary labels for the vertices of a graph together with a scale; the
/// labelling is an embedding when Hamming distance equals scale * distance.
class EmbeddingCertificate {
 public:
  EmbeddingCertificate(int scale, std::size_t dimension, std::size_t vertex_count);

  int scale() const { return scale_; }
  std::size_t dimension() const { return m_; }
  std::size_t vertex_count() const { return n_; }

  bool bit(Vertex v, std::size_t c) const {
    return (words_[offset(v) + c / 64] >> (c % 64)) & 1U;
  }
  void set(Vertex v, std::size_t c, bool value = true);
  void flip(Vertex v, std::size_t c) { words_[offset(v) + c / 64] ^= std::uint64_t{1} << (c % 64); }
  /// Complements coordinate c on every vertex.
  void complement_coordinate(std::size_t c);

  std::size_t weight(Vertex v) const;
  std::size_t hamming(Vertex u, Vertex v) const;
  /// Number of vertices whose coordinate c is set.
  std::size_t coordinate_count(std::size_t c) const;

  /// Coordinate m-1 first.
  std::string bitstring(Vertex v) const;
  void set_bitstring(Vertex v, const std::string& bits);

  friend bool operator==(const EmbeddingCertificate&, const EmbeddingCertificate&) = default;

 private:
  std::size_t offset(Vertex v) const { return static_cast<std::size_t>(v) * stride_; }

  int scale_;
  std::size_t m_;
  std::size_t n_;
  std::size_t stride_;
  std::vector<std::uint64_t> words_;
};

/// `{scale, m, labels: {"v": bitstring}}`
nlohmann::json to_json(const EmbeddingCertificate& cert);
EmbeddingCertificate certificate_from_json(const nlohmann::json& j);
EmbeddingCertificate read_certificate(const std::string& path);
void write_certificate(const std::string& path, const EmbeddingCertificate& cert);

struct CheckOptions {
  std::size_t exhaustive_limit = 4000;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 20240917;
};

struct CertificateCheck {
  bool ok = true;
  bool sampled = false;
  std::uint64_t pairs_checked = 0;
  std::optional<std::pair<Vertex, Vertex>> witness;

  explicit operator bool() const { return ok; }
};

/// Compares Hamming distances with scale * graph distance, over all pairs up
/// to `exhaustive_limit` vertices and over uniformly drawn pairs beyond it.
/// Throws std::invalid_argument when the label count differs from the graph.
CertificateCheck check_certificate(const MetricGraph& g, const EmbeddingCertificate& cert,
                                   const CheckOptions& options = {});

struct BalanceProfile {
  enum class Kind { Equicut, Balanced, Neither };

  Kind kind = Kind::Neither;
  std::size_t q = 0;  // common smaller side when balanced
  std::vector<std::size_t> cut_sizes;  // per non-constant coordinate

  /// "yes", "q=<q>" or "no".
  std::string label() const;
};

BalanceProfile equicut_profile(const MetricGraph& g, const EmbeddingCertificate& cert);

struct JohnsonForm {
  std::size_t m;
  std::size_t n;
  friend bool operator==(const JohnsonForm&, const JohnsonForm&) = default;
};

/// Looks for a set of coordinates whose complement makes every label the
/// same weight; reports the smallest such weight up to complementing all.
std::optional<JohnsonForm> johnson_form(const EmbeddingCertificate& cert,
                                        std::uint64_t node_budget = 50'000'000);

/// Complements coordinates so that vertex 0 gets the zero label.
EmbeddingCertificate normalized_at_zero(const EmbeddingCertificate& cert);

}  // namespace wythoff
