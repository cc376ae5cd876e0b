#include "wythoff/inequalities.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "wythoff/errors.hpp"

namespace wythoff {

namespace {

constexpr std::size_t kWindowMatrixCap = 6000;

std::vector<Vertex> breadth_first_order(const MetricGraph& g) {
  const auto dist = g.bfs(0);
  std::vector<Vertex> order(g.vertex_count());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<Vertex>(v);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
  return order;
}

// Distances among the given vertices, row-major.
std::vector<int> window_distances(const MetricGraph& g, const std::vector<Vertex>& window) {
  const auto w = window.size();
  if (w > kWindowMatrixCap) throw ResourceError("inequality search window too large");
  std::vector<int> out(w * w);
  std::vector<std::uint16_t> row;
  std::vector<Vertex> queue;
  for (std::size_t i = 0; i < w; ++i) {
    g.bfs_into(window[i], row, queue);
    for (std::size_t j = 0; j < w; ++j) {
      if (row[window[j]] == kUnreachable) throw StructuralError("graph is disconnected");
      out[i * w + j] = row[window[j]];
    }
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const InequalityViolation& v) {
  return {{"support", v.support}, {"b", v.b}, {"value", v.value}};
}

long inequality_value(const MetricGraph& g, const std::vector<Vertex>& support, const std::vector<int>& b) {
  long value = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const auto row = g.bfs(support[i]);
    for (std::size_t j = i + 1; j < support.size(); ++j) value += static_cast<long>(b[i]) * b[j] * row[support[j]];
  }
  return value;
}

FiveGonalResult five_gonal_search(const MetricGraph& g, const FiveGonalOptions& options) {
  const auto n = g.vertex_count();
  if (n < 5) throw std::invalid_argument("5-gonal search needs at least 5 vertices");
  auto order = breadth_first_order(g);
  const bool windowed = options.window != 0 && options.window < n;
  if (windowed) order.resize(options.window);
  const auto w = order.size();
  const auto d = window_distances(g, order);
  auto at = [&](std::size_t i, std::size_t j) { return d[i * w + j]; };

  FiveGonalResult result;
  std::size_t p[5];
  for (p[4] = 4; p[4] < w; ++p[4])
    for (p[3] = 3; p[3] < p[4]; ++p[3])
      for (p[2] = 2; p[2] < p[3]; ++p[2])
        for (p[1] = 1; p[1] < p[2]; ++p[1])
          for (p[0] = 0; p[0] < p[1]; ++p[0]) {
            if (options.budget != 0 && result.subsets >= options.budget) return result;
            ++result.subsets;
            int pair[5][5];
            int row_sum[5] = {0, 0, 0, 0, 0};
            int total = 0;
            for (int i = 0; i < 5; ++i)
              for (int j = i + 1; j < 5; ++j) {
                pair[i][j] = at(p[i], p[j]);
                row_sum[i] += pair[i][j];
                row_sum[j] += pair[i][j];
                total += pair[i][j];
              }
            for (int i = 0; i < 5; ++i)
              for (int j = i + 1; j < 5; ++j) {
                const int value = total - 2 * (row_sum[i] + row_sum[j]) + 4 * pair[i][j];
                if (value <= 0) continue;
                InequalityViolation v;
                for (int k = 0; k < 5; ++k) {
                  v.support.push_back(order[p[k]]);
                  v.b.push_back(k == i || k == j ? -1 : 1);
                }
                v.value = value;
                result.violation = std::move(v);
                result.status = FiveGonalResult::Status::Violation;
                return result;
              }
          }
  result.status = windowed ? FiveGonalResult::Status::Inconclusive : FiveGonalResult::Status::Holds;
  return result;
}

std::optional<InequalityViolation> five_gonal_violation(const MetricGraph& g) {
  return five_gonal_search(g).violation;
}

namespace {

class HypermetricSearch {
 public:
  HypermetricSearch(std::vector<int> d, std::size_t k, int norm) : d_(std::move(d)), k_(k), norm_(norm), b_(k, 0) {}

  std::optional<std::vector<int>> run(long& value, std::uint64_t& vectors) {
    descend(0, norm_, 0, 0);
    vectors = vectors_;
    if (found_) value = found_value_;
    return found_;
  }

 private:
  void descend(std::size_t i, int remaining, int sum, long value) {
    if (found_) return;
    if (i == k_) {
      if (sum != 1) return;
      ++vectors_;
      if (value > 0) {
        found_ = b_;
        found_value_ = value;
      }
      return;
    }
    for (int x = -remaining; x <= remaining; ++x) {
      const int left = remaining - std::abs(x);
      if (std::abs(1 - sum - x) > left) continue;
      long gain = 0;
      if (x != 0)
        for (std::size_t j = 0; j < i; ++j)
          if (b_[j] != 0) gain += static_cast<long>(b_[j]) * d_[j * k_ + i];
      b_[i] = x;
      descend(i + 1, left, sum + x, value + gain * x);
      b_[i] = 0;
      if (found_) return;
    }
  }

  std::vector<int> d_;
  std::size_t k_;
  int norm_;
  std::vector<int> b_;
  std::uint64_t vectors_ = 0;
  std::optional<std::vector<int>> found_;
  long found_value_ = 0;
};

}  // namespace

HypermetricResult hypermetric_check(const MetricGraph& g, int max_norm, const HypermetricLimits& limits) {
  if (max_norm < 1) throw std::invalid_argument("max_norm must be positive");
  HypermetricResult result;
  auto order = breadth_first_order(g);
  if (order.size() > limits.max_vertices) {
    order.resize(limits.max_vertices);
    result.complete = false;
  }
  if (max_norm > limits.max_norm) {
    max_norm = limits.max_norm;
    result.complete = false;
  }
  const auto k = order.size();
  long value = 0;
  HypermetricSearch search(window_distances(g, order), k, max_norm);
  const auto b = search.run(value, result.vectors);
  if (b) {
    InequalityViolation v;
    for (std::size_t i = 0; i < k; ++i) {
      if ((*b)[i] == 0) continue;
      v.support.push_back(order[i]);
      v.b.push_back((*b)[i]);
    }
    v.value = value;
    result.violation = std::move(v);
  }
  return result;
}

}  // namespace wythoff
