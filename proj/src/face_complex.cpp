#include "wythoff/face_complex.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include "wythoff/errors.hpp"

namespace wythoff {

struct FaceComplex::UpperSets {
  std::once_flag once;
  std::vector<std::size_t> offsets;
  std::vector<FaceId> targets;
};

namespace {

void build_csr(std::size_t n, const std::vector<std::pair<FaceId, FaceId>>& arcs,
               std::vector<std::size_t>& offsets, std::vector<FaceId>& targets) {
  offsets.assign(n + 1, 0);
  for (const auto& [from, to] : arcs) ++offsets[from + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  targets.assign(arcs.size(), 0);
  auto cursor = offsets;
  for (const auto& [from, to] : arcs) targets[cursor[from]++] = to;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              targets.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
  }
}

}  // namespace

FaceComplex::FaceComplex(int d, std::vector<int> dims,
                         std::vector<std::pair<FaceId, FaceId>> covers)
    : d_(d), dims_(std::move(dims)), upper_(std::make_shared<UpperSets>()) {
  if (d_ < 0) throw StructuralError("complex dimension must be nonnegative");
  if (dims_.empty()) throw StructuralError("complex has no faces");
  const auto n = dims_.size();
  for (std::size_t f = 0; f < n; ++f) {
    if (dims_[f] < 0 || dims_[f] > d_) {
      throw StructuralError("face " + std::to_string(f) + " has dimension outside 0.." +
                            std::to_string(d_));
    }
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  for (const auto& [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || static_cast<std::size_t>(lo) >= n ||
        static_cast<std::size_t>(hi) >= n) {
      throw StructuralError("cover references an unknown face");
    }
    if (dims_[hi] != dims_[lo] + 1) {
      throw StructuralError("cover " + std::to_string(lo) + "<" + std::to_string(hi) +
                            " does not raise the dimension by one");
    }
  }
  build_csr(n, covers, up_offsets_, up_targets_);
  std::vector<std::pair<FaceId, FaceId>> reversed;
  reversed.reserve(covers.size());
  for (const auto& [lo, hi] : covers) reversed.emplace_back(hi, lo);
  build_csr(n, reversed, down_offsets_, down_targets_);

  for (std::size_t f = 0; f < n; ++f) {
    const auto face = static_cast<FaceId>(f);
    if (dims_[f] > 0 && down_covers(face).empty()) {
      throw StructuralError("face " + std::to_string(f) + " of dimension " +
                            std::to_string(dims_[f]) + " is minimal");
    }
    if (dims_[f] < d_ && up_covers(face).empty()) {
      throw StructuralError("face " + std::to_string(f) + " of dimension " +
                            std::to_string(dims_[f]) + " is maximal");
    }
  }

  if (d_ >= 1) {
    std::vector<char> seen(n, 0);
    std::vector<FaceId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const FaceId f = stack.back();
      stack.pop_back();
      for (auto span : {up_covers(f), down_covers(f)}) {
        for (FaceId g : span) {
          if (!seen[g]) {
            seen[g] = 1;
            ++reached;
            stack.push_back(g);
          }
        }
      }
    }
    if (reached != n) throw StructuralError("complex is not connected");
  }

  by_dim_offsets_.assign(static_cast<std::size_t>(d_) + 2, 0);
  for (int k : dims_) ++by_dim_offsets_[static_cast<std::size_t>(k) + 1];
  std::partial_sum(by_dim_offsets_.begin(), by_dim_offsets_.end(), by_dim_offsets_.begin());
  by_dim_.resize(n);
  auto cursor = by_dim_offsets_;
  for (std::size_t f = 0; f < n; ++f) by_dim_[cursor[dims_[f]]++] = static_cast<FaceId>(f);
}

std::span<const FaceId> FaceComplex::faces_of_dim(int k) const {
  if (k < 0 || k > d_) return {};
  return {by_dim_.data() + by_dim_offsets_[k], by_dim_offsets_[k + 1] - by_dim_offsets_[k]};
}

std::span<const FaceId> FaceComplex::up_covers(FaceId f) const {
  return {up_targets_.data() + up_offsets_[f], up_offsets_[f + 1] - up_offsets_[f]};
}

std::span<const FaceId> FaceComplex::down_covers(FaceId f) const {
  return {down_targets_.data() + down_offsets_[f], down_offsets_[f + 1] - down_offsets_[f]};
}

std::vector<std::pair<FaceId, FaceId>> FaceComplex::covers() const {
  std::vector<std::pair<FaceId, FaceId>> out;
  out.reserve(up_targets_.size());
  for (std::size_t f = 0; f < size(); ++f) {
    for (FaceId g : up_covers(static_cast<FaceId>(f))) out.emplace_back(static_cast<FaceId>(f), g);
  }
  return out;
}

const FaceComplex::UpperSets& FaceComplex::upper_sets() const {
  std::call_once(upper_->once, [this] {
    const auto n = size();
    std::vector<std::vector<FaceId>> sets(n);
    std::vector<int> stamp(n, -1);
    for (int k = d_; k >= 0; --k) {
      for (FaceId f : faces_of_dim(k)) {
        auto& out = sets[f];
        for (FaceId g : up_covers(f)) {
          if (stamp[g] != f) {
            stamp[g] = f;
            out.push_back(g);
          }
          for (FaceId h : sets[g]) {
            if (stamp[h] != f) {
              stamp[h] = f;
              out.push_back(h);
            }
          }
        }
        std::sort(out.begin(), out.end(), [this](FaceId a, FaceId b) {
          return dims_[a] != dims_[b] ? dims_[a] < dims_[b] : a < b;
        });
      }
    }
    upper_->offsets.assign(n + 1, 0);
    for (std::size_t f = 0; f < n; ++f) upper_->offsets[f + 1] = upper_->offsets[f] + sets[f].size();
    upper_->targets.reserve(upper_->offsets[n]);
    for (auto& s : sets) upper_->targets.insert(upper_->targets.end(), s.begin(), s.end());
  });
  return *upper_;
}

std::span<const FaceId> FaceComplex::above(FaceId f) const {
  const auto& u = upper_sets();
  return {u.targets.data() + u.offsets[f], u.offsets[f + 1] - u.offsets[f]};
}

bool FaceComplex::less(FaceId lower, FaceId upper) const {
  if (dims_[upper] <= dims_[lower]) return false;
  const auto up = above(lower);
  return std::binary_search(up.begin(), up.end(), upper, [this](FaceId a, FaceId b) {
    return dims_[a] != dims_[b] ? dims_[a] < dims_[b] : a < b;
  });
}

std::vector<std::size_t> FaceComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (int k = 0; k <= d_; ++k) out.push_back(faces_of_dim(k).size());
  return out;
}

bool FaceComplex::is_polytope() const {
  if (d_ == 0) return size() == 2;
  for (FaceId e : faces_of_dim(1)) {
    if (down_covers(e).size() != 2) return false;
  }
  for (FaceId r : faces_of_dim(d_ - 1)) {
    if (up_covers(r).size() != 2) return false;
  }
  std::vector<int> count(size(), 0);
  std::vector<FaceId> touched;
  for (std::size_t x = 0; x < size(); ++x) {
    touched.clear();
    for (FaceId z : up_covers(static_cast<FaceId>(x))) {
      for (FaceId y : up_covers(z)) {
        if (count[y]++ == 0) touched.push_back(y);
      }
    }
    bool ok = true;
    for (FaceId y : touched) {
      if (count[y] != 2) ok = false;
      count[y] = 0;
    }
    if (!ok) return false;
  }
  return true;
}

void FaceComplex::for_each_flag(
    TypeSubset type, const std::function<void(std::span<const FaceId>)>& visit) const {
  if (type.empty() || !type.within(d_)) return;
  const auto levels = type.members();
  std::vector<FaceId> chain(levels.size());
  const auto by_dim_less = [this](FaceId a, int k) { return dims_[a] < k; };

  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == levels.size()) {
      visit(std::span<const FaceId>(chain));
      return;
    }
    const int k = levels[depth];
    const auto up = above(chain[depth - 1]);
    auto it = std::lower_bound(up.begin(), up.end(), k, by_dim_less);
    for (; it != up.end() && dims_[*it] == k; ++it) {
      chain[depth] = *it;
      extend(depth + 1);
    }
  };
  for (FaceId f : faces_of_dim(levels[0])) {
    chain[0] = f;
    extend(1);
  }
}

std::size_t FaceComplex::count_flags(TypeSubset type) const {
  std::size_t count = 0;
  for_each_flag(type, [&](std::span<const FaceId>) { ++count; });
  return count;
}

std::vector<Flag> FaceComplex::flags(TypeSubset type) const {
  std::vector<Flag> out;
  for_each_flag(type, [&](std::span<const FaceId> chain) {
    Flag f(chain.begin(), chain.end());
    std::sort(f.begin(), f.end());
    out.push_back(std::move(f));
  });
  std::sort(out.begin(), out.end());
  return out;
}

FaceComplex dual(const FaceComplex& k) {
  std::vector<int> dims(k.size());
  for (std::size_t f = 0; f < k.size(); ++f) dims[f] = k.dimension() - k.dim(static_cast<FaceId>(f));
  auto covers = k.covers();
  for (auto& [lo, hi] : covers) std::swap(lo, hi);
  return FaceComplex(k.dimension(), std::move(dims), std::move(covers));
}

nlohmann::json to_json(const FaceComplex& k) {
  nlohmann::json faces = nlohmann::json::array();
  for (int d = 0; d <= k.dimension(); ++d) {
    for (FaceId f : k.faces_of_dim(d)) faces.push_back({{"id", f}, {"dim", d}});
  }
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [lo, hi] : k.covers()) covers.push_back({lo, hi});
  return {{"d", k.dimension()}, {"faces", std::move(faces)}, {"covers", std::move(covers)}};
}

FaceComplex complex_from_json(const nlohmann::json& j) {
  const int d = j.at("d").get<int>();
  const auto& faces = j.at("faces");
  std::vector<int> dims(faces.size(), -1);
  for (const auto& f : faces) {
    const auto id = f.at("id").get<std::size_t>();
    if (id >= dims.size() || dims[id] != -1) {
      throw StructuralError("face ids must be a permutation of 0..n-1");
    }
    dims[id] = f.at("dim").get<int>();
  }
  std::vector<std::pair<FaceId, FaceId>> covers;
  for (const auto& c : j.at("covers")) covers.emplace_back(c.at(0).get<FaceId>(), c.at(1).get<FaceId>());
  return FaceComplex(d, std::move(dims), std::move(covers));
}

}  // namespace wythoff
