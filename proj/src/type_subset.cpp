#include "wythoff/type_subset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace wythoff {

namespace {

constexpr int kMaxFamilyDimension = 10;

std::uint32_t interval_mask(int a, int b) {
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  const std::uint64_t upto_hi = (std::uint64_t{1} << (hi + 1)) - 1;
  const std::uint64_t below_lo = (std::uint64_t{1} << lo) - 1;
  return static_cast<std::uint32_t>(upto_hi & ~below_lo);
}

void require_member_range(int k) {
  if (k < 0 || k > TypeSubset::kMaxElement) {
    throw std::domain_error("type member out of range: " + std::to_string(k));
  }
}

}  // namespace

TypeSubset::TypeSubset(std::initializer_list<int> members) {
  for (int k : members) {
    require_member_range(k);
    bits_ |= std::uint32_t{1} << k;
  }
}

TypeSubset TypeSubset::full(int d) {
  if (d < 0 || d > kMaxElement) {
    throw std::domain_error("dimension out of range: " + std::to_string(d));
  }
  return TypeSubset(static_cast<std::uint32_t>((std::uint64_t{1} << (d + 1)) - 1));
}

TypeSubset TypeSubset::single(int k) {
  require_member_range(k);
  return TypeSubset(std::uint32_t{1} << k);
}

TypeSubset TypeSubset::parse(const std::string& text) {
  TypeSubset out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    const int k = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad type subset: " + text);
    out = out.with(k);
    token.clear();
  };
  for (char c : text) {
    if (c == '{' || c == '}' || c == ' ') continue;
    if (c == ',') {
      flush();
    } else if (c >= '0' && c <= '9') {
      token.push_back(c);
    } else {
      throw std::invalid_argument("bad type subset: " + text);
    }
  }
  flush();
  return out;
}

int TypeSubset::size() const { return std::popcount(bits_); }

bool TypeSubset::contains(int k) const {
  return k >= 0 && k <= kMaxElement && ((bits_ >> k) & 1U) != 0;
}

int TypeSubset::min() const {
  if (empty()) throw std::domain_error("min of empty type subset");
  return std::countr_zero(bits_);
}

int TypeSubset::max() const {
  if (empty()) throw std::domain_error("max of empty type subset");
  return 31 - std::countl_zero(bits_);
}

std::vector<int> TypeSubset::members() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

TypeSubset TypeSubset::with(int k) const {
  require_member_range(k);
  return TypeSubset(bits_ | (std::uint32_t{1} << k));
}

TypeSubset TypeSubset::without(int k) const {
  require_member_range(k);
  return TypeSubset(bits_ & ~(std::uint32_t{1} << k));
}

bool TypeSubset::within(int d) const { return d >= 0 && subset_of(full(d)); }

TypeSubset TypeSubset::reflected(int d) const {
  TypeSubset out;
  for (int k : members()) {
    if (k > d) throw std::domain_error("reflected: member exceeds dimension");
    out = out.with(d - k);
  }
  return out;
}

std::string TypeSubset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int k : members()) {
    if (!first) os << ',';
    os << k;
    first = false;
  }
  os << '}';
  return os.str();
}

std::vector<TypeSubset> nonempty_subsets(int d) {
  const auto top = TypeSubset::full(d).bits();
  std::vector<TypeSubset> out;
  out.reserve(top);
  for (std::uint32_t b = 1; b <= top; ++b) out.emplace_back(b);
  return out;
}

bool blocks(TypeSubset blocker, TypeSubset target, TypeSubset from, int d) {
  if (blocker.empty() || target.empty() || from.empty()) {
    throw std::domain_error("blocks: type subsets must be nonempty");
  }
  if (!blocker.within(d) || !target.within(d) || !from.within(d)) {
    throw std::domain_error("blocks: type subset exceeds {0..d}");
  }
  for (int u : target.members()) {
    for (int v : from.members()) {
      if ((blocker.bits() & interval_mask(u, v)) == 0) return false;
    }
  }
  return true;
}

EssentialFamily::EssentialFamily(TypeSubset base, int d) : base_(base), d_(d) {
  if (d < 0 || d > kMaxFamilyDimension) {
    throw std::domain_error("essential_family: unsupported dimension " + std::to_string(d));
  }
  if (base.empty() || !base.within(d)) {
    throw std::domain_error("essential_family: base must be a nonempty subset of {0..d}");
  }
  const auto all = nonempty_subsets(d);
  const std::size_t n = all.size();
  le_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      le_[i * n + j] = blocks(all[i], all[j], base, d) ? 1 : 0;
    }
  }

  class_index_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (class_index_[i] >= 0) continue;
    BlockingClass cls;
    std::uint32_t meet = all[i].bits();
    std::uint32_t join = all[i].bits();
    for (std::size_t j = i; j < n; ++j) {
      if (le_[i * n + j] && le_[j * n + i]) {
        class_index_[j] = static_cast<int>(classes_.size());
        cls.members.push_back(all[j]);
        meet &= all[j].bits();
        join |= all[j].bits();
      }
    }
    cls.smallest = TypeSubset(meet);
    cls.largest = TypeSubset(join);
    // The class is closed under intersection and union, so both extremes
    // must be members themselves.
    if (meet == 0 || class_index_[TypeSubset(meet).bits() - 1] != class_index_[i] ||
        class_index_[TypeSubset(join).bits() - 1] != class_index_[i]) {
      throw std::logic_error("blocking class not closed under meet/join for base " +
                             base.to_string());
    }
    essential_.push_back(cls.smallest);
    classes_.push_back(std::move(cls));
  }
  std::sort(essential_.begin(), essential_.end());
}

bool EssentialFamily::is_essential(TypeSubset u) const {
  return std::binary_search(essential_.begin(), essential_.end(), u);
}

bool EssentialFamily::preceq(TypeSubset lower, TypeSubset upper) const {
  if (lower.empty() || upper.empty() || !lower.within(d_) || !upper.within(d_)) {
    throw std::domain_error("preceq: arguments must be nonempty subsets of {0..d}");
  }
  const std::size_t n = TypeSubset::full(d_).bits();
  return le_[index(lower) * n + index(upper)] != 0;
}

bool EssentialFamily::precedes(TypeSubset lower, TypeSubset upper) const {
  return preceq(lower, upper) && !preceq(upper, lower);
}

const BlockingClass& EssentialFamily::class_of(TypeSubset u) const {
  if (u.empty() || !u.within(d_)) {
    throw std::domain_error("class_of: argument must be a nonempty subset of {0..d}");
  }
  return classes_[class_index_[index(u)]];
}

int EssentialFamily::face_dimension(TypeSubset u) const {
  return d_ + 1 - largest(u).size();
}

EssentialFamily essential_family(TypeSubset base, int d) { return EssentialFamily(base, d); }

BoundaryTypes boundary_types(TypeSubset base, int d) {
  if (base.empty() || !base.within(d)) {
    throw std::domain_error("boundary_types: base must be a nonempty subset of {0..d}");
  }
  BoundaryTypes out;
  for (int k : base.members()) {
    TypeSubset u = base.without(k);
    if (k > 0) u = u.with(k - 1);
    if (k < d) u = u.with(k + 1);
    out.edge_types.push_back(u);
  }
  const bool only_bottom = base == TypeSubset::single(0);
  const bool only_top = base == TypeSubset::single(d);
  for (int k = 0; k <= d; ++k) {
    const bool keep = (k == 0 && !only_bottom) || (k == d && !only_top) ||
                      (base.min() < k && k < base.max());
    if (keep) out.facet_types.push_back(TypeSubset::single(k));
  }
  std::sort(out.edge_types.begin(), out.edge_types.end());
  out.edge_types.erase(std::unique(out.edge_types.begin(), out.edge_types.end()),
                       out.edge_types.end());
  return out;
}

std::uint64_t wythoff_type_count(int d, bool self_dual) {
  if (d < 1 || d > 60) throw std::domain_error("wythoff_type_count: d out of range");
  if (!self_dual) return (std::uint64_t{1} << (d + 1)) - 1;
  const int half = d / 2;  // ceil((d-1)/2) for d >= 1
  return (std::uint64_t{1} << d) + (std::uint64_t{1} << half) - 1;
}

}  // namespace wythoff
