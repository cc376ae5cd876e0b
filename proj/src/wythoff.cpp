#include "wythoff/wythoff.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "wythoff/errors.hpp"

namespace wythoff {

namespace {

struct PendingFace {
  int dim;
  TypeSubset type;
  Flag flag;
};

Flag restrict_chain(std::span<const FaceId> chain, const FaceComplex& k, TypeSubset type) {
  Flag out;
  for (FaceId f : chain)
    if (type.contains(k.dim(f))) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Wythoffian wythoffian(const FaceComplex& k, TypeSubset base) {
  const int d = k.dimension();
  if (base.empty() || !base.within(d)) {
    throw std::domain_error("type subset " + base.to_string() + " is not a nonempty subset of 0.." +
                            std::to_string(d));
  }
  const EssentialFamily family(base, d);
  const auto& essential = family.essential();

  std::vector<PendingFace> pending;
  for (TypeSubset t : essential) {
    const int dim = family.face_dimension(t);
    k.for_each_flag(t, [&](std::span<const FaceId> chain) {
      Flag flag(chain.begin(), chain.end());
      std::sort(flag.begin(), flag.end());
      pending.push_back({dim, t, std::move(flag)});
    });
  }
  std::sort(pending.begin(), pending.end(), [](const PendingFace& a, const PendingFace& b) {
    return std::tie(a.dim, a.type, a.flag) < std::tie(b.dim, b.type, b.flag);
  });

  std::map<TypeSubset, std::map<Flag, FaceId>> ids;
  for (std::size_t f = 0; f < pending.size(); ++f) {
    ids[pending[f].type].emplace(pending[f].flag, static_cast<FaceId>(f));
  }
  const auto n = pending.size();

  // Full order relation as sorted upper sets.
  std::vector<std::vector<FaceId>> up(n);
  for (TypeSubset lower : essential) {
    for (TypeSubset upper : essential) {
      if (!family.precedes(lower, upper)) continue;
      const auto& lower_ids = ids.at(lower);
      const auto& upper_ids = ids.at(upper);
      k.for_each_flag(lower | upper, [&](std::span<const FaceId> chain) {
        const FaceId a = lower_ids.at(restrict_chain(chain, k, lower));
        const FaceId b = upper_ids.at(restrict_chain(chain, k, upper));
        up[a].push_back(b);
      });
    }
  }
  for (auto& row : up) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  auto related = [&](FaceId a, FaceId b) { return std::binary_search(up[a].begin(), up[a].end(), b); };

  std::vector<std::pair<FaceId, FaceId>> covers;
  for (std::size_t a = 0; a < n; ++a) {
    for (FaceId c : up[a]) {
      for (FaceId b : up[c]) {
        if (!related(static_cast<FaceId>(a), b)) {
          throw StructuralError("Wythoffian order is not transitive");
        }
      }
    }
    for (FaceId b : up[a]) {
      const bool covered = std::none_of(up[a].begin(), up[a].end(),
                                        [&](FaceId c) { return c != b && related(c, b); });
      if (covered) covers.emplace_back(static_cast<FaceId>(a), b);
    }
  }

  std::vector<int> dims(n);
  std::vector<Flag> flags;
  std::vector<TypeSubset> types;
  flags.reserve(n);
  types.reserve(n);
  for (std::size_t f = 0; f < n; ++f) {
    dims[f] = pending[f].dim;
    types.push_back(pending[f].type);
    flags.push_back(std::move(pending[f].flag));
  }
  return Wythoffian{FaceComplex(d, std::move(dims), std::move(covers)), std::move(flags),
                    std::move(types)};
}

}  // namespace wythoff
