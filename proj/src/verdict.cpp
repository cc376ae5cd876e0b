#include "wythoff/verdict.hpp"

#include <algorithm>

namespace wythoff {

namespace {

std::string balance_words(const BalanceProfile& b) {
  switch (b.kind) {
    case BalanceProfile::Kind::Equicut: return "equicut";
    case BalanceProfile::Kind::Balanced: return "q=" + std::to_string(b.q);
    case BalanceProfile::Kind::Neither: return "neither";
  }
  return "neither";
}

EmbeddingClaim claim_for(const MetricGraph& g, const EmbeddingCertificate& raw) {
  EmbeddingClaim claim;
  claim.certificate = normalized_at_zero(raw);
  claim.m = claim.certificate.dimension();
  claim.balance = equicut_profile(g, claim.certificate);
  if (raw.scale() == 1) {
    claim.family = EmbeddingClaim::Family::Hypercube;
  } else if (const auto j = johnson_form(claim.certificate)) {
    claim.family = EmbeddingClaim::Family::Johnson;
    claim.m = j->m;
    claim.n = j->n;
  } else {
    claim.family = EmbeddingClaim::Family::HalfCube;
  }
  return claim;
}

}  // namespace

std::string EmbeddingClaim::label() const {
  switch (family) {
    case Family::Hypercube: return "H" + std::to_string(m);
    case Family::HalfCube: return "½H" + std::to_string(m);
    case Family::Johnson: return "J(" + std::to_string(m) + "," + std::to_string(n) + ")";
  }
  return {};
}

std::string EmbeddingClaim::description() const {
  switch (family) {
    case Family::Hypercube: return "H " + std::to_string(m) + ", " + balance_words(balance);
    case Family::HalfCube: return "halfcube " + std::to_string(m) + ", " + balance_words(balance);
    case Family::Johnson: return label() + ", " + balance_words(balance);
  }
  return {};
}

std::string GraphVerdict::summary() const {
  switch (kind) {
    case Kind::Embedded: {
      std::string out;
      for (const auto& c : embeddings) {
        if (!out.empty()) out += "; ";
        out += c.label() + " " + c.balance.label();
      }
      return out;
    }
    case Kind::NotEmbeddable: return witness ? "non-5-gonal" : "no half-cube";
    case Kind::Undecided: return "undecided";
  }
  return {};
}

GraphVerdict embed_graph(const MetricGraph& g, const EmbedOptions& options) {
  GraphVerdict verdict;
  if (const auto cube = partial_cube(g)) {
    verdict.kind = GraphVerdict::Kind::Embedded;
    verdict.embeddings.push_back(claim_for(g, *cube));
    return verdict;
  }

  const auto search = scale2_search(g, options.search);
  for (const auto& s : search.solutions) {
    auto claim = claim_for(g, s.certificate());
    const bool seen = std::any_of(verdict.embeddings.begin(), verdict.embeddings.end(), [&](const EmbeddingClaim& c) {
      return c.label() == claim.label() && c.balance.label() == claim.balance.label();
    });
    if (!seen) verdict.embeddings.push_back(std::move(claim));
  }
  if (!verdict.embeddings.empty()) {
    verdict.kind = GraphVerdict::Kind::Embedded;
    return verdict;
  }
  verdict.exhausted = search.status == ScaleSearchResult::Status::None;

  if (!verdict.exhausted && options.golden && options.golden->vertex_count() == g.vertex_count() &&
      check_certificate(g, *options.golden)) {
    verdict.kind = GraphVerdict::Kind::Embedded;
    verdict.golden = true;
    verdict.embeddings.push_back(claim_for(g, *options.golden));
    return verdict;
  }

  if (g.vertex_count() >= 5) {
    for (std::size_t w : options.windows) {
      const auto r = five_gonal_search(g, {.window = w});
      if (r.violation) {
        verdict.witness = r.violation;
        break;
      }
      if (r.status == FiveGonalResult::Status::Holds) break;
    }
  }
  if (verdict.witness || verdict.exhausted) verdict.kind = GraphVerdict::Kind::NotEmbeddable;
  return verdict;
}

nlohmann::json to_json(const GraphVerdict& v) {
  nlohmann::json out{{"verdict", v.summary()}, {"exhausted", v.exhausted}, {"golden", v.golden}};
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : v.embeddings)
    list.push_back({{"embedding", c.label()},
                    {"scale", c.certificate.scale()},
                    {"m", c.m},
                    {"balance", c.balance.label()},
                    {"description", c.description()}});
  out["embeddings"] = std::move(list);
  if (v.witness) out["witness"] = to_json(*v.witness);
  return out;
}

}  // namespace wythoff
