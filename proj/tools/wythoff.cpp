#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wythoff/coxeter.hpp"
#include "wythoff/errors.hpp"
#include "wythoff/factorization.hpp"
#include "wythoff/graphs.hpp"
#include "wythoff/inequalities.hpp"
#include "wythoff/tables.hpp"
#include "wythoff/verdict.hpp"

using namespace wythoff;

namespace {

struct GraphSource {
  std::string source;
  std::string v;
  bool dual = false;
};

void add_graph_source(CLI::App* cmd, GraphSource& g) {
  cmd->add_option("graph", g.source, "graph JSON file, or a polytope such as b3, ico, 600cell")->required();
  cmd->add_option("--v", g.v, "Wythoff subset, e.g. 0,2");
  cmd->add_flag("--dual", g.dual, "dual skeleton");
}

MetricGraph load_graph(const GraphSource& g) {
  if (std::filesystem::is_regular_file(g.source)) {
    std::ifstream in(g.source);
    return graph_from_json(nlohmann::json::parse(in));
  }
  if (g.v.empty()) throw std::invalid_argument("--v is required with a polytope");
  return wythoff_graph({g.source, TypeSubset::parse(g.v), g.dual});
}

// "nodes=2000000,vertices=128,solutions=4,windows=40:64:96"
void apply_limits(const std::string& text, EmbedOptions& options) {
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad limit " + item);
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    if (key == "nodes") {
      options.search.node_budget = std::stoull(value);
    } else if (key == "vertices") {
      options.search.max_vertices = std::stoull(value);
    } else if (key == "solutions") {
      options.search.max_solutions = std::stoull(value);
    } else if (key == "windows") {
      options.windows.clear();
      std::stringstream ws(value);
      std::string w;
      while (std::getline(ws, w, ':')) options.windows.push_back(std::stoull(w));
    } else {
      throw std::invalid_argument("unknown limit " + key);
    }
  }
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string l1_text(const L1Verdict& v) {
  switch (v.kind) {
    case L1Verdict::Kind::L1: return "l1, scale " + std::to_string(v.scale) + (v.minimal ? "" : " (smaller scales undecided)");
    case L1Verdict::Kind::NotL1: return "not l1";
    case L1Verdict::Kind::Undecided: return "undecided";
  }
  return {};
}

nlohmann::json l1_json(const L1Verdict& v) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : v.factors)
    factors.push_back({{"vertices", f.vertices}, {"shape", f.shape}, {"min_scale", f.min_scale}, {"decided", f.decided}});
  nlohmann::json out{{"l1", l1_text(v)}, {"scale", v.scale}, {"minimal", v.minimal}, {"factors", factors}};
  if (v.violation) out["witness"] = to_json(*v.violation);
  if (v.violating_factor) out["violating_factor"] = *v.violating_factor;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wythoff constructions, their skeletons and hypercube embeddings"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  GraphSource build_src;
  std::string build_out;
  auto* build = app.add_subcommand("build", "skeleton or dual skeleton of a Wythoffian as graph JSON");
  add_graph_source(build, build_src);
  build->add_option("--emit", build_out, "write the graph here instead of stdout");

  GraphSource embed_src;
  std::string limits;
  std::string emit_embedding;
  bool l1 = false;
  int hypermetric = 0;
  auto* embed = app.add_subcommand("embed", "hypercube, half-cube and Johnson embedding verdict");
  add_graph_source(embed, embed_src);
  embed->add_option("--limits", limits, "nodes=N,vertices=N,solutions=N,windows=A:B:C");
  embed->add_option("--emit-embedding", emit_embedding, "write the certificate of the first embedding");
  embed->add_flag("--l1", l1, "also factorize and report the least l1 scale");
  embed->add_option("--hypermetric", hypermetric, "also search hypermetric inequalities up to this norm");

  std::string group_name;
  std::uint64_t seed = CheckOptions{}.seed;
  std::string cox_emit;
  auto* cox = app.add_subcommand("coxeter", "group order, reflections and the inversion embedding");
  cox->add_option("group", group_name, "A4, B3, D5, F4, H4, I2(7) ...")->required();
  cox->add_option("--seed", seed, "seed for sampled pairs");
  cox->add_option("--emit", cox_emit, "write the inversion certificate here");

  std::string which;
  std::string cert_dir;
  std::string table_emit;
  int max_rank = 5;
  bool no_sweep = false;
  auto* table = app.add_subcommand("table", "regenerate a table and compare it with the expected one");
  table->add_option("which", which, "d3, d4 or coxeter")->required()->check(CLI::IsMember({"d3", "d4", "coxeter"}));
  table->add_option("--cert-dir", cert_dir, "stored certificates used when a search hits its limits");
  table->add_option("--emit", table_emit, "write every certificate here and check it back");
  table->add_option("--max-rank", max_rank, "largest rank for the coxeter table");
  table->add_option("--seed", seed, "seed for sampled pairs");
  table->add_flag("--no-sweep", no_sweep, "skip the sweep over all subsets");

  GraphSource check_src;
  std::string cert_path;
  auto* check = app.add_subcommand("check-cert", "verify a certificate against a graph");
  add_graph_source(check, check_src);
  check->add_option("certificate", cert_path, "certificate JSON")->required();
  check->add_option("--seed", seed, "seed for sampled pairs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) {
      const auto g = load_graph(build_src);
      const auto j = to_json(g);
      if (!build_out.empty()) {
        write_json(build_out, j);
        std::cout << "n=" << g.vertex_count() << " edges=" << g.edge_count() << "\n";
      } else {
        std::cout << j.dump() << "\n";
      }
      return 0;
    }

    if (embed->parsed()) {
      const auto g = load_graph(embed_src);
      EmbedOptions options;
      if (!limits.empty()) apply_limits(limits, options);
      const auto verdict = embed_graph(g, options);
      auto out = to_json(verdict);
      out["n"] = g.vertex_count();
      std::optional<L1Verdict> l1v;
      if (l1) l1v = l1_verdict(g);
      if (l1v) out["l1"] = l1_json(*l1v);
      std::optional<HypermetricResult> hyp;
      if (hypermetric > 0) hyp = hypermetric_check(g, hypermetric);
      if (hyp) {
        out["hypermetric"] = {{"complete", hyp->complete}, {"vectors", hyp->vectors}};
        if (hyp->violation) out["hypermetric"]["violation"] = to_json(*hyp->violation);
      }
      if (!emit_embedding.empty() && !verdict.embeddings.empty())
        write_certificate(emit_embedding, verdict.embeddings.front().certificate);
      if (json) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "n=" << g.vertex_count() << "\n";
        switch (verdict.kind) {
          case GraphVerdict::Kind::Embedded:
            for (const auto& c : verdict.embeddings) std::cout << c.description() << "\n";
            break;
          case GraphVerdict::Kind::NotEmbeddable:
            if (verdict.witness) {
              std::cout << "non-5-gonal, witness " << to_json(*verdict.witness).dump() << "\n";
            } else {
              std::cout << "no half-cube embedding (search exhausted)\n";
            }
            break;
          case GraphVerdict::Kind::Undecided: std::cout << "undecided\n"; break;
        }
        if (l1v) {
          std::cout << l1_text(*l1v) << "\n";
          for (const auto& f : l1v->factors)
            std::cout << "  factor " << f.shape << " on " << f.vertices << " vertices, least scale "
                      << (f.min_scale ? std::to_string(f.min_scale) : "unknown") << "\n";
        }
        if (hyp)
          std::cout << "hypermetric up to norm " << hypermetric << ": "
                    << (hyp->violation ? "violated " + to_json(*hyp->violation).dump() : "holds")
                    << (hyp->complete ? "" : " (partial)") << "\n";
      }
      return verdict.kind == GraphVerdict::Kind::Undecided ? 2 : 0;
    }

    if (cox->parsed()) {
      const CoxeterGroup group(CoxeterType::parse(group_name));
      const auto cert = inversion_embedding(group);
      CheckOptions options;
      options.seed = seed;
      const auto ok = check_certificate(cayley_graph(group), cert, options);
      if (!cox_emit.empty()) write_certificate(cox_emit, cert);
      const auto t = reflections(group).size();
      if (json) {
        std::cout << nlohmann::json{{"group", group.name()},
                                    {"order", group.order()},
                                    {"reflections", t},
                                    {"embedding_ok", ok.ok},
                                    {"pairs_checked", ok.pairs_checked},
                                    {"sampled", ok.sampled}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << group.name() << ": order " << group.order() << ", |T| = " << t << ", inversion labels "
                  << (ok ? "pass" : "fail") << " on " << ok.pairs_checked << (ok.sampled ? " sampled" : "") << " pairs\n";
      }
      return ok ? 0 : 1;
    }

    if (table->parsed()) {
      if (which == "coxeter") {
        const auto rows = table_coxeter(max_rank);
        bool all = true;
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : rows) {
          all = all && r.match;
          out.push_back({{"group", r.group},
                         {"order", r.order},
                         {"reflections", r.reflections},
                         {"expected", r.expected},
                         {"embedding_checked", r.embedding_checked},
                         {"match", r.match}});
        }
        if (json) {
          std::cout << out.dump(2) << "\n";
        } else {
          std::size_t matched = 0;
          for (const auto& r : rows) matched += r.match ? 1 : 0;
          std::cout << "coxeter: " << matched << "/" << rows.size() << " rows match\n";
          for (const auto& r : rows)
            std::cout << "  " << (r.match ? "ok  " : "FAIL") << "  " << r.group << "  |W|=" << r.order
                      << "  |T|=" << r.reflections << "  expected " << r.expected
                      << (r.embedding_checked ? "  (embedding checked)" : "") << "\n";
        }
        return all ? 0 : 1;
      }
      TableOptions options;
      options.check.seed = seed;
      options.sweep = !no_sweep;
      if (!cert_dir.empty()) options.golden_dir = cert_dir;
      if (!table_emit.empty()) options.emit_dir = table_emit;
      const auto report = which == "d3" ? table_d3(options) : table_d4(options);
      std::cout << (json ? to_json(report).dump(2) + "\n" : report.text());
      return report.ok() ? 0 : 1;
    }

    if (check->parsed()) {
      const auto g = load_graph(check_src);
      const auto cert = read_certificate(cert_path);
      CheckOptions options;
      options.seed = seed;
      const auto r = check_certificate(g, cert, options);
      if (json) {
        nlohmann::json out{{"ok", r.ok}, {"sampled", r.sampled}, {"pairs_checked", r.pairs_checked}};
        if (r.witness) out["witness"] = {r.witness->first, r.witness->second};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << (r ? "valid" : "invalid") << " scale " << cert.scale() << " embedding into " << cert.dimension()
                  << " coordinates, " << r.pairs_checked << (r.sampled ? " sampled" : "") << " pairs checked";
        if (r.witness) std::cout << ", fails at " << r.witness->first << " " << r.witness->second;
        std::cout << "\n";
      }
      return r ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
