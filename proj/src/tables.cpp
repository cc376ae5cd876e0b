#include "wythoff/tables.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "wythoff/embedding.hpp"
#include "wythoff/errors.hpp"
#include "wythoff/graphs.hpp"
#include "wythoff/isomorphism.hpp"
#include "wythoff/polytopes.hpp"
#include "wythoff/wythoff.hpp"

namespace wythoff {

std::string RowKey::name() const { return polytope + v.to_string() + (dual ? "*" : ""); }

std::string RowKey::stem() const {
  std::string out = polytope + "_";
  bool first = true;
  for (int k : v.members()) {
    if (!first) out += "-";
    out += std::to_string(k);
    first = false;
  }
  return dual ? out + "_dual" : out;
}

MetricGraph wythoff_graph(const RowKey& key) {
  const auto k = wythoffian(make_polytope(RegularPolytopeSpec::parse(key.polytope)), key.v).complex;
  return key.dual ? dual_skeleton(k) : skeleton(k);
}

const std::vector<ExpectedRow>& expected_table_d3() {
  static const std::vector<ExpectedRow> rows{
      {"Tetrahedron", {"a3", {0}, false}, 4, {{"J(4,1)", "q=1"}, {"½H3", "yes"}}},
      {"Octahedron", {"b3", {0}, false}, 6, {{"J(4,2)", "yes"}}},
      {"Cube", {"b3", {2}, false}, 8, {{"H3", "yes"}}},
      {"Icosahedron", {"ico", {0}, false}, 12, {{"½H6", "yes"}}},
      {"Dodecahedron", {"ico", {2}, false}, 20, {{"½H10", "yes"}}},
      {"(tr Tetrahedron)*", {"a3", {0, 1}, true}, 8, {{"½H7", "no"}}},
      {"(Cuboctahedron)*", {"b3", {1}, true}, 14, {{"H4", "yes"}}},
      {"(tr Cube)*", {"b3", {1, 2}, true}, 14, {{"J(12,6)", "no"}}},
      {"Rhombicuboctahedron", {"b3", {0, 2}, false}, 24, {{"J(10,5)", "yes"}}},
      {"tr Octahedron", {"b3", {0, 1}, false}, 24, {{"H6", "yes"}}},
      {"(tr Icosahedron)*", {"ico", {0, 1}, true}, 32, {{"½H10", "yes"}}},
      {"(Icosidodecahedron)*", {"ico", {1}, true}, 32, {{"H6", "yes"}}},
      {"(tr Dodecahedron)*", {"ico", {1, 2}, true}, 32, {{"½H26", "no"}}},
      {"tr Cuboctahedron", {"b3", {0, 1, 2}, false}, 48, {{"H9", "yes"}}},
      {"Rhombicosidodecahedron", {"ico", {0, 2}, false}, 60, {{"½H16", "yes"}}},
      {"tr Icosidodecahedron", {"ico", {0, 1, 2}, false}, 120, {{"H15", "yes"}}},
  };
  return rows;
}

const std::vector<ExpectedRow>& expected_table_d4() {
  static const std::vector<ExpectedRow> rows{
      {"alpha4", {"a4", {0}, false}, 5, {{"J(5,1)", "q=1"}}},
      {"beta4", {"b4", {0}, false}, 8, {{"½H4", "yes"}}},
      {"gamma4", {"b4", {3}, false}, 16, {{"H4", "yes"}}},
      {"alpha4({1})", {"a4", {1}, false}, 10, {{"J(5,2)", "q=4"}}},
      {"alpha4({0,3})*", {"a4", {0, 3}, true}, 30, {{"H5", "yes"}}},
      {"beta4({0,3})", {"b4", {0, 3}, false}, 64, {{"½H12", "yes"}}},
      {"alpha4({0,1,2,3})", {"a4", {0, 1, 2, 3}, false}, 120, {{"H10", "yes"}}},
      {"beta4({0,1,2})", {"b4", {0, 1, 2}, false}, 192, {{"H12", "yes"}}},
      {"beta4({0,1,2,3})", {"b4", {0, 1, 2, 3}, false}, 384, {{"H16", "yes"}}},
      {"24-cell({0,1,2,3})", {"24cell", {0, 1, 2, 3}, false}, 1152, {{"H24", "yes"}}},
      {"600-cell({0,1,2,3})", {"600cell", {0, 1, 2, 3}, false}, 14400, {{"H60", "yes"}}},
  };
  return rows;
}

CayleyCheck omnitruncation_check(const std::string& polytope, const CheckOptions& check) {
  const auto spec = RegularPolytopeSpec::parse(polytope);
  const CoxeterGroup group(spec.name(), linear_coxeter_matrix(spec.schlafli()));
  const auto cosets = coset_polytope(group);
  const auto w = wythoffian(cosets.complex, TypeSubset::full(cosets.complex.dimension()));
  const auto g = skeleton(w.complex);

  std::map<Flag, ElementId> element_of_flag;
  for (std::size_t e = 0; e < cosets.element_flags.size(); ++e)
    element_of_flag.emplace(cosets.element_flags[e], static_cast<ElementId>(e));
  const auto vertices = w.complex.faces_of_dim(0);
  std::vector<ElementId> element(vertices.size());
  CayleyCheck out;
  out.cayley_equal = vertices.size() == group.order();
  for (std::size_t i = 0; i < vertices.size() && out.cayley_equal; ++i) {
    const auto it = element_of_flag.find(w.flags[vertices[i]]);
    out.cayley_equal = it != element_of_flag.end();
    if (out.cayley_equal) element[i] = it->second;
  }
  if (out.cayley_equal) {
    out.cayley_equal = g.edge_count() * 2 == group.order() * static_cast<std::size_t>(group.rank());
    for (const auto& [a, b] : g.edges()) {
      bool generator_step = false;
      for (int s = 0; s < group.rank() && !generator_step; ++s) generator_step = group.times(element[a], s) == element[b];
      out.cayley_equal = out.cayley_equal && generator_step;
    }
  }
  if (const auto classes = theta_classes(g)) out.theta_classes = classes->count;
  out.reflections = reflections(group).size();
  if (!out.cayley_equal) {
    out.inversion.ok = false;
    return out;
  }
  const auto labels = inversion_embedding(group);
  EmbeddingCertificate cert(1, labels.dimension(), g.vertex_count());
  for (std::size_t i = 0; i < element.size(); ++i)
    for (std::size_t c = 0; c < labels.dimension(); ++c)
      if (labels.bit(element[i], c)) cert.set(static_cast<Vertex>(i), c);
  out.inversion = check_certificate(g, cert, check);
  return out;
}

namespace {

std::vector<ExpectedEmbedding> found_embeddings(const GraphVerdict& v) {
  std::vector<ExpectedEmbedding> out;
  for (const auto& c : v.embeddings) out.push_back({c.label(), c.balance.label()});
  return out;
}

bool same_embeddings(std::vector<ExpectedEmbedding> a, std::vector<ExpectedEmbedding> b) {
  auto key = [](const ExpectedEmbedding& e) { return e.label + " " + e.balance; };
  auto less = [&](const ExpectedEmbedding& x, const ExpectedEmbedding& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [&](const ExpectedEmbedding& x, const ExpectedEmbedding& y) { return key(x) == key(y); });
}

std::string joined(const std::vector<ExpectedEmbedding>& list) {
  std::string out;
  for (const auto& e : list) out += (out.empty() ? "" : "; ") + e.label + " " + e.balance;
  return out.empty() ? "-" : out;
}

bool full_type(const RowKey& key) {
  const int d = RegularPolytopeSpec::parse(key.polytope).dimension();
  return !key.dual && key.v == TypeSubset::full(d - 1);
}

RowReport run_row(const ExpectedRow& row, const MetricGraph& g, const TableOptions& options) {
  RowReport report;
  report.expected = row;
  report.n = g.vertex_count();
  auto embed = options.embed;
  if (options.golden_dir) {
    const auto path = std::filesystem::path(*options.golden_dir) / (row.key.stem() + ".json");
    if (std::filesystem::exists(path)) embed.golden = read_certificate(path.string());
  }
  report.verdict = embed_graph(g, embed);
  report.found = found_embeddings(report.verdict);
  report.match = report.n == row.n && same_embeddings(report.found, row.embeddings);
  if (!report.match) report.problem = "expected n=" + std::to_string(row.n) + " " + joined(row.embeddings);

  if (full_type(row.key)) {
    report.cayley = omnitruncation_check(row.key.polytope, options.check);
    const auto& c = *report.cayley;
    const bool claimed_dim = !report.verdict.embeddings.empty() && report.verdict.embeddings.front().m == c.reflections;
    if (!c.cayley_equal || !c.inversion || c.theta_classes != c.reflections || !claimed_dim) {
      report.match = false;
      report.problem += " omnitruncation check failed";
    }
  }

  if (options.emit_dir && !report.verdict.embeddings.empty()) {
    std::filesystem::create_directories(*options.emit_dir);
    for (std::size_t i = 0; i < report.verdict.embeddings.size(); ++i) {
      const auto name = row.key.stem() + (i == 0 ? "" : "." + std::to_string(i)) + ".json";
      const auto path = (std::filesystem::path(*options.emit_dir) / name).string();
      write_certificate(path, report.verdict.embeddings[i].certificate);
      report.certificate_files.push_back(path);
      if (!check_certificate(g, read_certificate(path), options.check)) {
        report.match = false;
        report.problem += " stored certificate " + name + " rejected";
      }
    }
  }
  return report;
}

// Facets of more than one size, so not a regular polytope.
bool mixed_facets(const FaceComplex& k) {
  std::set<std::size_t> sizes;
  for (FaceId f : k.faces_of_dim(k.dimension())) sizes.insert(k.down_covers(f).size());
  return sizes.size() > 1;
}

bool same_complex(const FaceComplex& a, const FaceComplex& b) {
  if (a.f_vector() != b.f_vector()) return false;
  return compare_complexes(a, b).isomorphic;
}

struct Generated {
  RowKey key;
  FaceComplex complex;
};

void sweep(const std::vector<std::string>& generators, int d, bool strict, const std::vector<MetricGraph>& row_graphs,
           const TableOptions& options, TableReport& report) {
  const auto& rows = report.rows;
  std::vector<Generated> distinct;
  std::map<std::string, std::string> verdict_cache;  // key name -> summary
  std::map<std::string, std::optional<std::size_t>> row_cache;

  auto find_row = [&](const RowKey& key, const MetricGraph& g, const GraphVerdict& v) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].expected.key.name() == key.name()) return i;
    const auto labels = found_embeddings(v);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (row_graphs[i].vertex_count() != g.vertex_count()) continue;
      if (g.vertex_count() <= kGraphIsomorphismCap) {
        if (is_isomorphic(g, row_graphs[i])) return i;
      } else if (same_embeddings(labels, rows[i].found)) {
        return i;
      }
    }
    return std::nullopt;
  };

  for (const auto& p : generators) {
    const auto base = make_polytope(RegularPolytopeSpec::parse(p));
    for (TypeSubset v : nonempty_subsets(d - 1)) {
      const auto k = wythoffian(base, v).complex;
      const RowKey primal{p, v, false};
      std::optional<std::string> same_as;
      std::size_t representative = distinct.size();
      for (std::size_t i = 0; i < distinct.size() && !same_as; ++i)
        if (same_complex(distinct[i].complex, k)) {
          same_as = distinct[i].key.name();
          representative = i;
        }
      if (!same_as) distinct.push_back({primal, k});

      bool embedded[2] = {false, false};
      for (int dual = 0; dual < 2; ++dual) {
        const RowKey key{p, v, dual == 1};
        SweepEntry entry;
        entry.key = key;
        entry.same_as = same_as;
        if (same_as) {
          const RowKey rep{distinct[representative].key.polytope, distinct[representative].key.v, dual == 1};
          entry.verdict = verdict_cache.at(rep.name());
          entry.row = row_cache.at(rep.name());
          entry.n = dual ? k.faces_of_dim(k.dimension()).size() : k.faces_of_dim(0).size();
          embedded[dual] = entry.row.has_value();
          verdict_cache[key.name()] = entry.verdict;
          row_cache[key.name()] = entry.row;
          report.sweep.push_back(std::move(entry));
          continue;
        }
        const auto g = dual ? dual_skeleton(k) : skeleton(k);
        entry.n = g.vertex_count();
        const auto verdict = embed_graph(g, options.embed);
        entry.verdict = verdict.summary();
        switch (verdict.kind) {
          case GraphVerdict::Kind::Embedded:
            embedded[dual] = true;
            entry.row = find_row(key, g, verdict);
            if (!entry.row) {
              report.failures.push_back(key.name() + ": embeddable (" + entry.verdict + ") but not in the table");
            } else if (!same_embeddings(found_embeddings(verdict), rows[*entry.row].expected.embeddings)) {
              report.failures.push_back(key.name() + ": embeddings differ from row " + rows[*entry.row].expected.name);
            }
            break;
          case GraphVerdict::Kind::NotEmbeddable:
            if (strict && !verdict.witness) report.failures.push_back(key.name() + ": no 5-gonal witness");
            break;
          case GraphVerdict::Kind::Undecided:
            report.failures.push_back(key.name() + ": undecided");
            break;
        }
        verdict_cache[key.name()] = entry.verdict;
        row_cache[key.name()] = entry.row;
        report.sweep.push_back(std::move(entry));
      }
      if (strict && !same_as && mixed_facets(k) && embedded[0] == embedded[1])
        report.failures.push_back(primal.name() + ": skeleton and dual skeleton both " +
                                  (embedded[0] ? "embeddable" : "non-embeddable"));
    }
  }
  report.distinct_wythoffians = distinct.size();
}

TableReport run_table(const std::string& title, const std::vector<ExpectedRow>& expected,
                      const std::vector<std::string>& generators, int d, bool strict, const TableOptions& options) {
  TableReport report;
  report.title = title;
  std::vector<MetricGraph> graphs;
  for (const auto& row : expected) {
    graphs.push_back(wythoff_graph(row.key));
    report.rows.push_back(run_row(row, graphs.back(), options));
    if (!report.rows.back().match) report.failures.push_back(row.name + ":" + report.rows.back().problem);
  }
  if (options.sweep) {
    sweep(generators, d, strict, graphs, options, report);
    if (strict && report.distinct_wythoffians != expected.size())
      report.failures.push_back("sweep found " + std::to_string(report.distinct_wythoffians) +
                                " distinct Wythoffians, table has " + std::to_string(expected.size()));
  }
  return report;
}

}  // namespace

std::size_t TableReport::matched() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RowReport& r) { return r.match; }));
}

std::string TableReport::text() const {
  std::ostringstream os;
  os << title << ": " << matched() << "/" << rows.size() << " rows match\n";
  for (const auto& r : rows) {
    os << "  " << (r.match ? "ok  " : "FAIL") << "  " << r.expected.name << "  " << r.expected.key.name()
       << "  n=" << r.n << "  " << joined(r.found);
    if (r.verdict.golden) os << "  (stored certificate)";
    if (r.cayley)
      os << "  [Cayley graph " << (r.cayley->cayley_equal ? "equal" : "differs") << ", " << r.cayley->theta_classes
         << " classes, inversion labels " << (r.cayley->inversion ? "pass" : "fail") << " on "
         << r.cayley->inversion.pairs_checked << (r.cayley->inversion.sampled ? " sampled" : "") << " pairs]";
    if (!r.match) os << "  (" << r.problem << ")";
    os << "\n";
  }
  if (!sweep.empty()) {
    os << "sweep: " << sweep.size() << " graphs, " << distinct_wythoffians << " distinct Wythoffians\n";
    for (const auto& e : sweep) {
      os << "  " << e.key.name() << "  n=" << e.n << "  " << e.verdict;
      if (e.row) os << "  (row " << rows[*e.row].expected.name << ")";
      if (e.same_as) os << "  (= " << *e.same_as << ")";
      os << "\n";
    }
  }
  os << "failures: " << failures.size() << "\n";
  for (const auto& f : failures) os << "  " << f << "\n";
  return os.str();
}

nlohmann::json to_json(const TableReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json found = nlohmann::json::array();
    for (const auto& e : row.found) found.push_back({{"embedding", e.label}, {"balance", e.balance}});
    nlohmann::json j{{"name", row.expected.name},
                     {"key", row.expected.key.name()},
                     {"n", row.n},
                     {"found", found},
                     {"match", row.match},
                     {"golden", row.verdict.golden},
                     {"certificates", row.certificate_files}};
    if (row.cayley)
      j["cayley"] = {{"equal", row.cayley->cayley_equal},
                     {"theta_classes", row.cayley->theta_classes},
                     {"reflections", row.cayley->reflections},
                     {"inversion_ok", row.cayley->inversion.ok},
                     {"pairs_checked", row.cayley->inversion.pairs_checked},
                     {"sampled", row.cayley->inversion.sampled}};
    rows.push_back(std::move(j));
  }
  nlohmann::json sweep = nlohmann::json::array();
  for (const auto& e : r.sweep) {
    nlohmann::json j{{"key", e.key.name()}, {"n", e.n}, {"verdict", e.verdict}};
    if (e.row) j["row"] = r.rows[*e.row].expected.name;
    if (e.same_as) j["same_as"] = *e.same_as;
    sweep.push_back(std::move(j));
  }
  return {{"table", r.title},
          {"matched", r.matched()},
          {"rows", rows},
          {"sweep", sweep},
          {"distinct_wythoffians", r.distinct_wythoffians},
          {"failures", r.failures},
          {"ok", r.ok()}};
}

TableReport table_d3(const TableOptions& options) {
  return run_table("d3", expected_table_d3(), {"a3", "b3", "ico"}, 3, true, options);
}

TableReport table_d4(const TableOptions& options) {
  return run_table("d4", expected_table_d4(), {"a4", "b4", "24cell", "600cell"}, 4, false, options);
}

std::vector<CoxeterRow> table_coxeter(int max_rank, std::size_t check_limit) {
  struct Entry {
    std::string name;
    std::size_t expected;
  };
  std::vector<Entry> entries;
  for (std::size_t d = 1; d <= static_cast<std::size_t>(max_rank); ++d) entries.push_back({"A" + std::to_string(d), d * (d + 1) / 2});
  for (std::size_t d = 2; d <= static_cast<std::size_t>(max_rank); ++d) entries.push_back({"B" + std::to_string(d), d * d});
  for (std::size_t d = 4; d <= static_cast<std::size_t>(max_rank); ++d) entries.push_back({"D" + std::to_string(d), d * (d - 1)});
  if (max_rank >= 4) entries.push_back({"F4", 24});
  if (max_rank >= 3) entries.push_back({"H3", 15});
  if (max_rank >= 4) entries.push_back({"H4", 60});
  for (std::size_t p = 2; p <= 12; ++p) entries.push_back({"I2(" + std::to_string(p) + ")", p});

  std::vector<CoxeterRow> rows;
  for (const auto& e : entries) {
    const CoxeterGroup group(CoxeterType::parse(e.name));
    CoxeterRow row;
    row.group = e.name;
    row.order = group.order();
    row.reflections = reflections(group).size();
    row.expected = e.expected;
    row.match = row.reflections == row.expected;
    if (row.order <= check_limit) {
      row.embedding_checked = true;
      const auto cert = inversion_embedding(group);
      row.match = row.match && cert.dimension() == row.expected && check_certificate(cayley_graph(group), cert).ok;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace wythoff
