#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wythoff/certificate.hpp"
#include "wythoff/coxeter.hpp"
#include "wythoff/metric_graph.hpp"
#include "wythoff/type_subset.hpp"
#include "wythoff/verdict.hpp"

namespace wythoff {

/// A Wythoffian graph: skeleton of K(V), or its dual skeleton.
struct RowKey {
  std::string polytope;
  TypeSubset v;
  bool dual = false;

  /// "b3{0,2}" or "ico{1,2}*"
  std::string name() const;
  /// File stem such as "ico_1-2_dual".
  std::string stem() const;
};

MetricGraph wythoff_graph(const RowKey& key);

struct ExpectedEmbedding {
  std::string label;    // "J(4,1)", "½H6", "H15"
  std::string balance;  // "yes", "no", "q=4"
};

struct ExpectedRow {
  std::string name;
  RowKey key;
  std::size_t n;
  std::vector<ExpectedEmbedding> embeddings;
};

const std::vector<ExpectedRow>& expected_table_d3();
const std::vector<ExpectedRow>& expected_table_d4();

struct TableOptions {
  EmbedOptions embed;
  /// Stored certificates named <stem>.json, used when a search hits its limits.
  std::optional<std::string> golden_dir;
  /// Every claimed embedding is written here and read back for checking.
  std::optional<std::string> emit_dir;
  CheckOptions check;
  bool sweep = true;
};

/// Result of identifying the skeleton of K({0..d}) with the Cayley graph of
/// the Coxeter group (vertices are maximal flags, that is, group elements).
struct CayleyCheck {
  bool cayley_equal = false;
  std::size_t theta_classes = 0;
  std::size_t reflections = 0;
  CertificateCheck inversion;
};

/// Builds the regular polytope from cosets and checks the omnitruncation.
CayleyCheck omnitruncation_check(const std::string& polytope, const CheckOptions& check = {});

struct RowReport {
  ExpectedRow expected;
  std::size_t n = 0;
  GraphVerdict verdict;
  std::vector<ExpectedEmbedding> found;
  std::optional<CayleyCheck> cayley;
  std::vector<std::string> certificate_files;
  bool match = false;
  std::string problem;
};

struct SweepEntry {
  RowKey key;
  std::size_t n = 0;
  std::string verdict;
  /// Index into the table of the row with an isomorphic graph.
  std::optional<std::size_t> row;
  /// Representative key when this Wythoffian repeats an earlier one.
  std::optional<std::string> same_as;
};

struct TableReport {
  std::string title;
  std::vector<RowReport> rows;
  std::vector<SweepEntry> sweep;
  std::size_t distinct_wythoffians = 0;
  std::vector<std::string> failures;

  std::size_t matched() const;
  bool ok() const { return failures.empty(); }
  std::string text() const;
};

nlohmann::json to_json(const TableReport& r);

/// Regenerates every row, compares with the expected table and, with
/// `sweep`, classifies every skeleton and dual skeleton of every K(V).
TableReport table_d3(const TableOptions& options = {});
TableReport table_d4(const TableOptions& options = {});

struct CoxeterRow {
  std::string group;
  std::size_t order = 0;
  std::size_t reflections = 0;
  std::size_t expected = 0;
  bool embedding_checked = false;
  bool match = false;
};

/// |T| by conjugacy closure for A_d, B_d, D_d (d <= max_rank), F4, H3, H4
/// and I2(p) for p <= 12, against the closed forms. Groups up to
/// `check_limit` elements also have their inversion embedding verified.
std::vector<CoxeterRow> table_coxeter(int max_rank = 5, std::size_t check_limit = 2000);

}  // namespace wythoff
