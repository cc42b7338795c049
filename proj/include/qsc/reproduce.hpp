// Reproduction harness for the published code tables: rebuilds each row's
// (B1 | B2) from its adjacency-sum formula, finds the trailing-drop count
// giving the stated generator count, certifies the distance, and reports a
// per-row status.
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "qsc/distance.hpp"
#include "qsc/scheme.hpp"

namespace qsc {

struct TableRowSpec {
  int table = 0;
  std::string group;  // display name, e.g. "C_8", "C_2xC_4", "U_12"
  std::string spec;   // parseable scheme spec
  std::vector<std::size_t> sel1, sel2;
  std::size_t n = 0;
  std::size_t n_minus_k = 0;
  std::size_t d = 0;
  std::string marker;  // footnote annotation: "l" best-known, "u" highest-rate
};

// Rows of table 4, 5 or 10. Throws on any other id.
const std::vector<TableRowSpec>& paper_table(int table_id);

enum class RowStatus { Reproduced, AlternateRows, BoundOnly, Discrepant };

struct RowResult {
  TableRowSpec row;
  RowStatus status = RowStatus::Discrepant;
  std::size_t achieved_n_minus_k = 0;
  std::size_t drop_used = 0;  // trailing rows removed (canonical attempt)
  DistanceCertificate cert;
  std::string evidence;
};

struct ReproductionReport {
  int table = 0;
  std::vector<RowResult> rows;
  std::size_t count(RowStatus st) const {
    std::size_t c = 0;
    for (const auto& r : rows)
      if (r.status == st) ++c;
    return c;
  }
};

struct ReproduceOptions {
  unsigned workers = 1;
  std::size_t exact_ceiling = kDefaultExactCeiling;
  bool try_alternates = true;
};

// row_filter: empty = all rows; otherwise exact group-name matches.
ReproductionReport reproduce_table(int table_id,
                                   const std::vector<std::string>& row_filter,
                                   const ReproduceOptions& opt = {});

std::string row_status_name(RowStatus st);
std::string render_report(const ReproductionReport& rep);
nlohmann::json report_to_json(const ReproductionReport& rep, bool timings = false);

}  // namespace qsc
