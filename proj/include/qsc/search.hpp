// Subset-pair search over a scheme's adjacency basis, plus the append-only
// JSON-lines catalog of discovered codes.
#pragma once

#include <filesystem>
#include <json.hpp>
#include <optional>

#include "qsc/distance.hpp"
#include "qsc/scheme.hpp"

namespace qsc {

struct SearchConfig {
  std::size_t max_subset_size = SIZE_MAX;  // per side
  std::size_t drop_min = 0;
  std::size_t drop_max = SIZE_MAX;  // clamped to rows-1
  std::size_t min_d = 3;
  std::size_t w_max = 7;  // certification depth (weight-limited search)
  unsigned workers = 1;
  std::int64_t time_budget_ms = 0;  // 0 = unlimited
};

struct CodeRecord {
  std::string scheme;  // parseable spec, e.g. "cyclic:12"
  std::string label;
  std::vector<std::size_t> sel1, sel2;
  std::size_t drop_last = 0;
  std::vector<std::size_t> kept_rows;
  std::size_t n = 0, k = 0;
  DistanceCertificate cert;
  bool hamming_ok = false;
  bool kl_ok = false;
  std::string canon;  // hex rows of the generator RREF, ':'-joined
  std::uint64_t seq = 0;
};

struct SearchResult {
  std::vector<CodeRecord> records;
  bool truncated = false;  // time budget exhausted
  std::size_t pairs_examined = 0;
};

// Walks all nonempty subset pairs in ascending bitmask order, keeps
// commuting pairs, constructs every distinct trailing-drop code within the
// drop range, certifies with distance_bounded(w_max), deduplicates by
// generator rowspace, and emits records with cert.value >= min_d. Output is
// sorted by (n, -k, d, sel1, sel2); worker count never changes it.
SearchResult enumerate_codes(const AssociationScheme& s,
                             const std::string& scheme_spec,
                             const SearchConfig& cfg);

// Rebuilds the generators of a record from its provenance fields.
StabilizerCode rebuild_code(const CodeRecord& rec);

nlohmann::json record_to_json(const CodeRecord& rec, bool timings = false);
CodeRecord record_from_json(const nlohmann::json& j);

struct CatalogFilter {
  std::optional<std::size_t> n, k, d, min_d;
  std::optional<std::string> scheme;
  std::optional<CertKind> kind;
};

// Appends one record as a JSON line; writes the schema header line first if
// the file is new or empty.
void catalog_append(const std::filesystem::path& path, const CodeRecord& rec);

// Reads the catalog, skipping malformed lines with a warning on stderr;
// filters; deduplicates by (n, k, d, canonical rowspace), first record wins.
std::vector<CodeRecord> catalog_query(const std::filesystem::path& path,
                                      const CatalogFilter& filter);

}  // namespace qsc
