#include "qsc/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>

#include "qsc/io.hpp"
#include "qsc/scheme_spec.hpp"

namespace qsc {

namespace {

std::string canon_of(const BitMatrix& gens) {
  BitMatrix r = rref(gens);
  std::string out;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    if (i) out.push_back(':');
    out += hex_encode_row(r, i);
  }
  return out;
}

std::vector<std::size_t> mask_to_indices(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

SearchResult enumerate_codes(const AssociationScheme& s,
                             const std::string& scheme_spec,
                             const SearchConfig& cfg) {
  std::size_t m = s.matrix_count();
  if (m > 24)
    throw std::invalid_argument("enumerate_codes: more than 24 adjacency classes");
  auto t0 = std::chrono::steady_clock::now();
  auto budget_exceeded = [&]() {
    if (cfg.time_budget_ms <= 0) return false;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    return ms > cfg.time_budget_ms;
  };

  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask)
    if (std::size_t(std::popcount(mask)) <= cfg.max_subset_size)
      masks.push_back(mask);

  SearchResult result;
  std::set<std::string> seen;

  for (std::uint64_t m1 : masks) {
    if (result.truncated) break;
    for (std::uint64_t m2 : masks) {
      if (result.pairs_examined > 0 && budget_exceeded()) {
        result.truncated = true;
        break;
      }
      ++result.pairs_examined;
      auto sel1 = mask_to_indices(m1);
      auto sel2 = mask_to_indices(m2);
      CheckMatrix c = build_check_matrix(s, sel1, sel2);
      if (!commutes(c)) continue;

      std::size_t rows = c.rows();
      std::size_t drop_hi = std::min(cfg.drop_max, rows - 1);
      std::vector<std::size_t> indep = independent_rows(c.m);

      // Every trailing-drop count on one rank plateau selects the same
      // independent prefix, so the distinct codes are exactly the prefixes
      // of `indep`.
      for (std::size_t r = 1; r <= indep.size(); ++r) {
        std::size_t q_lo = indep[r - 1] + 1;
        std::size_t q_hi = r < indep.size() ? indep[r] : rows;
        // Trailing drops t with rank(first rows-t) == r.
        std::size_t t_lo = rows - q_hi;
        std::size_t t_hi = rows - q_lo;
        if (t_lo > drop_hi || t_hi < cfg.drop_min) continue;

        std::vector<std::size_t> keep(indep.begin(), indep.begin() + r);
        if (r == c.n) continue;  // k = 0: a stabilizer state, not a code
        StabilizerCode code = select_generators_subset(c, keep);
        code.provenance.scheme = scheme_spec;
        code.provenance.sel1 = sel1;
        code.provenance.sel2 = sel2;

        std::string canon = canon_of(code.gens.m);
        if (!seen.insert(canon).second) continue;

        DistanceCertificate cert =
            distance_bounded(code, cfg.w_max, cfg.workers);
        if (cert.value < cfg.min_d) continue;

        CodeRecord rec;
        rec.scheme = scheme_spec;
        rec.label = s.label;
        rec.sel1 = sel1;
        rec.sel2 = sel2;
        rec.drop_last = std::max(t_lo, cfg.drop_min);
        rec.kept_rows = keep;
        rec.n = code.n;
        rec.k = code.k;
        rec.cert = cert;
        rec.kl_ok = kl_bound_ok(rec.n, rec.k, cert.value);
        rec.hamming_ok = hamming_bound_ok(rec.n, rec.k, cert.value);
        rec.canon = canon;
        if (!rec.kl_ok)
          throw std::logic_error("enumerate_codes: certified code violates the "
                                 "Knill-Laflamme bound");
        if (cert.kind == CertKind::Exact &&
            (cert.value == 3 || cert.value == 5) && !rec.hamming_ok)
          throw std::logic_error("enumerate_codes: distance-" +
                                 std::to_string(cert.value) +
                                 " code violates the Hamming bound");
        result.records.push_back(std::move(rec));
      }
    }
  }

  std::sort(result.records.begin(), result.records.end(),
            [](const CodeRecord& a, const CodeRecord& b) {
              if (a.n != b.n) return a.n < b.n;
              if (a.k != b.k) return a.k > b.k;
              if (a.cert.value != b.cert.value) return a.cert.value < b.cert.value;
              if (a.sel1 != b.sel1) return a.sel1 < b.sel1;
              if (a.sel2 != b.sel2) return a.sel2 < b.sel2;
              return a.kept_rows < b.kept_rows;
            });
  for (std::size_t i = 0; i < result.records.size(); ++i)
    result.records[i].seq = i;
  return result;
}

StabilizerCode rebuild_code(const CodeRecord& rec) {
  AssociationScheme s = make_scheme(rec.scheme);
  CheckMatrix c = build_check_matrix(s, rec.sel1, rec.sel2);
  StabilizerCode code = select_generators_subset(c, rec.kept_rows);
  code.provenance.scheme = rec.scheme;
  code.provenance.sel1 = rec.sel1;
  code.provenance.sel2 = rec.sel2;
  return code;
}

nlohmann::json record_to_json(const CodeRecord& rec, bool timings) {
  nlohmann::json j;
  j["scheme"] = rec.scheme;
  j["label"] = rec.label;
  j["sel1"] = rec.sel1;
  j["sel2"] = rec.sel2;
  j["drop_last"] = rec.drop_last;
  j["kept_rows"] = rec.kept_rows;
  j["n"] = rec.n;
  j["k"] = rec.k;
  j["cert"] = certificate_to_json(rec.cert, timings);
  j["hamming_ok"] = rec.hamming_ok;
  j["kl_ok"] = rec.kl_ok;
  j["canon"] = rec.canon;
  j["seq"] = rec.seq;
  return j;
}

CodeRecord record_from_json(const nlohmann::json& j) {
  CodeRecord rec;
  rec.scheme = j.at("scheme").get<std::string>();
  rec.label = j.value("label", std::string{});
  rec.sel1 = j.at("sel1").get<std::vector<std::size_t>>();
  rec.sel2 = j.at("sel2").get<std::vector<std::size_t>>();
  rec.drop_last = j.value("drop_last", std::size_t{0});
  rec.kept_rows = j.at("kept_rows").get<std::vector<std::size_t>>();
  rec.n = j.at("n").get<std::size_t>();
  rec.k = j.at("k").get<std::size_t>();
  const auto& cj = j.at("cert");
  rec.cert.kind = cj.at("kind").get<std::string>() == "exact"
                      ? CertKind::Exact
                      : CertKind::LowerBound;
  rec.cert.value = cj.at("d").get<std::size_t>();
  std::string method = cj.at("method").get<std::string>();
  rec.cert.method = method == "oracle" ? DistanceMethod::Oracle
                    : method == "weight-enumeration"
                        ? DistanceMethod::WeightEnumeration
                        : DistanceMethod::CosetEnumeration;
  if (cj.contains("witness_a_hex") && !cj.at("witness_a_hex").is_null()) {
    ErrorVector e;
    e.a = hex_decode_bits(cj.at("witness_a_hex").get<std::string>(), rec.n);
    e.b = hex_decode_bits(cj.at("witness_b_hex").get<std::string>(), rec.n);
    rec.cert.witness = std::move(e);
  }
  rec.cert.elapsed_ms = cj.value("elapsed_ms", std::int64_t{0});
  rec.hamming_ok = j.value("hamming_ok", false);
  rec.kl_ok = j.value("kl_ok", false);
  rec.canon = j.value("canon", std::string{});
  rec.seq = j.value("seq", std::uint64_t{0});
  return rec;
}

namespace {

constexpr std::string_view kCatalogHeader =
    R"({"format":"qsc-catalog","version":1})";

}  // namespace

void catalog_append(const std::filesystem::path& path, const CodeRecord& rec) {
  bool need_header =
      !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("catalog_append: cannot open " + path.string());
  if (need_header) out << kCatalogHeader << '\n';
  out << record_to_json(rec).dump() << '\n';
  if (!out) throw std::runtime_error("catalog_append: write failed");
}

std::vector<CodeRecord> catalog_query(const std::filesystem::path& path,
                                      const CatalogFilter& filter) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("catalog_query: cannot open " + path.string());
  std::vector<CodeRecord> out;
  std::set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const std::exception&) {
      std::cerr << "catalog: skipping malformed line " << lineno << "\n";
      continue;
    }
    if (j.contains("format")) continue;  // schema header
    CodeRecord rec;
    try {
      rec = record_from_json(j);
    } catch (const std::exception&) {
      std::cerr << "catalog: skipping malformed record at line " << lineno << "\n";
      continue;
    }
    if (filter.n && rec.n != *filter.n) continue;
    if (filter.k && rec.k != *filter.k) continue;
    if (filter.d && rec.cert.value != *filter.d) continue;
    if (filter.min_d && rec.cert.value < *filter.min_d) continue;
    if (filter.scheme && rec.scheme != *filter.scheme) continue;
    if (filter.kind && rec.cert.kind != *filter.kind) continue;
    std::string key = std::to_string(rec.n) + "/" + std::to_string(rec.k) + "/" +
                      std::to_string(rec.cert.value) + "/" + rec.canon;
    if (!seen.insert(key).second) continue;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace qsc
