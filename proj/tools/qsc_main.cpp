// qsc: build stabilizer codes from group association schemes, verify the
// scheme axioms, certify minimum distances, search subset pairs, and
// reproduce the published code tables.
//
// Exit codes: 0 success; 1 runtime error; 2 usage error; 3 scheme axiom
// failure; 4 assertion/reproduction mismatch.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qsc/io.hpp"
#include "qsc/reproduce.hpp"
#include "qsc/scheme_spec.hpp"
#include "qsc/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAxiomFailure = 3;
constexpr int kExitMismatch = 4;

std::vector<std::size_t> parse_index_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                               : comma - pos);
    if (!tok.empty()) out.push_back(std::stoul(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct CodeSource {
  std::string spec;
  std::string b1, b2;
  std::optional<std::size_t> drop;
  std::string keep;
  std::string pauli_file;

  qsc::StabilizerCode build() const {
    if (!pauli_file.empty()) {
      std::ifstream in(pauli_file);
      if (!in) throw std::runtime_error("cannot open " + pauli_file);
      std::vector<std::string> lines;
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
      qsc::CheckMatrix c = qsc::from_pauli(lines);
      return qsc::select_generators(c, 0);
    }
    qsc::AssociationScheme s = qsc::make_scheme(spec);
    auto sel1 = parse_index_list(b1);
    auto sel2 = parse_index_list(b2);
    qsc::CheckMatrix c = qsc::build_check_matrix(s, sel1, sel2);
    qsc::StabilizerCode code =
        keep.empty() ? qsc::select_generators(c, drop.value_or(0))
                     : qsc::select_generators_subset(c, parse_index_list(keep));
    code.provenance.scheme = spec;
    code.provenance.sel1 = sel1;
    code.provenance.sel2 = sel2;
    return code;
  }
};

void add_code_source(CLI::App* cmd, CodeSource& src, bool allow_pauli_file) {
  cmd->add_option("spec", src.spec,
                  "scheme spec, e.g. cyclic:5, zn:8, u6n:2, t4n:3, v8n:3, "
                  "d2n:6, product:zn:2,zn:4");
  cmd->add_option("--b1", src.b1, "adjacency indices for B1, e.g. 1 or 3,4");
  cmd->add_option("--b2", src.b2, "adjacency indices for B2");
  cmd->add_option("--drop", src.drop, "trailing rows to remove (default 0)");
  cmd->add_option("--keep", src.keep, "explicit rows to keep, e.g. 0,1,2,3");
  if (allow_pauli_file)
    cmd->add_option("--pauli-file", src.pauli_file,
                    "read generators from a Pauli-string file instead");
}

int run(int argc, char** argv) {
  CLI::App app{"stabilizer codes from group association schemes"};
  app.require_subcommand(1);

  // ---- scheme ----
  auto* scheme_cmd = app.add_subcommand("scheme", "build and inspect a scheme");
  std::string scheme_spec;
  bool scheme_verify = false, scheme_dump = false, scheme_json = false;
  scheme_cmd->add_option("spec", scheme_spec, "scheme spec")->required();
  scheme_cmd->add_flag("--verify", scheme_verify, "run the axiom checks");
  scheme_cmd->add_flag("--dump", scheme_dump,
                       "dump adjacency matrices (hex-packed rows)");
  scheme_cmd->add_flag("--json", scheme_json, "machine-readable output");

  // ---- code ----
  auto* code_cmd = app.add_subcommand("code", "assemble a stabilizer code");
  CodeSource code_src;
  std::string code_format = "pauli";
  add_code_source(code_cmd, code_src, false);
  code_cmd->add_option("--format", code_format, "pauli | json");

  // ---- distance ----
  auto* dist_cmd = app.add_subcommand("distance", "certify minimum distance");
  CodeSource dist_src;
  std::string method = "auto";
  unsigned dist_workers = 1;
  std::size_t ceiling = qsc::kDefaultExactCeiling;
  bool dist_json = false, dist_timings = false;
  add_code_source(dist_cmd, dist_src, true);
  dist_cmd->add_option("--method", method, "auto | exact | bounded:W | oracle");
  dist_cmd->add_option("--workers", dist_workers, "worker threads");
  dist_cmd->add_option("--ceiling", ceiling, "exact-search kernel ceiling (n+k)");
  dist_cmd->add_flag("--json", dist_json, "machine-readable output");
  dist_cmd->add_flag("--timings", dist_timings, "include elapsed_ms in output");

  // ---- search ----
  auto* search_cmd = app.add_subcommand("search", "enumerate subset-pair codes");
  std::string search_spec;
  qsc::SearchConfig cfg;
  std::string catalog_path;
  bool search_json = false, do_query = false;
  std::optional<std::size_t> q_n, q_k, q_d, q_min_d;
  std::string q_scheme, q_kind;
  search_cmd->add_option("spec", search_spec, "scheme spec");
  search_cmd->add_option("--min-d", cfg.min_d, "emit only codes with d >= this");
  search_cmd->add_option("--w-max", cfg.w_max, "certification weight limit");
  search_cmd->add_option("--max-subset", cfg.max_subset_size,
                         "max adjacency indices per side");
  search_cmd->add_option("--drop-min", cfg.drop_min, "smallest trailing drop");
  search_cmd->add_option("--drop-max", cfg.drop_max, "largest trailing drop");
  search_cmd->add_option("--workers", cfg.workers, "worker threads");
  search_cmd->add_option("--budget-ms", cfg.time_budget_ms,
                         "time budget (0 = unlimited)");
  search_cmd->add_option("--catalog", catalog_path,
                         "catalog file (default $QSC_CATALOG)");
  search_cmd->add_flag("--json", search_json, "machine-readable output");
  search_cmd->add_flag("--query", do_query, "query the catalog instead of searching");
  search_cmd->add_option("--n", q_n, "query: exact n");
  search_cmd->add_option("--k", q_k, "query: exact k");
  search_cmd->add_option("--d", q_d, "query: exact d");
  search_cmd->add_option("--min-distance", q_min_d, "query: d at least");
  search_cmd->add_option("--scheme", q_scheme, "query: scheme spec");
  search_cmd->add_option("--kind", q_kind, "query: exact | lower_bound");

  // ---- reproduce ----
  auto* rep_cmd = app.add_subcommand("reproduce", "reproduce published tables");
  int table_id = 0;
  std::string rows_filter;
  qsc::ReproduceOptions ropt;
  bool rep_json = false, rep_timings = false, no_alternates = false;
  rep_cmd->add_option("--table", table_id, "table id: 4, 5 or 10")->required();
  rep_cmd->add_option("--rows", rows_filter,
                      "comma-separated group names, e.g. C_21");
  rep_cmd->add_option("--workers", ropt.workers, "worker threads");
  rep_cmd->add_option("--ceiling", ropt.exact_ceiling, "exact-search ceiling");
  rep_cmd->add_flag("--no-alternates", no_alternates,
                    "skip the alternate row-subset search");
  rep_cmd->add_flag("--json", rep_json, "machine-readable output");
  rep_cmd->add_flag("--timings", rep_timings, "include elapsed_ms in output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (scheme_cmd->parsed()) {
    qsc::AssociationScheme s = qsc::make_scheme(scheme_spec);
    nlohmann::json j = qsc::scheme_to_json(s, scheme_dump);
    bool pass = true;
    if (scheme_verify) {
      qsc::VerificationReport rep = qsc::verify_scheme(s);
      pass = rep.all_pass();
      j["verification"] = qsc::verification_to_json(rep);
      if (!scheme_json) {
        std::cout << s.label << ": nu=" << s.nu << ", classes=" << s.num_classes()
                  << "\n";
        for (const auto& c : rep.checks) {
          std::cout << "  " << c.axiom << ": " << (c.pass ? "pass" : "FAIL");
          if (!c.witness.empty()) std::cout << " (" << c.witness << ")";
          std::cout << "\n";
        }
        std::cout << "  commutative: " << (rep.commutative ? "yes" : "no") << "\n";
      }
    }
    if (scheme_json || scheme_dump) {
      std::cout << j.dump(2) << "\n";
    } else if (!scheme_verify) {
      std::cout << s.label << ": nu=" << s.nu << ", classes=" << s.num_classes()
                << ", valencies=[";
      for (std::size_t i = 0; i < s.matrix_count(); ++i)
        std::cout << (i ? "," : "") << s.valency(i);
      std::cout << "]\n";
    }
    return pass ? kExitOk : kExitAxiomFailure;
  }

  if (code_cmd->parsed()) {
    qsc::StabilizerCode code = code_src.build();
    if (code_format == "json") {
      nlohmann::json j = qsc::check_matrix_to_json(code.gens);
      j["k"] = code.k;
      j["pauli"] = qsc::to_pauli(code);
      j["scheme"] = code.provenance.scheme;
      j["sel1"] = code.provenance.sel1;
      j["sel2"] = code.provenance.sel2;
      j["kept_rows"] = code.provenance.kept_rows;
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& line : qsc::to_pauli(code)) std::cout << line << "\n";
    }
    return kExitOk;
  }

  if (dist_cmd->parsed()) {
    qsc::StabilizerCode code = dist_src.build();
    qsc::DistanceCertificate cert;
    if (method == "auto") {
      cert = qsc::distance_auto(code, dist_workers, ceiling);
    } else if (method == "exact") {
      cert = qsc::distance_exact(code, qsc::ExactOptions{ceiling, dist_workers});
    } else if (method == "oracle") {
      cert = qsc::distance_oracle(code);
    } else if (method.rfind("bounded:", 0) == 0) {
      cert = qsc::distance_bounded(code, std::stoul(method.substr(8)), dist_workers);
    } else {
      std::cerr << "unknown --method '" << method << "'\n";
      return kExitUsage;
    }
    if (dist_json) {
      nlohmann::json j = qsc::certificate_to_json(cert, dist_timings);
      j["n"] = code.n;
      j["k"] = code.k;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "[[" << code.n << "," << code.k << "]]  "
                << qsc::cert_kind_name(cert.kind) << " d=" << cert.value << " ("
                << qsc::method_name(cert.method) << ")";
      if (dist_timings) std::cout << " elapsed_ms=" << cert.elapsed_ms;
      std::cout << "\n";
    }
    return kExitOk;
  }

  if (search_cmd->parsed()) {
    if (catalog_path.empty())
      if (const char* env = std::getenv("QSC_CATALOG")) catalog_path = env;

    if (do_query) {
      if (catalog_path.empty()) {
        std::cerr << "query needs --catalog or $QSC_CATALOG\n";
        return kExitUsage;
      }
      qsc::CatalogFilter f;
      f.n = q_n;
      f.k = q_k;
      f.d = q_d;
      f.min_d = q_min_d;
      if (!q_scheme.empty()) f.scheme = q_scheme;
      if (!q_kind.empty())
        f.kind = q_kind == "exact" ? qsc::CertKind::Exact : qsc::CertKind::LowerBound;
      auto records = qsc::catalog_query(catalog_path, f);
      for (const auto& rec : records) {
        if (search_json)
          std::cout << qsc::record_to_json(rec).dump() << "\n";
        else
          std::cout << rec.label << " [[" << rec.n << "," << rec.k << ","
                    << rec.cert.value << "]] "
                    << qsc::cert_kind_name(rec.cert.kind) << "\n";
      }
      return kExitOk;
    }

    if (search_spec.empty()) {
      std::cerr << "search needs a scheme spec\n";
      return kExitUsage;
    }
    qsc::AssociationScheme s = qsc::make_scheme(search_spec);
    qsc::SearchResult result = qsc::enumerate_codes(s, search_spec, cfg);
    for (const auto& rec : result.records) {
      if (!catalog_path.empty()) qsc::catalog_append(catalog_path, rec);
      if (search_json)
        std::cout << qsc::record_to_json(rec).dump() << "\n";
      else
        std::cout << rec.label << " [[" << rec.n << "," << rec.k << ","
                  << rec.cert.value << "]] " << qsc::cert_kind_name(rec.cert.kind)
                  << " b1={" << [&] {
                     std::string t;
                     for (std::size_t i = 0; i < rec.sel1.size(); ++i)
                       t += (i ? "," : "") + std::to_string(rec.sel1[i]);
                     return t;
                   }() << "} b2={"
                  << [&] {
                     std::string t;
                     for (std::size_t i = 0; i < rec.sel2.size(); ++i)
                       t += (i ? "," : "") + std::to_string(rec.sel2[i]);
                     return t;
                   }() << "} drop=" << rec.drop_last << "\n";
    }
    if (result.truncated) std::cout << "# truncated: time budget exhausted\n";
    return kExitOk;
  }

  if (rep_cmd->parsed()) {
    ropt.try_alternates = !no_alternates;
    std::vector<std::string> filter;
    if (!rows_filter.empty()) {
      std::size_t pos = 0;
      while (pos < rows_filter.size()) {
        std::size_t comma = rows_filter.find(',', pos);
        filter.push_back(rows_filter.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    qsc::ReproductionReport rep = qsc::reproduce_table(table_id, filter, ropt);
    if (rep_json)
      std::cout << qsc::report_to_json(rep, rep_timings).dump(2) << "\n";
    else
      std::cout << qsc::render_report(rep);
    return rep.count(qsc::RowStatus::Discrepant) == 0 ? kExitOk : kExitMismatch;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
