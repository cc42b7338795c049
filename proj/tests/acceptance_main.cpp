// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Heavier searches run with 8 workers where the criterion
// allows it.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "qsc/distance.hpp"
#include "qsc/reproduce.hpp"
#include "qsc/scheme.hpp"
#include "qsc/scheme_spec.hpp"
#include "qsc/stabilizer.hpp"

using namespace qsc;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;

  Criterion(int id_, std::string title_) : id(id_), title(std::move(title_)) {}

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::vector<std::pair<std::size_t, std::size_t>> g_kd_records;  // (n,k,d) of certified codes
void record_code(std::size_t n, std::size_t k, std::size_t d) {
  g_kd_records.push_back({n, k * 1000 + d});  // packed; unpacked by criterion 8
}

StabilizerCode build(const std::string& spec, std::vector<std::size_t> s1,
                     std::vector<std::size_t> s2, std::size_t drop) {
  AssociationScheme s = make_scheme(spec);
  CheckMatrix c = build_check_matrix(s, s1, s2);
  return select_generators(c, drop);
}

std::int64_t elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
      .count();
}

// ---- criterion 1: worked matrices bit-exact -----------------------------

Criterion criterion1() {
  Criterion c{1, "bit-exact reproduction of worked matrices"};
  c.check(BitMatrix::cyclic_shift(5) == BitMatrix::from_strings(fixtures::kShift5),
          "S (5x5 circulant)");

  auto check_b = [&](const std::string& name, const std::string& spec,
                     std::vector<std::size_t> s1, std::vector<std::size_t> s2,
                     const std::vector<std::string>& fixture) {
    AssociationScheme s = make_scheme(spec);
    CheckMatrix cm = build_check_matrix(s, s1, s2);
    c.check(cm.m == BitMatrix::from_strings(fixture), name);
  };
  check_b("B for C_5", "cyclic:5", {1}, {2}, fixtures::kB_C5);
  check_b("B for C_6", "cyclic:6", {2, 3}, {0, 1, 2}, fixtures::kB_C6);
  check_b("B for C_7", "cyclic:7", {1}, {2, 3}, fixtures::kB_C7);
  check_b("B for C_11", "cyclic:11", {1, 4, 5}, {2, 5}, fixtures::kB_C11);
  check_b("B for C_13", "cyclic:13", {1, 3, 4, 5}, {2, 3, 5}, fixtures::kB_C13);
  check_b("B for U_12", "u6n:2", {2}, {3, 5}, fixtures::kB_U12);
  return c;
}

// ---- criterion 2: Pauli tables ------------------------------------------

Criterion criterion2() {
  Criterion c{2, "published generator tables match symbol-for-symbol"};
  auto check_table = [&](const std::string& name, const StabilizerCode& code,
                         const std::vector<std::string>& expect) {
    std::vector<std::string> got = to_pauli(code);
    if (got.size() != expect.size()) {
      c.check(false, name + ": row count " + std::to_string(got.size()) +
                         " != " + std::to_string(expect.size()));
      return;
    }
    for (std::size_t i = 0; i < expect.size(); ++i)
      c.check(got[i] == expect[i], name + " row " + std::to_string(i));
  };

  check_table("table 1", build("cyclic:5", {1}, {2}, 1), fixtures::kTable1);
  check_table("table 2", build("cyclic:6", {2, 3}, {0, 1, 2}, 1), fixtures::kTable2);
  check_table("table 3", build("cyclic:7", {1}, {2, 3}, 1), fixtures::kTable3);
  check_table("table 7", build("cyclic:13", {1, 3, 4, 5}, {2, 3, 5}, 1),
              fixtures::kTable7);
  check_table("table 8", build("cyclic:21", {3, 4, 6, 9, 10}, {3, 5, 6, 7, 8}, 5),
              fixtures::kTable8);
  check_table("table 9", build("u6n:2", {2}, {3, 5}, 4), fixtures::kTable9);

  // Table 6 prints g1..g6, g8..g10; the artifact emits all ten generators
  // and the nine printed rows must match in order.
  StabilizerCode c1115 = build("cyclic:11", {1, 4, 5}, {2, 5}, 1);
  std::vector<std::string> got = to_pauli(c1115);
  c.check(got.size() == 10, "table 6: artifact emits 10 generators");
  for (std::size_t i = 0; i < fixtures::kTable6Printed.size(); ++i) {
    std::size_t idx = fixtures::kTable6PrintedIndices[i];
    c.check(got[idx] == fixtures::kTable6Printed[i],
            "table 6 printed row " + std::to_string(i));
  }
  c.note("table 6: paper omits g7; artifact row 6 = " + got[6]);
  return c;
}

// ---- criterion 3: oracle agreement at n <= 8 -----------------------------

Criterion criterion3() {
  Criterion c{3, "oracle agreement for n <= 8 codes"};
  struct Case {
    std::string spec;
    std::vector<std::size_t> s1, s2;
    std::size_t drop, d;
  };
  const Case cases[] = {
      {"cyclic:5", {1}, {2}, 1, 3},
      {"cyclic:6", {2, 3}, {0, 1, 2}, 1, 3},
      {"cyclic:7", {1}, {2, 3}, 1, 3},
  };
  for (const auto& cs : cases) {
    StabilizerCode code = build(cs.spec, cs.s1, cs.s2, cs.drop);
    auto t0 = Clock::now();
    DistanceCertificate orc = distance_oracle(code);
    std::int64_t oracle_ms = elapsed_ms(t0);
    DistanceCertificate ex = distance_exact(code);
    c.check(orc.kind == CertKind::Exact && ex.kind == CertKind::Exact,
            cs.spec + ": both exact");
    c.check(orc.value == ex.value, cs.spec + ": oracle == exact");
    c.check(orc.value == cs.d, cs.spec + ": matches published d=" +
                                   std::to_string(cs.d) + " (certified d=" +
                                   std::to_string(orc.value) + ")");
    c.check(oracle_ms < 1000, cs.spec + ": oracle under 1 s");
    record_code(code.n, code.k, orc.value);
  }
  c.note("the cyclic:6 selection certifies d=2 by two independent methods "
         "(witness X Y I I I I commutes with all generators and is outside "
         "the stabilizer); the published d=3 is not attainable");
  return c;
}

// ---- criterion 4: exact certification at mid scale -----------------------

Criterion criterion4() {
  Criterion c{4, "exact distance certification at mid scale"};
  struct Case {
    std::string spec;
    std::vector<std::size_t> s1, s2;
    std::size_t drop, d;
  };
  const Case cases[] = {
      {"cyclic:11", {1, 4, 5}, {2, 5}, 1, 5},
      {"cyclic:13", {1, 3, 4, 5}, {2, 3, 5}, 1, 5},
      {"u6n:2", {2}, {3, 5}, 4, 3},
  };
  for (const auto& cs : cases) {
    StabilizerCode code = build(cs.spec, cs.s1, cs.s2, cs.drop);
    DistanceCertificate ex = distance_exact(code);
    c.check(ex.kind == CertKind::Exact && ex.value == cs.d,
            cs.spec + ": published d=" + std::to_string(cs.d) + ", certified d=" +
                std::to_string(ex.value));
    c.check(witness_valid(code, ex), cs.spec + ": witness re-validates");
    record_code(code.n, code.k, ex.value);
  }

  StabilizerCode c2157 = build("cyclic:21", {3, 4, 6, 9, 10}, {3, 5, 6, 7, 8}, 5);
  auto t0 = Clock::now();
  DistanceCertificate single = distance_exact(c2157, ExactOptions{28, 1});
  std::int64_t single_ms = elapsed_ms(t0);
  t0 = Clock::now();
  DistanceCertificate eight = distance_exact(c2157, ExactOptions{28, 8});
  std::int64_t eight_ms = elapsed_ms(t0);
  c.check(single.kind == CertKind::Exact && single.value == 7,
          "[[21,5,*]]: published d=7, certified d=" + std::to_string(single.value));
  c.check(eight.value == single.value, "[[21,5,*]] worker-count invariant");
  c.check(witness_valid(c2157, single), "[[21,5,*]] witness re-validates");
  c.check(single_ms < 300000, "[[21,5,*]] single-threaded under 5 min");
  c.check(eight_ms < 60000, "[[21,5,*]] 8 workers under 1 min");
  c.note("[[21,5,*]] kernel 2^26: single " + std::to_string(single_ms) +
         " ms, 8 workers " + std::to_string(eight_ms) + " ms");
  c.note("cyclic:11 drop-1 certifies d=3 (witness Y I I X I I Y I I I I) and "
         "the 21-qubit code certifies d=4 (witness X at 0,13,16 and Z at 5); "
         "both confirmed by the independent weight-enumeration route, so the "
         "published d=5 and d=7 are not attainable for these generators");
  record_code(c2157.n, c2157.k, single.value);
  return c;
}

// ---- criterion 5: table reproduction rates -------------------------------

Criterion criterion5() {
  Criterion c{5, "table 10 and table 4 reproduction"};
  ReproduceOptions opt;
  opt.workers = 8;
  auto t0 = Clock::now();

  ReproductionReport t10 = reproduce_table(10, {}, opt);
  std::size_t ok10 = t10.count(RowStatus::Reproduced) +
                     t10.count(RowStatus::AlternateRows) +
                     t10.count(RowStatus::BoundOnly);
  std::size_t strict10 =
      t10.count(RowStatus::Reproduced) + t10.count(RowStatus::AlternateRows);
  c.check(t10.rows.size() == 14, "table 10 has 14 rows");
  c.check(strict10 >= 12, "table 10: >= 12 of 14 rows reproduced (got " +
                              std::to_string(strict10) + ")");
  for (const auto& r : t10.rows)
    if (r.status != RowStatus::Discrepant)
      record_code(r.row.n, r.row.n - r.row.n_minus_k, r.row.d);
  c.note("table 10: " + std::to_string(strict10) + " reproduced/alternate, " +
         std::to_string(ok10 - strict10) + " bound-only, " +
         std::to_string(t10.count(RowStatus::Discrepant)) + " discrepant");
  for (const auto& r : t10.rows)
    if (r.status == RowStatus::Discrepant)
      c.note("table 10 discrepant: " + r.row.group + " n-k=" +
             std::to_string(r.row.n_minus_k) + ": " + r.evidence);

  // Table 4: every row must (a) reach the stated n-k by a trailing-drop
  // count, (b) carry a definitive certificate of the right kind (exact
  // search whenever n+k <= 28), and (c) be reported "discrepant" with
  // evidence whenever the certified distance contradicts the stated one --
  // never silently passed.
  ReproductionReport t4 = reproduce_table(4, {}, opt);
  c.check(t4.rows.size() == 33, "table 4 has 33 rows");
  std::size_t t4_match = 0, t4_discrepant = 0;
  for (const auto& r : t4.rows) {
    std::size_t k = r.row.n - r.row.n_minus_k;
    bool within_ceiling = r.row.n + k <= 28;
    std::string name = "table 4 " + r.row.group +
                       " n-k=" + std::to_string(r.row.n_minus_k) +
                       " d=" + std::to_string(r.row.d);
    c.check(r.achieved_n_minus_k == r.row.n_minus_k,
            name + ": trailing drop reaches stated n-k");
    if (within_ceiling)
      c.check(r.cert.kind == CertKind::Exact, name + ": certificate is exact");
    if (r.status == RowStatus::Discrepant) {
      ++t4_discrepant;
      c.check(!r.evidence.empty(), name + ": discrepancy carries evidence");
      c.note("table 4 discrepant: " + name + " -- " + r.evidence);
    } else {
      ++t4_match;
      record_code(r.row.n, k, r.row.d);
    }
  }
  c.note("table 4: " + std::to_string(t4_match) + " rows match the stated "
         "parameters, " + std::to_string(t4_discrepant) +
         " certified at variance and reported discrepant");
  c.note("table 4+10 total runtime " + std::to_string(elapsed_ms(t0)) + " ms");
  c.check(elapsed_ms(t0) < 1800000, "within the 30 minute budget");
  return c;
}

// ---- criterion 6: large-n bound checks ------------------------------------

Criterion criterion6() {
  Criterion c{6, "table 5 large-n lower bounds (exact d not desk-verifiable)"};
  struct Case {
    std::size_t nu, nk, d;
    std::vector<std::size_t> s1, s2;
  };
  const std::vector<std::size_t> b1_40 = {3, 4, 6, 9, 10, 12, 14, 15, 16, 18, 19};
  const std::vector<std::size_t> b2_40 = {3, 5, 6, 7, 8, 12, 15, 16, 17, 18, 20};
  const Case cases[] = {
      {30, 8, 3, {3, 4, 6, 9, 10, 14}, {3, 5, 6, 7, 8, 13, 15}},
      {30, 18, 5, {3, 4, 6, 9, 10, 14}, {3, 5, 6, 7, 8, 13, 15}},
      {40, 10, 3, b1_40, b2_40},
      {40, 14, 5, b1_40, b2_40},
      {40, 19, 7, b1_40, b2_40},
  };
  for (const auto& cs : cases) {
    AssociationScheme s = make_scheme("cyclic:" + std::to_string(cs.nu));
    CheckMatrix cm = build_check_matrix(s, cs.s1, cs.s2);
    std::vector<std::size_t> indep = independent_rows(cm.m);
    if (cs.nk > indep.size()) {
      c.check(false, "C_" + std::to_string(cs.nu) + " rank too small");
      continue;
    }
    std::vector<std::size_t> keep(indep.begin(), indep.begin() + cs.nk);
    StabilizerCode code = select_generators_subset(cm, keep);
    auto t0 = Clock::now();
    DistanceCertificate lb = distance_bounded(code, cs.d - 1, 8);
    std::int64_t ms = elapsed_ms(t0);
    std::string name = "[[" + std::to_string(cs.nu) + "," +
                       std::to_string(cs.nu - cs.nk) + "," + std::to_string(cs.d) +
                       "]]";
    if (lb.kind == CertKind::LowerBound && lb.value == cs.d) {
      c.note(name + ": LowerBound(" + std::to_string(lb.value) + ") in " +
             std::to_string(ms) + " ms");
    } else {
      std::string found =
          lb.kind == CertKind::Exact
              ? "the weight-" + std::to_string(lb.value) +
                    " enumeration found a logical operator (exact d=" +
                    std::to_string(lb.value) + ", witness re-validated: " +
                    (witness_valid(code, lb) ? "yes" : "NO") + ")"
              : "bound " + std::to_string(lb.value);
      c.note(name + ": " + found + " in " + std::to_string(ms) + " ms");
    }
    c.check(lb.kind == CertKind::LowerBound && lb.value == cs.d,
            name + ": no logical operator below the stated weight " +
                std::to_string(cs.d));
    c.check(ms < 1200000, name + ": within 20 minutes");
    if (lb.kind == CertKind::LowerBound && lb.value == cs.d)
      record_code(cs.nu, cs.nu - cs.nk, cs.d);
    else
      record_code(cs.nu, cs.nu - cs.nk, lb.value);
  }
  c.note("exact d at n = 30, 40 is NOT reproducible at desk scale (kernel "
         "dimensions up to 61); only the weight-limited side is checked, and "
         "any weight-d upper side remains unverified");
  return c;
}

// ---- criterion 7: scheme axiom property suite -----------------------------

Criterion criterion7() {
  Criterion c{7, "scheme axioms and intersection closure across the sweep"};
  auto t0 = Clock::now();
  auto verify_one = [&](const AssociationScheme& s, const std::string& name) {
    VerificationReport rep = verify_scheme(s);
    if (!rep.all_pass()) {
      std::string why;
      for (const auto& chk : rep.checks)
        if (!chk.pass) why += chk.axiom + " (" + chk.witness + ") ";
      c.check(false, name + ": " + why);
      return;
    }
    try {
      (void)intersection_numbers(s);  // throws when closure is not exact
    } catch (const std::exception& e) {
      c.check(false, name + ": intersection closure: " + e.what());
    }
  };

  for (std::size_t nu = 2; nu <= 40; ++nu)
    verify_one(cyclic_scheme(nu), "cyclic " + std::to_string(nu));
  for (std::size_t n = 1; n <= 4; ++n)
    verify_one(u6n_scheme(n), "u6n " + std::to_string(n));
  for (std::size_t n = 2; n <= 5; ++n)
    verify_one(t4n_scheme(n), "t4n " + std::to_string(n));
  c.note("t4n 5: the published reflection sums (equal-exponent [b]/[b]^3 "
         "pairing) do not close into a scheme for odd n >= 5; the checker "
         "reports the defect with a witness cell. The same basis is what the "
         "published T_12 codes require, so the constructor keeps it.");
  for (std::size_t n : {1, 3, 5}) verify_one(v8n_scheme(n), "v8n " + std::to_string(n));
  for (std::size_t n = 2; n <= 10; ++n)
    verify_one(d2n_scheme(n), "d2n " + std::to_string(n));

  std::size_t group_count = 0;
  for (std::uint64_t order = 1; order <= 64; ++order) {
    for (const auto& factors : abelian_groups_of_order(order)) {
      std::vector<AssociationScheme> parts;
      for (std::uint64_t f : factors) parts.push_back(cyclic_group_scheme(f));
      AssociationScheme s = parts.empty() ? cyclic_group_scheme(1)
                                          : product_scheme(parts);
      verify_one(s, "abelian order " + std::to_string(order) + " " + s.label);
      ++group_count;
    }
  }
  c.note("verified " + std::to_string(group_count) +
         " Abelian group schemes and all listed families in " +
         std::to_string(elapsed_ms(t0)) + " ms");
  c.check(elapsed_ms(t0) < 120000, "sweep under 2 minutes");
  return c;
}

// ---- criterion 8: bound validators ---------------------------------------

Criterion criterion8() {
  Criterion c{8, "Hamming/KL bound validators"};
  for (std::size_t n = 1; n <= 64; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t need = 0;
      while ((std::size_t(1) << need) < 3 * n + 1) ++need;
      if (hamming_bound_ok(n, k, 3) != (n - k >= need)) {
        c.check(false, "closed form mismatch at n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
        n = 65;
        break;
      }
    }

  // (5,1,3) meets the bound with equality: (1 + 3*5) * 2^1 = 32 = 2^5.
  c.check((1 + 3 * 5) * 2 == 32, "(5,1,3) Hamming equality arithmetic");
  c.check(hamming_bound_ok(5, 1, 3), "(5,1,3) passes");
  c.check(!hamming_bound_ok(5, 2, 3), "(5,2,3) exceeds the packing");

  std::size_t checked = 0;
  for (const auto& [n, packed] : g_kd_records) {
    std::size_t k = packed / 1000, d = packed % 1000;
    c.check(kl_bound_ok(n, k, d), "KL holds for [[" + std::to_string(n) + "," +
                                      std::to_string(k) + "," + std::to_string(d) +
                                      "]]");
    if (d == 3 || d == 5)
      c.check(hamming_bound_ok(n, k, d),
              "Hamming holds for odd-d [[" + std::to_string(n) + "," +
                  std::to_string(k) + "," + std::to_string(d) + "]]");
    ++checked;
  }
  c.note("checked " + std::to_string(checked) + " certified code records");
  return c;
}

// ---- criterion 9: Abelian enumeration -------------------------------------

Criterion criterion9() {
  Criterion c{9, "Abelian group enumeration against the partition function"};
  auto g32 = abelian_groups_of_order(32);
  const std::vector<std::vector<std::uint64_t>> expected = {
      {32}, {16, 2}, {8, 4}, {8, 2, 2}, {4, 4, 2}, {4, 2, 2, 2}, {2, 2, 2, 2, 2}};
  c.check(g32.size() == 7, "order 32: exactly 7 groups");
  for (const auto& want : expected) {
    bool found = false;
    for (const auto& got : g32)
      if (got == want) found = true;
    std::string name;
    for (std::size_t i = 0; i < want.size(); ++i)
      name += (i ? "x" : "") + std::string("Z_") + std::to_string(want[i]);
    c.check(found, "order 32 contains " + name);
  }

  // Independent oracle: Euler's pentagonal-number recurrence.
  std::vector<std::int64_t> p(1001, 0);
  p[0] = 1;
  for (std::int64_t n = 1; n <= 1000; ++n) {
    for (std::int64_t k = 1;; ++k) {
      std::int64_t g1 = k * (3 * k - 1) / 2;
      std::int64_t g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  }
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    std::uint64_t expect = 1;
    std::uint64_t rem = n;
    for (std::uint64_t q = 2; q * q <= rem; ++q) {
      std::uint64_t e = 0;
      while (rem % q == 0) {
        ++e;
        rem /= q;
      }
      if (e) expect *= static_cast<std::uint64_t>(p[e]);
    }
    if (rem > 1) expect *= static_cast<std::uint64_t>(p[1]);
    if (abelian_groups_of_order(n).size() != expect) {
      c.check(false, "count mismatch at n=" + std::to_string(n));
      break;
    }
  }
  c.check(p[5] == 7, "p(5) = 7");
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  results.push_back(criterion1());
  results.push_back(criterion2());
  results.push_back(criterion3());
  results.push_back(criterion4());
  results.push_back(criterion5());
  results.push_back(criterion6());
  results.push_back(criterion7());
  results.push_back(criterion8());
  results.push_back(criterion9());

  int failures = 0;
  for (const auto& c : results) {
    std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
              << c.title << "\n";
    for (const auto& note : c.notes) std::cout << "    " << note << "\n";
    if (!c.pass) ++failures;
  }
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failures) +
                                    " criterion(s) failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
