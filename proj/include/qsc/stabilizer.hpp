// Check matrices and stabilizer codes. A check matrix is r x 2n over GF(2),
// X flags in columns 0..n-1 and Z flags in columns n..2n-1; a 1 on both
// sides of column j is a Y on qubit j.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "qsc/gf2.hpp"
#include "qsc/scheme.hpp"

namespace qsc {

struct CheckMatrix {
  std::size_t n = 0;  // qubits; m has exactly 2n columns
  BitMatrix m;

  std::size_t rows() const { return m.rows(); }
};

// Where the generators came from, enough to rebuild them exactly.
struct CodeProvenance {
  std::string scheme;               // spec string, e.g. "cyclic:5"
  std::vector<std::size_t> sel1;    // adjacency indices XORed into B1
  std::vector<std::size_t> sel2;    // ... and B2
  std::vector<std::size_t> kept_rows;
};

struct StabilizerCode {
  std::size_t n = 0;
  std::size_t k = 0;
  CheckMatrix gens;  // n-k independent, pairwise commuting rows
  CodeProvenance provenance;
};

// B1 = XOR of adjacency matrices selected by sel1, B2 likewise; the result
// is the nu x 2nu matrix (B1 | B2). At least one subset must be nonempty.
CheckMatrix build_check_matrix(const AssociationScheme& s,
                               std::span<const std::size_t> sel1,
                               std::span<const std::size_t> sel2);

// Symplectic product of two check rows: popcount(x1 & z2) + popcount(z1 & x2)
// mod 2. Zero iff the Pauli operators commute.
bool symplectic_orthogonal(const CheckMatrix& c, std::size_t i, std::size_t j);

// True iff all row pairs commute, i.e. B1 B2^T + B2 B1^T = 0.
bool commutes(const CheckMatrix& c);

// Drop the trailing drop_last rows, then drop remaining dependent rows
// (greedy top-down). Throws on non-commuting input or empty result.
StabilizerCode select_generators(const CheckMatrix& c, std::size_t drop_last);

// Same with an explicit ordered row subset.
StabilizerCode select_generators_subset(const CheckMatrix& c,
                                        std::span<const std::size_t> keep);

std::string row_to_pauli(const CheckMatrix& c, std::size_t i);
std::vector<std::string> to_pauli(const CheckMatrix& c);
std::vector<std::string> to_pauli(const StabilizerCode& code);
// One generator per line, symbols IXYZ only.
CheckMatrix from_pauli(std::span<const std::string> lines);

}  // namespace qsc
