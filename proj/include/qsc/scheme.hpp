// Association schemes: adjacency-matrix bases for cyclic groups, direct
// products, and the U_6n / T_4n / V_8n / D_2n families, plus axiom
// verification and intersection numbers.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsc/gf2.hpp"

namespace qsc {

struct AssociationScheme {
  std::string label;
  std::size_t nu = 0;                 // vertex count
  std::vector<BitMatrix> adjacency;   // A_0 .. A_d, each nu x nu

  std::size_t num_classes() const { return adjacency.size() - 1; }  // d
  std::size_t matrix_count() const { return adjacency.size(); }
  std::size_t valency(std::size_t i) const { return adjacency[i].row_weight(0); }
};

// Cycle-graph scheme of C_nu: {I, S^i + S^-i (i = 1..), S^m for even nu}.
AssociationScheme cyclic_scheme(std::size_t nu);

// Group association scheme of the cyclic group Z_nu: every element is its
// own conjugacy class, so the basis is {S^0, S^1, ..., S^(nu-1)}.
AssociationScheme cyclic_group_scheme(std::size_t nu);

// Direct product: all Kronecker products of one matrix per factor, ordered
// lexicographically by index tuple.
AssociationScheme product_scheme(const std::vector<AssociationScheme>& factors);

AssociationScheme u6n_scheme(std::size_t n);  // 6n vertices, 3n matrices
AssociationScheme t4n_scheme(std::size_t n);  // 4n vertices, n+3 matrices, n >= 2
AssociationScheme v8n_scheme(std::size_t n);  // 8n vertices, 2n+3 matrices, n odd
AssociationScheme d2n_scheme(std::size_t n);  // 2n vertices, n >= 2

struct AxiomCheck {
  std::string axiom;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct VerificationReport {
  std::vector<AxiomCheck> checks;
  bool commutative = false;            // recorded, not an axiom
  std::vector<std::size_t> valencies;  // row sums, when regular
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Checks: A_0 = I; the A_i partition V x V; constant row sums; transpose
// closure; integral closure of all pairwise integer products. Failures are
// report entries with a witness, never exceptions.
VerificationReport verify_scheme(const AssociationScheme& s);

struct IntersectionTensor {
  std::size_t m = 0;             // d + 1
  std::vector<std::int64_t> p;   // p[l][i][j] flattened as (l*m + i)*m + j

  std::int64_t at(std::size_t l, std::size_t i, std::size_t j) const {
    return p[(l * m + i) * m + j];
  }
  friend bool operator==(const IntersectionTensor&, const IntersectionTensor&) = default;
};

// Expands every integer product A_i A_j in the adjacency basis. Throws
// std::runtime_error if the basis does not close.
IntersectionTensor intersection_numbers(const AssociationScheme& s);

// Every isomorphism class of Abelian group of order n, each as a list of
// prime-power cyclic factor orders (primes ascending, parts descending).
// n = 1 yields one group with no factors.
std::vector<std::vector<std::uint64_t>> abelian_groups_of_order(std::uint64_t n);

}  // namespace qsc
