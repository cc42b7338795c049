// Minimum distance of a stabilizer code: the least OR-weight of an error
// pair (a,b) that commutes with every generator but is not a product of
// generators, i.e. the lightest element of N(S) \ S.
#pragma once

#include <cstdint>
#include <optional>

#include "qsc/stabilizer.hpp"

namespace qsc {

enum class CertKind { Exact, LowerBound };
enum class DistanceMethod { CosetEnumeration, WeightEnumeration, Oracle };

struct ErrorVector {
  BitVector a;  // X-part, length n
  BitVector b;  // Z-part, length n
  std::size_t or_weight() const;
};

struct DistanceCertificate {
  CertKind kind = CertKind::LowerBound;
  std::size_t value = 0;
  DistanceMethod method = DistanceMethod::CosetEnumeration;
  std::optional<ErrorVector> witness;  // present for Exact
  std::int64_t elapsed_ms = 0;
};

// The (n-k) x 2n matrix whose kernel is the symplectic dual of the
// stabilizer: columns ordered (a | b), generator Z-part against a and
// X-part against b.
BitMatrix syndrome_matrix(const StabilizerCode& code);

inline constexpr std::size_t kDefaultExactCeiling = 28;

struct ExactOptions {
  std::size_t ceiling = kDefaultExactCeiling;  // max kernel dimension n+k
  unsigned workers = 1;
};

// Enumerates the full kernel of the syndrome matrix (2^(n+k) candidates)
// in Gray-code order, excluding stabilizer elements. Throws when n+k
// exceeds the ceiling.
DistanceCertificate distance_exact(const StabilizerCode& code,
                                   const ExactOptions& opt = {});

// Enumerates error pairs of OR-weight 1..w_max (supports in colex order,
// 3^w Pauli patterns per support). An accepted vector at weight w proves
// d = w exactly; exhaustion proves d >= w_max + 1.
DistanceCertificate distance_bounded(const StabilizerCode& code,
                                     std::size_t w_max, unsigned workers = 1);

// Definition-level brute force over all 4^n phase-free Paulis; n <= 8.
DistanceCertificate distance_oracle(const StabilizerCode& code);

// oracle for n <= 8, exact while n+k fits the ceiling, else bounded.
DistanceCertificate distance_auto(const StabilizerCode& code,
                                  unsigned workers = 1,
                                  std::size_t ceiling = kDefaultExactCeiling,
                                  std::size_t fallback_w_max = 7);

// Quantum Hamming bound, exact integer arithmetic:
// sum_{j<=floor((d-1)/2)} C(n,j) 3^j 2^k <= 2^n.
bool hamming_bound_ok(std::size_t n, std::size_t k, std::size_t d);
// Knill-Laflamme (singleton-type): n >= k + 2d - 2.
bool kl_bound_ok(std::size_t n, std::size_t k, std::size_t d);

// Re-checks an Exact certificate against its code from first principles:
// witness is symplectically orthogonal to all generators, outside the
// generator rowspace, and has OR-weight equal to the certified value.
bool witness_valid(const StabilizerCode& code, const DistanceCertificate& cert);

}  // namespace qsc
