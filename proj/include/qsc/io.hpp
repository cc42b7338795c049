// Stable serialization surfaces: hex-packed bit rows, scheme dumps,
// check-matrix JSON and distance certificates.
//
// Hex packing: bits are packed LSB-first into bytes (bit j of a row goes to
// bit j%8 of byte j/8); bytes are rendered low-to-high as two lowercase hex
// digits each.
#pragma once

#include <json.hpp>

#include "qsc/distance.hpp"
#include "qsc/scheme.hpp"
#include "qsc/stabilizer.hpp"

namespace qsc {

std::string hex_encode_bits(const BitVector& v);
BitVector hex_decode_bits(std::string_view hex, std::size_t len);
std::string hex_encode_row(const BitMatrix& m, std::size_t i);

nlohmann::json scheme_to_json(const AssociationScheme& s, bool include_matrices);
nlohmann::json check_matrix_to_json(const CheckMatrix& c);
nlohmann::json verification_to_json(const VerificationReport& r);
// Pass timings = false for byte-identical output across runs; elapsed_ms is
// the single time-dependent field.
nlohmann::json certificate_to_json(const DistanceCertificate& c, bool timings);

std::string cert_kind_name(CertKind k);
std::string method_name(DistanceMethod m);

}  // namespace qsc
