#include "qsc/io.hpp"

#include <stdexcept>

namespace qsc {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string hex_encode_bits(const BitVector& v) {
  std::size_t nbytes = (v.size() + 7) / 8;
  std::string out;
  out.reserve(2 * nbytes);
  for (std::size_t byte = 0; byte < nbytes; ++byte) {
    unsigned val = 0;
    for (std::size_t bit = 0; bit < 8; ++bit) {
      std::size_t i = byte * 8 + bit;
      if (i < v.size() && v.get(i)) val |= 1u << bit;
    }
    out.push_back(kHexDigits[val & 0xf]);
    out.push_back(kHexDigits[val >> 4]);
  }
  return out;
}

BitVector hex_decode_bits(std::string_view hex, std::size_t len) {
  std::size_t nbytes = (len + 7) / 8;
  if (hex.size() != 2 * nbytes)
    throw std::invalid_argument("hex_decode_bits: length mismatch");
  BitVector v(len);
  for (std::size_t byte = 0; byte < nbytes; ++byte) {
    int lo = hex_value(hex[2 * byte]);
    int hi = hex_value(hex[2 * byte + 1]);
    if (lo < 0 || hi < 0)
      throw std::invalid_argument("hex_decode_bits: bad hex digit");
    unsigned val = static_cast<unsigned>(lo) | (static_cast<unsigned>(hi) << 4);
    for (std::size_t bit = 0; bit < 8; ++bit) {
      std::size_t i = byte * 8 + bit;
      if (i < len && ((val >> bit) & 1)) v.set(i, true);
    }
  }
  return v;
}

std::string hex_encode_row(const BitMatrix& m, std::size_t i) {
  return hex_encode_bits(m.row_vector(i));
}

nlohmann::json scheme_to_json(const AssociationScheme& s, bool include_matrices) {
  nlohmann::json j;
  j["label"] = s.label;
  j["nu"] = s.nu;
  j["classes"] = s.num_classes();
  std::vector<std::size_t> val;
  for (std::size_t i = 0; i < s.matrix_count(); ++i) val.push_back(s.valency(i));
  j["valencies"] = val;
  if (include_matrices) {
    nlohmann::json mats = nlohmann::json::array();
    for (std::size_t i = 0; i < s.matrix_count(); ++i) {
      nlohmann::json m;
      m["index"] = i;
      std::vector<std::string> rows;
      for (std::size_t r = 0; r < s.nu; ++r)
        rows.push_back(hex_encode_row(s.adjacency[i], r));
      m["rows"] = rows;
      mats.push_back(m);
    }
    j["adjacency"] = mats;
  }
  return j;
}

nlohmann::json check_matrix_to_json(const CheckMatrix& c) {
  nlohmann::json j;
  j["n"] = c.n;
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < c.rows(); ++i) rows.push_back(hex_encode_row(c.m, i));
  j["rows"] = rows;
  return j;
}

nlohmann::json verification_to_json(const VerificationReport& r) {
  nlohmann::json j;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json e;
    e["axiom"] = c.axiom;
    e["pass"] = c.pass;
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["commutative"] = r.commutative;
  j["valencies"] = r.valencies;
  j["all_pass"] = r.all_pass();
  return j;
}

std::string cert_kind_name(CertKind k) {
  return k == CertKind::Exact ? "exact" : "lower_bound";
}

std::string method_name(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::CosetEnumeration:
      return "coset-enumeration";
    case DistanceMethod::WeightEnumeration:
      return "weight-enumeration";
    case DistanceMethod::Oracle:
      return "oracle";
  }
  return "?";
}

nlohmann::json certificate_to_json(const DistanceCertificate& c, bool timings) {
  nlohmann::json j;
  j["kind"] = cert_kind_name(c.kind);
  j["d"] = c.value;
  j["method"] = method_name(c.method);
  if (c.witness.has_value()) {
    j["witness_a_hex"] = hex_encode_bits(c.witness->a);
    j["witness_b_hex"] = hex_encode_bits(c.witness->b);
  } else {
    j["witness_a_hex"] = nullptr;
    j["witness_b_hex"] = nullptr;
  }
  if (timings) j["elapsed_ms"] = c.elapsed_ms;
  return j;
}

}  // namespace qsc
