#include "qsc/stabilizer.hpp"

#include <bit>
#include <stdexcept>

namespace qsc {

CheckMatrix build_check_matrix(const AssociationScheme& s,
                               std::span<const std::size_t> sel1,
                               std::span<const std::size_t> sel2) {
  if (sel1.empty() && sel2.empty())
    throw std::invalid_argument("build_check_matrix: both subsets empty");
  std::size_t nu = s.nu;
  BitMatrix b1(nu, nu), b2(nu, nu);
  for (std::size_t i : sel1) {
    if (i >= s.matrix_count())
      throw std::out_of_range("build_check_matrix: sel1 index out of range");
    b1 = b1 + s.adjacency[i];
  }
  for (std::size_t i : sel2) {
    if (i >= s.matrix_count())
      throw std::out_of_range("build_check_matrix: sel2 index out of range");
    b2 = b2 + s.adjacency[i];
  }
  CheckMatrix c;
  c.n = nu;
  c.m = BitMatrix(nu, 2 * nu);
  c.m.set_block(0, 0, b1);
  c.m.set_block(0, nu, b2);
  return c;
}

bool symplectic_orthogonal(const CheckMatrix& c, std::size_t i, std::size_t j) {
  // Lambda is never materialized: the form is popcount(x_i & z_j) +
  // popcount(z_i & x_j) mod 2, computed wordwise on the packed rows.
  std::size_t n = c.n;
  std::size_t parity = 0;
  for (std::size_t q = 0; q < n; ++q) {
    parity ^= (c.m.get(i, q) & c.m.get(j, n + q));
    parity ^= (c.m.get(i, n + q) & c.m.get(j, q));
  }
  return parity == 0;
}

bool commutes(const CheckMatrix& c) {
  // Extract halves once; the pairwise test is then pure word AND/popcount.
  std::size_t n = c.n;
  std::size_t r = c.rows();
  std::size_t hw = words_for_bits(n);
  std::vector<Word> xs(r * hw, 0), zs(r * hw, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t q = 0; q < n; ++q) {
      if (c.m.get(i, q)) xs[i * hw + q / kWordBits] |= Word(1) << (q % kWordBits);
      if (c.m.get(i, n + q)) zs[i * hw + q / kWordBits] |= Word(1) << (q % kWordBits);
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      std::size_t p = 0;
      for (std::size_t w = 0; w < hw; ++w) {
        p += std::popcount(xs[i * hw + w] & zs[j * hw + w]);
        p += std::popcount(zs[i * hw + w] & xs[j * hw + w]);
      }
      if (p & 1) return false;
    }
  return true;
}

namespace {

StabilizerCode finish_selection(const CheckMatrix& c,
                                std::vector<std::size_t> candidate_rows) {
  if (!commutes(c))
    throw std::invalid_argument("select_generators: rows do not commute");
  RowEchelon ech(c.m.cols());
  std::vector<std::size_t> kept;
  for (std::size_t i : candidate_rows)
    if (ech.insert(c.m.row_vector(i))) kept.push_back(i);
  if (kept.empty())
    throw std::invalid_argument("select_generators: all rows dependent");

  StabilizerCode code;
  code.n = c.n;
  code.k = c.n - kept.size();
  code.gens.n = c.n;
  code.gens.m = BitMatrix(kept.size(), 2 * c.n);
  for (std::size_t i = 0; i < kept.size(); ++i)
    code.gens.m.set_row(i, c.m.row_vector(kept[i]));
  code.provenance.kept_rows = std::move(kept);
  return code;
}

}  // namespace

StabilizerCode select_generators(const CheckMatrix& c, std::size_t drop_last) {
  if (drop_last >= c.rows())
    throw std::invalid_argument("select_generators: drop_last >= row count");
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i + drop_last < c.rows(); ++i) rows.push_back(i);
  return finish_selection(c, std::move(rows));
}

StabilizerCode select_generators_subset(const CheckMatrix& c,
                                        std::span<const std::size_t> keep) {
  if (keep.empty())
    throw std::invalid_argument("select_generators_subset: empty row set");
  for (std::size_t i : keep)
    if (i >= c.rows())
      throw std::out_of_range("select_generators_subset: row index out of range");
  return finish_selection(c, std::vector<std::size_t>(keep.begin(), keep.end()));
}

std::string row_to_pauli(const CheckMatrix& c, std::size_t i) {
  std::string s(c.n, 'I');
  for (std::size_t q = 0; q < c.n; ++q) {
    bool x = c.m.get(i, q);
    bool z = c.m.get(i, c.n + q);
    if (x && z)
      s[q] = 'Y';
    else if (x)
      s[q] = 'X';
    else if (z)
      s[q] = 'Z';
  }
  return s;
}

std::vector<std::string> to_pauli(const CheckMatrix& c) {
  std::vector<std::string> out;
  out.reserve(c.rows());
  for (std::size_t i = 0; i < c.rows(); ++i) out.push_back(row_to_pauli(c, i));
  return out;
}

std::vector<std::string> to_pauli(const StabilizerCode& code) {
  return to_pauli(code.gens);
}

CheckMatrix from_pauli(std::span<const std::string> lines) {
  if (lines.empty()) throw std::invalid_argument("from_pauli: no generators");
  std::size_t n = lines[0].size();
  CheckMatrix c;
  c.n = n;
  c.m = BitMatrix(lines.size(), 2 * n);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() != n)
      throw std::invalid_argument("from_pauli: ragged generator lengths");
    for (std::size_t q = 0; q < n; ++q) {
      switch (lines[i][q]) {
        case 'I':
          break;
        case 'X':
          c.m.set(i, q, true);
          break;
        case 'Z':
          c.m.set(i, n + q, true);
          break;
        case 'Y':
          c.m.set(i, q, true);
          c.m.set(i, n + q, true);
          break;
        default:
          throw std::invalid_argument("from_pauli: symbol outside {I,X,Y,Z}");
      }
    }
  }
  return c;
}

}  // namespace qsc
