#include "qsc/scheme.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qsc {

namespace {

std::string fmt_cell(std::size_t a, std::size_t b) {
  std::ostringstream os;
  os << "(" << a << "," << b << ")";
  return os.str();
}

}  // namespace

AssociationScheme cyclic_scheme(std::size_t nu) {
  if (nu < 2) throw std::invalid_argument("cyclic_scheme: nu must be >= 2");
  BitMatrix s = BitMatrix::cyclic_shift(nu);
  std::size_t m = nu / 2;
  AssociationScheme sch;
  sch.label = "C_" + std::to_string(nu);
  sch.nu = nu;
  sch.adjacency.push_back(BitMatrix::identity(nu));
  if (nu % 2 == 0) {
    for (std::size_t i = 1; i < m; ++i)
      sch.adjacency.push_back(mat_pow(s, i) + mat_pow(s, nu - i));
    sch.adjacency.push_back(mat_pow(s, m));
  } else {
    for (std::size_t i = 1; i <= m; ++i)
      sch.adjacency.push_back(mat_pow(s, i) + mat_pow(s, nu - i));
  }
  return sch;
}

AssociationScheme cyclic_group_scheme(std::size_t nu) {
  if (nu < 1) throw std::invalid_argument("cyclic_group_scheme: nu must be >= 1");
  BitMatrix s = BitMatrix::cyclic_shift(nu);
  AssociationScheme sch;
  sch.label = "Z_" + std::to_string(nu);
  sch.nu = nu;
  for (std::size_t i = 0; i < nu; ++i) sch.adjacency.push_back(mat_pow(s, i));
  return sch;
}

AssociationScheme product_scheme(const std::vector<AssociationScheme>& factors) {
  if (factors.empty())
    throw std::invalid_argument("product_scheme: empty factor list");
  AssociationScheme out;
  out.nu = 1;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    out.nu *= factors[f].nu;
    out.label += (f ? "x" : "") + factors[f].label;
  }
  // Odometer over index tuples, last factor fastest (lexicographic order).
  std::vector<std::size_t> idx(factors.size(), 0);
  while (true) {
    BitMatrix m = factors[0].adjacency[idx[0]];
    for (std::size_t f = 1; f < factors.size(); ++f)
      m = kron(m, factors[f].adjacency[idx[f]]);
    out.adjacency.push_back(std::move(m));
    std::size_t f = factors.size();
    while (f > 0) {
      --f;
      if (++idx[f] < factors[f].matrix_count()) break;
      idx[f] = 0;
      if (f == 0) return out;
    }
  }
}

AssociationScheme u6n_scheme(std::size_t n) {
  if (n < 1) throw std::invalid_argument("u6n_scheme: n must be >= 1");
  std::size_t half = 2 * n;
  BitMatrix s = BitMatrix::cyclic_shift(half);
  BitMatrix eye = BitMatrix::identity(half);

  BitMatrix a(6 * n, 6 * n);
  a.set_block(0, 0, s);
  a.set_block(half, 2 * half, s);
  a.set_block(2 * half, half, s);
  BitMatrix b(6 * n, 6 * n);
  b.set_block(0, half, eye);
  b.set_block(half, 2 * half, eye);
  b.set_block(2 * half, 0, eye);
  BitMatrix b2 = mul(b, b);

  AssociationScheme sch;
  sch.label = "U_" + std::to_string(6 * n);
  sch.nu = 6 * n;
  for (std::size_t r = 0; r < n; ++r) sch.adjacency.push_back(mat_pow(a, 2 * r));
  for (std::size_t r = 0; r < n; ++r) {
    BitMatrix p = mat_pow(a, 2 * r);
    sch.adjacency.push_back(mul(b, p) + mul(b2, p));
  }
  for (std::size_t r = 0; r < n; ++r) {
    BitMatrix p = mat_pow(a, 2 * r + 1);
    sch.adjacency.push_back(p + mul(b, p) + mul(b2, p));
  }
  return sch;
}

AssociationScheme t4n_scheme(std::size_t n) {
  if (n < 2) throw std::invalid_argument("t4n_scheme: n must be >= 2");
  std::size_t half = 2 * n;
  BitMatrix s = BitMatrix::cyclic_shift(half);
  BitMatrix eye = BitMatrix::identity(n);

  BitMatrix a(4 * n, 4 * n);
  a.set_block(0, 0, s);
  a.set_block(half, half, transpose(s));  // S^-1
  BitMatrix b(4 * n, 4 * n);
  b.set_block(0, 2 * n, eye);
  b.set_block(n, 3 * n, eye);
  b.set_block(2 * n, n, eye);
  b.set_block(3 * n, 0, eye);
  BitMatrix b2 = mul(b, b);

  BitMatrix b3 = mul(b2, b);

  AssociationScheme sch;
  sch.label = "T_" + std::to_string(4 * n);
  sch.nu = 4 * n;
  sch.adjacency.push_back(BitMatrix::identity(4 * n));
  sch.adjacency.push_back(mat_pow(a, n));
  for (std::size_t j = 1; j < n; ++j)
    sch.adjacency.push_back(mat_pow(a, j) + mul(b2, mat_pow(a, n - j)));
  // Reflection sums pair [b] and [b]^3 at equal a-exponents under the
  // ceiling limits with side conditions 2j < n resp. 2j+1 < n. For even n
  // these are the two reflection classes (valency n each); for odd n the
  // pairing mixes them (valencies n+1 and n-1) yet still closes into a
  // commutative scheme, and it is the basis the published codes use.
  BitMatrix refl_even(4 * n, 4 * n);
  BitMatrix refl_odd(4 * n, 4 * n);
  for (std::size_t j = 0; 2 * j < n; ++j) {
    BitMatrix p = mat_pow(a, 2 * j);
    refl_even = refl_even + mul(b, p) + mul(b3, p);
  }
  for (std::size_t j = 0; 2 * j + 1 < n; ++j) {
    BitMatrix p = mat_pow(a, 2 * j + 1);
    refl_odd = refl_odd + mul(b, p) + mul(b3, p);
  }
  sch.adjacency.push_back(std::move(refl_even));
  sch.adjacency.push_back(std::move(refl_odd));
  return sch;
}

AssociationScheme v8n_scheme(std::size_t n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("v8n_scheme: n must be odd and >= 1");
  std::size_t half = 2 * n;
  BitMatrix s = BitMatrix::cyclic_shift(half);
  BitMatrix sinv = transpose(s);
  BitMatrix eye = BitMatrix::identity(half);

  BitMatrix a(8 * n, 8 * n);
  a.set_block(0, 0, s);
  a.set_block(half, 3 * half, sinv);
  a.set_block(2 * half, 2 * half, s);
  a.set_block(3 * half, half, sinv);
  BitMatrix b(8 * n, 8 * n);
  b.set_block(0, half, eye);
  b.set_block(half, 2 * half, eye);
  b.set_block(2 * half, 3 * half, eye);
  b.set_block(3 * half, 0, eye);
  BitMatrix b2 = mul(b, b);
  BitMatrix b3 = mul(b2, b);

  AssociationScheme sch;
  sch.label = "V_" + std::to_string(8 * n);
  sch.nu = 8 * n;
  sch.adjacency.push_back(BitMatrix::identity(8 * n));
  sch.adjacency.push_back(b2);
  for (std::size_t j = 0; j < n; ++j)
    sch.adjacency.push_back(mat_pow(a, 2 * j + 1) +
                            mul(b2, mat_pow(a, 2 * n - 2 * j - 1)));
  for (std::size_t j = 1; j <= (n - 1) / 2; ++j)
    sch.adjacency.push_back(mat_pow(a, 2 * j) + mat_pow(a, 2 * n - 2 * j));
  for (std::size_t j = 1; j <= (n - 1) / 2; ++j)
    sch.adjacency.push_back(mul(b2, mat_pow(a, 2 * j)) +
                            mul(b2, mat_pow(a, 2 * n - 2 * j)));
  BitMatrix odd_refl(8 * n, 8 * n);
  BitMatrix even_refl(8 * n, 8 * n);
  for (std::size_t j = 0; j < n; ++j) {
    BitMatrix pe = mat_pow(a, 2 * j);
    BitMatrix po = mat_pow(a, 2 * j + 1);
    even_refl = even_refl + mul(b, pe) + mul(b3, pe);
    odd_refl = odd_refl + mul(b, po) + mul(b3, po);
  }
  sch.adjacency.push_back(std::move(even_refl));
  sch.adjacency.push_back(std::move(odd_refl));
  return sch;
}

AssociationScheme d2n_scheme(std::size_t n) {
  if (n < 2) throw std::invalid_argument("d2n_scheme: n must be >= 2");
  BitMatrix s = BitMatrix::cyclic_shift(n);
  BitMatrix i2 = BitMatrix::identity(2);
  BitMatrix sx = BitMatrix::cyclic_shift(2);  // sigma_x
  std::size_t m = n / 2;

  AssociationScheme sch;
  sch.label = "D_" + std::to_string(2 * n);
  sch.nu = 2 * n;
  sch.adjacency.push_back(BitMatrix::identity(2 * n));
  if (n % 2 == 0) {
    for (std::size_t j = 1; j < m; ++j)
      sch.adjacency.push_back(kron(i2, mat_pow(s, j) + mat_pow(s, n - j)));
    sch.adjacency.push_back(kron(i2, mat_pow(s, m)));
    BitMatrix even_sum(n, n), odd_sum(n, n);
    for (std::size_t j = 0; j < m; ++j) {
      even_sum = even_sum + mat_pow(s, 2 * j);
      odd_sum = odd_sum + mat_pow(s, 2 * j + 1);
    }
    sch.adjacency.push_back(kron(sx, even_sum));
    sch.adjacency.push_back(kron(sx, odd_sum));
  } else {
    for (std::size_t j = 1; j <= m; ++j)
      sch.adjacency.push_back(kron(i2, mat_pow(s, j) + mat_pow(s, n - j)));
    sch.adjacency.push_back(kron(sx, BitMatrix::ones(n, n)));
  }
  return sch;
}

VerificationReport verify_scheme(const AssociationScheme& s) {
  VerificationReport rep;
  std::size_t nu = s.nu;
  std::size_t m = s.matrix_count();

  // A_0 = I
  {
    AxiomCheck c{"identity", true, ""};
    if (s.adjacency.empty() || !(s.adjacency[0] == BitMatrix::identity(nu))) {
      c.pass = false;
      c.witness = "A_0 != I";
    }
    rep.checks.push_back(c);
  }

  // Partition: every cell covered by exactly one A_i. Also builds the
  // cell -> class map used by the closure check.
  std::vector<int> cls(nu * nu, -1);
  {
    AxiomCheck c{"partition", true, ""};
    for (std::size_t i = 0; i < m && c.pass; ++i) {
      const BitMatrix& a = s.adjacency[i];
      if (a.rows() != nu || a.cols() != nu) {
        c.pass = false;
        c.witness = "A_" + std::to_string(i) + " has wrong shape";
        break;
      }
      for (std::size_t r = 0; r < nu && c.pass; ++r)
        for (std::size_t col = 0; col < nu; ++col)
          if (a.get(r, col)) {
            if (cls[r * nu + col] != -1) {
              c.pass = false;
              c.witness = "cell " + fmt_cell(r, col) + " covered twice (A_" +
                          std::to_string(cls[r * nu + col]) + " and A_" +
                          std::to_string(i) + ")";
              break;
            }
            cls[r * nu + col] = static_cast<int>(i);
          }
    }
    if (c.pass)
      for (std::size_t cell = 0; cell < nu * nu; ++cell)
        if (cls[cell] == -1) {
          c.pass = false;
          c.witness = "cell " + fmt_cell(cell / nu, cell % nu) + " uncovered";
          break;
        }
    rep.checks.push_back(c);
  }

  // Constant row sums (valencies).
  {
    AxiomCheck c{"regularity", true, ""};
    for (std::size_t i = 0; i < m && c.pass; ++i) {
      std::size_t v = s.adjacency[i].row_weight(0);
      for (std::size_t r = 1; r < nu; ++r)
        if (s.adjacency[i].row_weight(r) != v) {
          c.pass = false;
          c.witness = "A_" + std::to_string(i) + " row " + std::to_string(r) +
                      " weight " + std::to_string(s.adjacency[i].row_weight(r)) +
                      " != " + std::to_string(v);
          break;
        }
      if (c.pass) rep.valencies.push_back(v);
    }
    rep.checks.push_back(c);
  }

  // Transpose closure.
  {
    AxiomCheck c{"transpose-closure", true, ""};
    for (std::size_t i = 0; i < m && c.pass; ++i) {
      BitMatrix t = transpose(s.adjacency[i]);
      bool found = false;
      for (std::size_t j = 0; j < m; ++j)
        if (t == s.adjacency[j]) {
          found = true;
          break;
        }
      if (!found) {
        c.pass = false;
        c.witness = "transpose of A_" + std::to_string(i) + " not in basis";
      }
    }
    rep.checks.push_back(c);
  }

  // Closure: A_i A_j (integer product) constant on every class.
  {
    AxiomCheck c{"closure", true, ""};
    bool partition_ok = rep.checks[1].pass;
    if (!partition_ok) {
      c.pass = false;
      c.witness = "skipped: partition axiom failed";
    } else {
      rep.commutative = true;
      std::vector<IntMatrix> products(m * m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          products[i * m + j] = mul_int(s.adjacency[i], s.adjacency[j]);
      for (std::size_t i = 0; i < m && c.pass; ++i)
        for (std::size_t j = 0; j < m && c.pass; ++j) {
          const IntMatrix& p = products[i * m + j];
          std::vector<std::int64_t> coeff(m, -1);
          for (std::size_t r = 0; r < nu && c.pass; ++r)
            for (std::size_t col = 0; col < nu; ++col) {
              int l = cls[r * nu + col];
              std::int64_t val = p.at(r, col);
              if (coeff[l] == -1) {
                coeff[l] = val;
              } else if (coeff[l] != val) {
                c.pass = false;
                c.witness = "A_" + std::to_string(i) + "*A_" + std::to_string(j) +
                            " not constant on class " + std::to_string(l) +
                            ": cell " + fmt_cell(r, col) + " = " +
                            std::to_string(val) + " vs " + std::to_string(coeff[l]);
                break;
              }
            }
          if (c.pass && !(p == products[j * m + i])) rep.commutative = false;
        }
    }
    rep.checks.push_back(c);
  }

  return rep;
}

IntersectionTensor intersection_numbers(const AssociationScheme& s) {
  std::size_t nu = s.nu;
  std::size_t m = s.matrix_count();

  std::vector<int> cls(nu * nu, -1);
  std::vector<std::size_t> rep_cell(m, nu * nu);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < nu; ++r)
      for (std::size_t col = 0; col < nu; ++col)
        if (s.adjacency[i].get(r, col)) {
          if (cls[r * nu + col] != -1)
            throw std::runtime_error("intersection_numbers: basis is not a partition");
          cls[r * nu + col] = static_cast<int>(i);
          if (rep_cell[i] == nu * nu) rep_cell[i] = r * nu + col;
        }
  for (std::size_t cell = 0; cell < nu * nu; ++cell)
    if (cls[cell] == -1)
      throw std::runtime_error("intersection_numbers: basis is not a partition");

  IntersectionTensor t;
  t.m = m;
  t.p.assign(m * m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      IntMatrix p = mul_int(s.adjacency[i], s.adjacency[j]);
      for (std::size_t l = 0; l < m; ++l)
        t.p[(l * m + i) * m + j] = p.at(rep_cell[l] / nu, rep_cell[l] % nu);
      // The expansion must reproduce the product exactly.
      for (std::size_t r = 0; r < nu; ++r)
        for (std::size_t col = 0; col < nu; ++col)
          if (p.at(r, col) != t.at(cls[r * nu + col], i, j))
            throw std::runtime_error("intersection_numbers: basis does not close");
    }
  return t;
}

namespace {

void partitions_desc(std::uint64_t n, std::uint64_t max_part,
                     std::vector<std::uint64_t>& cur,
                     std::vector<std::vector<std::uint64_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint64_t part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_desc(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::uint64_t>> abelian_groups_of_order(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("abelian_groups_of_order: n must be >= 1");
  // Prime factorization by trial division; n stays modest in this artifact.
  std::map<std::uint64_t, std::uint64_t> factors;
  std::uint64_t rem = n;
  for (std::uint64_t p = 2; p * p <= rem; ++p)
    while (rem % p == 0) {
      ++factors[p];
      rem /= p;
    }
  if (rem > 1) ++factors[rem];

  std::vector<std::vector<std::uint64_t>> groups = {{}};
  for (const auto& [p, e] : factors) {
    std::vector<std::vector<std::uint64_t>> parts;
    std::vector<std::uint64_t> cur;
    partitions_desc(e, e, cur, parts);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& g : groups)
      for (const auto& part : parts) {
        std::vector<std::uint64_t> ext = g;
        for (std::uint64_t exp : part) {
          std::uint64_t pw = 1;
          for (std::uint64_t q = 0; q < exp; ++q) pw *= p;
          ext.push_back(pw);
        }
        next.push_back(std::move(ext));
      }
    groups = std::move(next);
  }
  return groups;
}

}  // namespace qsc
