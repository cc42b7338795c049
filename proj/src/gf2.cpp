#include "qsc/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace qsc {

namespace {

// Zero out bits at positions >= len in the last word.
void mask_tail(std::span<Word> words, std::size_t len) {
  std::size_t r = len % kWordBits;
  if (r != 0 && !words.empty()) words.back() &= (Word(1) << r) - 1;
}

}  // namespace

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    char c = bits[i];
    if (c == '1')
      v.set(i, true);
    else if (c != '0')
      throw std::invalid_argument("BitVector::from_string: expected '0'/'1'");
  }
  return v;
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (Word w : w_) n += std::popcount(w);
  return n;
}

bool BitVector::is_zero() const {
  for (Word w : w_)
    if (w) return false;
  return true;
}

void BitVector::xor_with(const BitVector& o) {
  if (o.len_ != len_) throw std::invalid_argument("BitVector xor: length mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::ones(std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto r = m.row(i);
    for (auto& w : r) w = ~Word(0);
    mask_tail(r, cols);
  }
  return m;
}

BitMatrix BitMatrix::cyclic_shift(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set((j + 1) % n, j, true);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) return BitMatrix();
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw std::invalid_argument("BitMatrix::from_strings: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      char c = rows[i][j];
      if (c == '1')
        m.set(i, j, true);
      else if (c != '0')
        throw std::invalid_argument("BitMatrix::from_strings: expected '0'/'1'");
    }
  }
  return m;
}

BitVector BitMatrix::row_vector(std::size_t i) const {
  BitVector v(cols_);
  auto src = row(i);
  auto dst = v.words();
  for (std::size_t w = 0; w < wpr_; ++w) dst[w] = src[w];
  return v;
}

void BitMatrix::set_row(std::size_t i, const BitVector& v) {
  if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
  auto dst = row(i);
  auto src = v.words();
  for (std::size_t w = 0; w < wpr_; ++w) dst[w] = src[w];
}

std::size_t BitMatrix::row_weight(std::size_t i) const {
  std::size_t n = 0;
  for (Word w : row(i)) n += std::popcount(w);
  return n;
}

void BitMatrix::set_block(std::size_t r0, std::size_t c0, const BitMatrix& src) {
  if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_)
    throw std::invalid_argument("set_block: out of range");
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j)
      if (src.get(i, j)) set(r0 + i, c0 + j, true);
}

bool BitMatrix::is_zero() const {
  for (Word w : data_)
    if (w) return false;
  return true;
}

std::string BitMatrix::to_string() const {
  std::string s;
  s.reserve(rows_ * (cols_ + 1));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) s.push_back(get(i, j) ? '1' : '0');
    if (i + 1 < rows_) s.push_back('\n');
  }
  return s;
}

BitMatrix add(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("add: shape mismatch");
  BitMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = c.row(i);
    auto src = b.row(i);
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
  }
  return c;
}

BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: shape mismatch");
  BitMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = c.row(i);
    auto ar = a.row(i);
    for (std::size_t w = 0; w < ar.size(); ++w) {
      Word bits = ar[w];
      while (bits) {
        std::size_t k = w * kWordBits + std::countr_zero(bits);
        bits &= bits - 1;
        auto br = b.row(k);
        for (std::size_t u = 0; u < dst.size(); ++u) dst[u] ^= br[u];
      }
    }
  }
  return c;
}

IntMatrix mul_int(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul_int: shape mismatch");
  BitMatrix bt = transpose(b);
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ar = a.row(i);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      auto br = bt.row(j);
      std::size_t acc = 0;
      for (std::size_t w = 0; w < ar.size(); ++w)
        acc += std::popcount(ar[w] & br[w]);
      c.at(i, j) = static_cast<std::int64_t>(acc);
    }
  }
  return c;
}

BitMatrix transpose(const BitMatrix& a) {
  BitMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    for (std::size_t w = 0; w < r.size(); ++w) {
      Word bits = r[w];
      while (bits) {
        std::size_t j = w * kWordBits + std::countr_zero(bits);
        bits &= bits - 1;
        t.set(j, i, true);
      }
    }
  }
  return t;
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1)
      if (a.get(i1, j1))
        c.set_block(i1 * b.rows(), j1 * b.cols(), b);
  return c;
}

BitMatrix mat_pow(const BitMatrix& a, std::size_t e) {
  if (a.rows() != a.cols()) throw std::invalid_argument("mat_pow: square only");
  BitMatrix r = BitMatrix::identity(a.rows());
  BitMatrix base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

BitVector mat_vec(const BitMatrix& a, const BitVector& v) {
  if (v.size() != a.cols()) throw std::invalid_argument("mat_vec: length mismatch");
  BitVector out(a.rows());
  auto vw = v.words();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    Word acc = 0;
    for (std::size_t w = 0; w < r.size(); ++w) acc ^= r[w] & vw[w];
    out.set(i, std::popcount(acc) & 1);
  }
  return out;
}

BitVector concat_bits(const BitVector& a, const BitVector& b) {
  BitVector v(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.get(i)) v.set(i, true);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b.get(i)) v.set(a.size() + i, true);
  return v;
}

RowEchelon::RowEchelon(const BitMatrix& m) : cols_(m.cols()) {
  for (std::size_t i = 0; i < m.rows(); ++i) insert(m.row_vector(i));
}

namespace {

std::size_t leading_bit(const BitVector& v) {
  auto w = v.words();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) return i * kWordBits + std::countr_zero(w[i]);
  return v.size();
}

}  // namespace

bool RowEchelon::insert(BitVector row) {
  if (row.size() != cols_) throw std::invalid_argument("RowEchelon: length mismatch");
  for (const auto& [p, r] : rows_) {
    if (row.get(p)) row.xor_with(r);
  }
  std::size_t lead = leading_bit(row);
  if (lead == cols_) return false;
  auto it = rows_.begin();
  while (it != rows_.end() && it->first < lead) ++it;
  rows_.insert(it, {lead, std::move(row)});
  return true;
}

bool RowEchelon::contains(const BitVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("RowEchelon: length mismatch");
  BitVector r = v;
  for (const auto& [p, row] : rows_) {
    if (r.get(p)) r.xor_with(row);
  }
  return r.is_zero();
}

std::size_t rank(const BitMatrix& a) {
  RowEchelon e(a);
  return e.rank();
}

std::vector<std::size_t> independent_rows(const BitMatrix& a) {
  RowEchelon e(a.cols());
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (e.insert(a.row_vector(i))) kept.push_back(i);
  return kept;
}

std::vector<BitVector> kernel_basis(const BitMatrix& a) {
  // Full reduction with recorded pivot columns, then one basis vector per
  // free column: v[free] = 1, v[pivot_r] = R[r][free].
  std::size_t n = a.cols();
  std::vector<BitVector> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row_vector(i));

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t sel = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i].get(c)) {
        sel = i;
        break;
      }
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(c)) rows[i].xor_with(rows[r]);
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<BitVector> basis;
  basis.reserve(n - pivot_col.size());
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    BitVector v(n);
    v.set(c, true);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      if (rows[i].get(c)) v.set(pivot_col[i], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_rowspace(const BitMatrix& a, const BitVector& v) {
  if (v.size() != a.cols()) throw std::invalid_argument("in_rowspace: length mismatch");
  RowEchelon e(a);
  return e.contains(v);
}

BitMatrix rref(const BitMatrix& a) {
  std::vector<BitVector> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row_vector(i));
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < rows.size(); ++c) {
    std::size_t sel = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i].get(c)) {
        sel = i;
        break;
      }
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(c)) rows[i].xor_with(rows[r]);
    ++r;
  }
  BitMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i) out.set_row(i, rows[i]);
  return out;
}

}  // namespace qsc
