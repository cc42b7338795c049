// Bit-packed GF(2) linear algebra: dense matrices and vectors with rows
// packed LSB-first into 64-bit words. Everything downstream (association
// schemes, check matrices, distance search) is built on these types.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsc {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for_bits(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Dense bit vector of fixed length. Bits beyond len are kept zero so that
// popcounts over whole words are safe.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), w_(words_for_bits(len), 0) {}

  // Parse "01001" (index 0 = leftmost character).
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return len_; }
  bool get(std::size_t i) const {
    return (w_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i, bool v) {
    Word mask = Word(1) << (i % kWordBits);
    if (v)
      w_[i / kWordBits] |= mask;
    else
      w_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) { w_[i / kWordBits] ^= Word(1) << (i % kWordBits); }

  std::size_t popcount() const;
  bool is_zero() const;
  void xor_with(const BitVector& o);

  std::span<const Word> words() const { return w_; }
  std::span<Word> words() { return w_; }

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t len_ = 0;
  std::vector<Word> w_;
};

// Integer-valued dense matrix, used for the intersection-number side of
// scheme verification. Deliberately separate from the GF(2) code path.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> v;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c, 0) {}
  std::int64_t& at(std::size_t i, std::size_t j) { return v[i * cols + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return v[i * cols + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

// Row-major bit-packed GF(2) matrix. Immutable by convention once built
// (ops below return fresh matrices); trailing bits of every row are zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_(words_for_bits(cols)),
        data_(rows * wpr_, 0) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix ones(std::size_t rows, std::size_t cols);  // all-one J
  // Circulant shift S of Eq.-style convention: S[i][j] = 1 iff i = j+1 (mod n),
  // i.e. S * e_j = e_{j+1}; S^n = I.
  static BitMatrix cyclic_shift(std::size_t n);
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t i, std::size_t j) const {
    return (data_[i * wpr_ + j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v) {
    Word mask = Word(1) << (j % kWordBits);
    if (v)
      data_[i * wpr_ + j / kWordBits] |= mask;
    else
      data_[i * wpr_ + j / kWordBits] &= ~mask;
  }

  std::span<const Word> row(std::size_t i) const {
    return {data_.data() + i * wpr_, wpr_};
  }
  std::span<Word> row(std::size_t i) {
    return {data_.data() + i * wpr_, wpr_};
  }

  BitVector row_vector(std::size_t i) const;
  void set_row(std::size_t i, const BitVector& v);
  std::size_t row_weight(std::size_t i) const;

  // Copies src into this matrix with top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const BitMatrix& src);

  bool is_zero() const;
  std::string to_string() const;  // rows of '0'/'1', '\n'-separated

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<Word> data_;
};

// Entrywise XOR; shapes must match.
BitMatrix add(const BitMatrix& a, const BitMatrix& b);
// GF(2) product; a.cols() must equal b.rows().
BitMatrix mul(const BitMatrix& a, const BitMatrix& b);
// Integer product of two 0/1 matrices (counts, not parities). This is the
// product used for intersection numbers; it shares no code with mul().
IntMatrix mul_int(const BitMatrix& a, const BitMatrix& b);

BitMatrix transpose(const BitMatrix& a);
BitMatrix kron(const BitMatrix& a, const BitMatrix& b);
// a^e over GF(2) for square a, e >= 0 (e = 0 gives the identity).
BitMatrix mat_pow(const BitMatrix& a, std::size_t e);

inline BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
  return add(a, b);
}
inline BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  return mul(a, b);
}

BitVector mat_vec(const BitMatrix& a, const BitVector& v);
// (a | b): bits of a at 0..a.size()-1, bits of b after.
BitVector concat_bits(const BitVector& a, const BitVector& b);

// Incremental row-echelon basis. Stored rows have distinct leading bits,
// which is enough for membership tests and rank.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}
  explicit RowEchelon(const BitMatrix& m);

  // Reduces the row against the basis; inserts the remainder if nonzero.
  // Returns true iff the rank grew.
  bool insert(BitVector row);
  // True iff v is a GF(2) combination of the inserted rows.
  bool contains(const BitVector& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  // (pivot column, reduced row), kept sorted by pivot.
  std::vector<std::pair<std::size_t, BitVector>> rows_;
};

std::size_t rank(const BitMatrix& a);
// Maximal independent row subset, greedy top-down: row i is kept iff it is
// independent of the kept rows above it.
std::vector<std::size_t> independent_rows(const BitMatrix& a);
// Basis of the right kernel {v : A v = 0}; size is cols - rank.
std::vector<BitVector> kernel_basis(const BitMatrix& a);
bool in_rowspace(const BitMatrix& a, const BitVector& v);

// Reduced row-echelon form with all-zero rows removed; canonical for the
// rowspace, used to deduplicate codes by generator span.
BitMatrix rref(const BitMatrix& a);

}  // namespace qsc
