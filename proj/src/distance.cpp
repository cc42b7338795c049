#include "qsc/distance.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace qsc {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
      .count();
}

// Candidate ordering for deterministic witnesses: smaller (b, a) read as a
// big-endian word pair. Worker count must not change the reported witness.
bool pair_less(Word a1, Word b1, Word a2, Word b2) {
  if (b1 != b2) return b1 < b2;
  return a1 < a2;
}

BitVector pair_to_vec(std::size_t n, Word a, Word b) {
  BitVector v(2 * n);
  auto w = v.words();
  w[0] = a;
  if (n < kWordBits) {
    w[0] |= b << n;
    if (2 * n > kWordBits) w[1] = b >> (kWordBits - n);
  } else {
    w[1] = b;
  }
  return v;
}

ErrorVector make_error_vector(std::size_t n, Word a, Word b) {
  ErrorVector e;
  e.a = BitVector(n);
  e.b = BitVector(n);
  e.a.words()[0] = a;
  e.b.words()[0] = b;
  return e;
}

struct PairBest {
  bool found = false;
  std::size_t w = 0;
  Word a = 0, b = 0;

  void offer(std::size_t cw, Word ca, Word cb) {
    if (!found || cw < w || (cw == w && pair_less(ca, cb, a, b))) {
      found = true;
      w = cw;
      a = ca;
      b = cb;
    }
  }
};

}  // namespace

std::size_t ErrorVector::or_weight() const {
  std::size_t w = 0;
  auto aw = a.words();
  auto bw = b.words();
  for (std::size_t i = 0; i < aw.size(); ++i) w += std::popcount(aw[i] | bw[i]);
  return w;
}

BitMatrix syndrome_matrix(const StabilizerCode& code) {
  std::size_t n = code.n;
  BitMatrix out(code.gens.rows(), 2 * n);
  for (std::size_t i = 0; i < code.gens.rows(); ++i)
    for (std::size_t q = 0; q < n; ++q) {
      if (code.gens.m.get(i, n + q)) out.set(i, q, true);      // Z-part vs a
      if (code.gens.m.get(i, q)) out.set(i, n + q, true);      // X-part vs b
    }
  return out;
}

DistanceCertificate distance_exact(const StabilizerCode& code,
                                   const ExactOptions& opt) {
  auto t0 = Clock::now();
  std::size_t n = code.n;
  if (n > kWordBits)
    throw std::invalid_argument("distance_exact: n > 64 not supported");

  BitMatrix synd = syndrome_matrix(code);
  std::vector<BitVector> kernel = kernel_basis(synd);
  std::size_t dim = kernel.size();
  if (dim != n + code.k)
    throw std::logic_error("distance_exact: kernel dimension != n + k");
  if (dim > opt.ceiling)
    throw std::invalid_argument(
        "distance_exact: kernel dimension " + std::to_string(dim) +
        " exceeds ceiling " + std::to_string(opt.ceiling) +
        "; use distance_bounded");
  if (dim > 62)
    throw std::invalid_argument("distance_exact: kernel dimension > 62");

  // Split the kernel basis into (a, b) halves, one word each.
  std::vector<Word> basis_a(dim), basis_b(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t q = 0; q < n; ++q) {
      if (kernel[i].get(q)) basis_a[i] |= Word(1) << q;
      if (kernel[i].get(n + q)) basis_b[i] |= Word(1) << q;
    }
  }

  RowEchelon gen_ech(code.gens.m);

  unsigned workers = std::max(1u, opt.workers);
  // Fix the top `hi` basis vectors per chunk, Gray-walk the rest.
  std::size_t hi = 0;
  while ((std::size_t(1) << hi) < workers * 4 && hi + 1 < dim) ++hi;
  std::size_t chunk_count = std::size_t(1) << hi;
  std::size_t low = dim - hi;

  std::vector<PairBest> results(chunk_count);
  std::atomic<std::size_t> next_chunk{0};

  auto run = [&]() {
    while (true) {
      std::size_t c = next_chunk.fetch_add(1);
      if (c >= chunk_count) break;
      PairBest best;
      Word cur_a = 0, cur_b = 0;
      for (std::size_t t = 0; t < hi; ++t)
        if ((c >> t) & 1) {
          cur_a ^= basis_a[low + t];
          cur_b ^= basis_b[low + t];
        }
      std::uint64_t steps = std::uint64_t(1) << low;  // low <= 62
      std::uint64_t step = 0;
      while (true) {
        std::size_t w = std::popcount(cur_a | cur_b);
        if (w > 0 && (!best.found || w < best.w ||
                      (w == best.w && pair_less(cur_a, cur_b, best.a, best.b)))) {
          if (!gen_ech.contains(pair_to_vec(n, cur_a, cur_b)))
            best.offer(w, cur_a, cur_b);
        }
        if (++step >= steps) break;
        std::size_t idx = std::countr_zero(step);
        cur_a ^= basis_a[idx];
        cur_b ^= basis_b[idx];
      }
      results[c] = best;
    }
  };

  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }

  PairBest best;
  for (const auto& r : results)
    if (r.found) best.offer(r.w, r.a, r.b);

  DistanceCertificate cert;
  cert.method = DistanceMethod::CosetEnumeration;
  cert.elapsed_ms = ms_since(t0);
  if (!best.found) {
    // N(S) = S (k = 0): no logical operator at all.
    cert.kind = CertKind::LowerBound;
    cert.value = n + 1;
    return cert;
  }
  cert.kind = CertKind::Exact;
  cert.value = best.w;
  cert.witness = make_error_vector(n, best.a, best.b);
  return cert;
}

namespace {

// Reflected mixed-radix Gray walk over base-3 digit vectors (Knuth 7.2.1.1
// Algorithm H), XOR-updating an r-bit syndrome one digit change at a time.
struct PatternWalker {
  std::size_t w;
  std::vector<int> digit;   // 0 = X, 1 = Z, 2 = Y
  std::vector<int> dir;
  std::vector<std::size_t> focus;

  explicit PatternWalker(std::size_t w_)
      : w(w_), digit(w_, 0), dir(w_, 1), focus(w_ + 1) {
    for (std::size_t i = 0; i <= w; ++i) focus[i] = i;
  }

  // Returns the digit index changed, or w when exhausted.
  std::size_t advance(int& old_val, int& new_val) {
    std::size_t j = focus[0];
    focus[0] = 0;
    if (j == w) return w;
    old_val = digit[j];
    digit[j] += dir[j];
    new_val = digit[j];
    if (digit[j] == 0 || digit[j] == 2) {
      dir[j] = -dir[j];
      focus[j] = focus[j + 1];
      focus[j + 1] = j + 1;
    }
    return j;
  }
};

struct BoundedShared {
  std::size_t n = 0;
  std::size_t sw = 0;  // syndrome words
  // syn[(p * 3 + t) * sw + word]: syndrome of a single-qubit error at p,
  // t in {0 = X, 1 = Z, 2 = Y}.
  std::vector<Word> syn;
  const RowEchelon* gen_ech = nullptr;
};

// Big-endian word comparison, i.e. numeric order of the packed value.
bool vec_less(const BitVector& x, const BitVector& y) {
  auto xw = x.words();
  auto yw = y.words();
  for (std::size_t i = xw.size(); i-- > 0;)
    if (xw[i] != yw[i]) return xw[i] < yw[i];
  return false;
}

struct BoundedBest {
  bool found = false;
  BitVector a, b;

  void offer(const BitVector& ca, const BitVector& cb) {
    if (!found || vec_less(cb, b) || (cb == b && vec_less(ca, a))) {
      found = true;
      a = ca;
      b = cb;
    }
  }
};

// All supports of size w whose largest element is `last`, then all 3^w
// patterns per support.
void scan_supports(const BoundedShared& sh, std::size_t w, std::size_t last,
                   BoundedBest& best) {
  std::vector<std::size_t> pos(w);
  pos[w - 1] = last;
  for (std::size_t i = 0; i + 1 < w; ++i) pos[i] = i;

  std::vector<Word> synacc(sh.sw);
  while (true) {
    // Walk patterns for this support.
    PatternWalker walker(w);
    for (std::size_t u = 0; u < sh.sw; ++u) synacc[u] = 0;
    for (std::size_t i = 0; i < w; ++i) {
      const Word* s = &sh.syn[(pos[i] * 3 + 0) * sh.sw];
      for (std::size_t u = 0; u < sh.sw; ++u) synacc[u] ^= s[u];
    }
    while (true) {
      bool zero = true;
      for (std::size_t u = 0; u < sh.sw; ++u)
        if (synacc[u]) {
          zero = false;
          break;
        }
      if (zero) {
        BitVector a(sh.n), b(sh.n);
        for (std::size_t i = 0; i < w; ++i) {
          int t = walker.digit[i];
          if (t == 0 || t == 2) a.set(pos[i], true);
          if (t == 1 || t == 2) b.set(pos[i], true);
        }
        if (!sh.gen_ech->contains(concat_bits(a, b))) best.offer(a, b);
      }
      int oldv = 0, newv = 0;
      std::size_t j = walker.advance(oldv, newv);
      if (j == w) break;
      const Word* so = &sh.syn[(pos[j] * 3 + oldv) * sh.sw];
      const Word* sn = &sh.syn[(pos[j] * 3 + newv) * sh.sw];
      for (std::size_t u = 0; u < sh.sw; ++u) synacc[u] ^= so[u] ^ sn[u];
    }

    // Next combination of the first w-1 positions below `last` (the
    // leading element is the parallel partition key).
    if (w == 1) break;
    std::size_t i = w - 1;
    while (i-- > 0) {
      std::size_t limit = (i + 2 == w) ? last : pos[i + 1];
      if (pos[i] + 1 < limit) {
        ++pos[i];
        for (std::size_t t = i + 1; t + 1 < w; ++t) pos[t] = pos[t - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

DistanceCertificate distance_bounded(const StabilizerCode& code,
                                     std::size_t w_max, unsigned workers) {
  if (w_max < 1) throw std::invalid_argument("distance_bounded: w_max must be >= 1");
  auto t0 = Clock::now();
  std::size_t n = code.n;
  std::size_t r = code.gens.rows();

  BoundedShared sh;
  sh.n = n;
  sh.sw = words_for_bits(r);
  sh.syn.assign(n * 3 * sh.sw, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t p = 0; p < n; ++p) {
      bool x = code.gens.m.get(i, p);
      bool z = code.gens.m.get(i, n + p);
      Word bit = Word(1) << (i % kWordBits);
      std::size_t word = i / kWordBits;
      if (z) sh.syn[(p * 3 + 0) * sh.sw + word] ^= bit;  // X error senses Z
      if (x) sh.syn[(p * 3 + 1) * sh.sw + word] ^= bit;  // Z error senses X
      if (x != z) sh.syn[(p * 3 + 2) * sh.sw + word] ^= bit;
    }
  RowEchelon gen_ech(code.gens.m);
  sh.gen_ech = &gen_ech;

  workers = std::max(1u, workers);
  for (std::size_t w = 1; w <= w_max && w <= n; ++w) {
    // Partition by the largest support element.
    std::vector<BoundedBest> results(n);
    std::atomic<std::size_t> next{w - 1};
    auto run = [&]() {
      while (true) {
        std::size_t last = next.fetch_add(1);
        if (last >= n) break;
        scan_supports(sh, w, last, results[last]);
      }
    };
    if (workers == 1) {
      run();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run);
      for (auto& th : pool) th.join();
    }
    BoundedBest best;
    for (const auto& res : results)
      if (res.found) best.offer(res.a, res.b);
    if (best.found) {
      DistanceCertificate cert;
      cert.kind = CertKind::Exact;
      cert.value = w;
      cert.method = DistanceMethod::WeightEnumeration;
      cert.witness = ErrorVector{best.a, best.b};
      cert.elapsed_ms = ms_since(t0);
      return cert;
    }
  }

  DistanceCertificate cert;
  cert.kind = CertKind::LowerBound;
  cert.value = w_max + 1;
  cert.method = DistanceMethod::WeightEnumeration;
  cert.elapsed_ms = ms_since(t0);
  return cert;
}

DistanceCertificate distance_oracle(const StabilizerCode& code) {
  auto t0 = Clock::now();
  std::size_t n = code.n;
  if (n > 8) throw std::invalid_argument("distance_oracle: n > 8");

  // Deliberately self-contained: its own generator masks and its own tiny
  // elimination, independent of the search code paths it cross-checks.
  std::size_t r = code.gens.rows();
  std::vector<std::uint32_t> gx(r, 0), gz(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t q = 0; q < n; ++q) {
      if (code.gens.m.get(i, q)) gx[i] |= 1u << q;
      if (code.gens.m.get(i, n + q)) gz[i] |= 1u << q;
    }
  // Row-reduce the 2n-bit generator words (a in low bits, b high).
  std::vector<std::uint32_t> basis;
  for (std::size_t i = 0; i < r; ++i) {
    std::uint32_t v = gx[i] | (gz[i] << n);
    for (std::uint32_t b : basis) {
      std::uint32_t lead = 1u << (31 - std::countl_zero(b));
      if (v & lead) v ^= b;
    }
    if (v) basis.push_back(v);
  }

  bool found = false;
  std::size_t bestw = 0;
  std::uint32_t best_a = 0, best_b = 0;
  for (std::uint32_t a = 0; a < (1u << n); ++a)
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      std::uint32_t orw = std::popcount(a | b);
      if (orw == 0) continue;
      bool commuting = true;
      for (std::size_t i = 0; i < r; ++i)
        if ((std::popcount((gx[i] & b)) + std::popcount((gz[i] & a))) & 1) {
          commuting = false;
          break;
        }
      if (!commuting) continue;
      std::uint32_t v = a | (b << n);
      for (std::uint32_t bs : basis) {
        std::uint32_t lead = 1u << (31 - std::countl_zero(bs));
        if (v & lead) v ^= bs;
      }
      if (v == 0) continue;  // element of S
      if (!found || orw < bestw ||
          (orw == bestw && (b < best_b || (b == best_b && a < best_a)))) {
        found = true;
        bestw = orw;
        best_a = a;
        best_b = b;
      }
    }

  DistanceCertificate cert;
  cert.method = DistanceMethod::Oracle;
  cert.elapsed_ms = ms_since(t0);
  if (!found) {
    cert.kind = CertKind::LowerBound;
    cert.value = n + 1;
    return cert;
  }
  cert.kind = CertKind::Exact;
  cert.value = bestw;
  cert.witness = make_error_vector(n, best_a, best_b);
  return cert;
}

DistanceCertificate distance_auto(const StabilizerCode& code, unsigned workers,
                                  std::size_t ceiling, std::size_t fallback_w_max) {
  if (code.n <= 8) return distance_oracle(code);
  if (code.n + code.k <= ceiling)
    return distance_exact(code, ExactOptions{ceiling, workers});
  return distance_bounded(code, fallback_w_max, workers);
}

bool hamming_bound_ok(std::size_t n, std::size_t k, std::size_t d) {
  if (k > n) return false;
  if (n > 100) throw std::invalid_argument("hamming_bound_ok: n too large");
  std::size_t t = d >= 1 ? (d - 1) / 2 : 0;
  // Compare sum C(n,j) 3^j against 2^(n-k); the early exit keeps every
  // intermediate far below the 128-bit limit.
  unsigned __int128 rhs = (unsigned __int128)1 << (n - k);
  unsigned __int128 acc = 0;
  unsigned __int128 binom = 1;  // C(n, j), exact at every step
  unsigned __int128 pow3 = 1;
  for (std::size_t j = 0; j <= t && j <= n; ++j) {
    if (j > 0) {
      binom = binom * (n - j + 1) / j;
      pow3 *= 3;
    }
    acc += binom * pow3;
    if (acc > rhs) return false;
  }
  return acc <= rhs;
}

bool kl_bound_ok(std::size_t n, std::size_t k, std::size_t d) {
  return n + 2 >= k + 2 * d;
}

bool witness_valid(const StabilizerCode& code, const DistanceCertificate& cert) {
  if (cert.kind != CertKind::Exact || !cert.witness.has_value()) return false;
  const ErrorVector& e = *cert.witness;
  if (e.a.size() != code.n || e.b.size() != code.n) return false;
  if (e.or_weight() != cert.value) return false;
  BitVector v = concat_bits(e.a, e.b);
  if (!mat_vec(syndrome_matrix(code), v).is_zero()) return false;
  return !in_rowspace(code.gens.m, v);
}

}  // namespace qsc
