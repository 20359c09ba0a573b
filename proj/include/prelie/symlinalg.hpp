#pragma once
//
// Dense exact matrices over Rat, FpScalar and polynomial rings, with
// fraction-free (Bareiss) rank and determinant, kernels over fields, and
// probabilistic generic-rank certification by random specialization.
//

#include "prelie/exactmath.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prelie {

template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<T> entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("Mat: entry count differs from rows*cols");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<T>& entries() const { return a_; }

  void swapRows(std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(r, j), (*this)(s, j));
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using MatQ = Mat<Rat>;
using MatPolyQ = Mat<PolyQ>;

// ---------------------------------------------------------------------------
// generic helpers

inline Rat exactQuotient(const Rat& a, const Rat& b) { return a / b; }
inline FpScalar exactQuotient(const FpScalar& a, const FpScalar& b) { return a / b; }
template <class C>
Poly<C> exactQuotient(const Poly<C>& a, const Poly<C>& b) { return divExact(a, b); }

template <class T>
bool isZeroEntry(const T& x) { return x.isZero(); }

template <class T>
bool isZeroMatrix(const Mat<T>& m) {
  for (const auto& e : m.entries())
    if (!e.isZero()) return false;
  return true;
}

template <class T>
Mat<T> transpose(const Mat<T>& m) {
  std::vector<T> e;
  e.reserve(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) e.push_back(m(i, j));
  return Mat<T>(m.cols(), m.rows(), std::move(e));
}

template <class T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows() || a.cols() == 0) throw std::invalid_argument("Mat: product shape mismatch");
  std::vector<T> e;
  e.reserve(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T acc = a(i, 0) * b(0, j);
      for (std::size_t k = 1; k < a.cols(); ++k)
        if (!a(i, k).isZero() && !b(k, j).isZero()) acc += a(i, k) * b(k, j);
      e.push_back(std::move(acc));
    }
  }
  return Mat<T>(a.rows(), b.cols(), std::move(e));
}

template <class T>
Mat<T> operator+(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("Mat: sum shape mismatch");
  std::vector<T> e = a.entries();
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += b.entries()[k];
  return Mat<T>(a.rows(), a.cols(), std::move(e));
}

template <class T>
Mat<T> operator-(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("Mat: difference shape mismatch");
  std::vector<T> e = a.entries();
  for (std::size_t k = 0; k < e.size(); ++k) e[k] -= b.entries()[k];
  return Mat<T>(a.rows(), a.cols(), std::move(e));
}

template <class T, class S>
Mat<T> scale(const S& s, const Mat<T>& m) {
  std::vector<T> e;
  e.reserve(m.entries().size());
  for (const auto& x : m.entries()) e.push_back(s * x);
  return Mat<T>(m.rows(), m.cols(), std::move(e));
}

template <class T>
Mat<T> commutator(const Mat<T>& a, const Mat<T>& b) { return a * b - b * a; }

inline MatQ identityQ(std::size_t n) {
  MatQ m(n, n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
  return m;
}

inline Rat trace(const MatQ& m) {
  Rat t;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

inline MatPolyQ liftToPoly(const MatQ& m, std::size_t arity) {
  std::vector<PolyQ> e;
  e.reserve(m.entries().size());
  for (const auto& x : m.entries()) e.push_back(constantQ(arity, x));
  return MatPolyQ(m.rows(), m.cols(), std::move(e));
}

inline MatQ evaluate(const MatPolyQ& m, std::span<const Rat> point) {
  std::vector<Rat> e;
  e.reserve(m.entries().size());
  for (const auto& p : m.entries()) e.push_back(polyEval(p, point));
  return MatQ(m.rows(), m.cols(), std::move(e));
}

inline Mat<PolyFp> fpReduce(const MatPolyQ& m, std::uint64_t prime) {
  std::vector<PolyFp> e;
  e.reserve(m.entries().size());
  for (const auto& p : m.entries()) e.push_back(fpReduce(p, prime));
  return Mat<PolyFp>(m.rows(), m.cols(), std::move(e));
}

inline Mat<FpScalar> evaluate(const Mat<PolyFp>& m, std::span<const FpScalar> point, std::uint64_t prime) {
  std::vector<FpScalar> e;
  e.reserve(m.entries().size());
  for (const auto& p : m.entries()) e.push_back(evaluateFp(p, point, prime));
  return Mat<FpScalar>(m.rows(), m.cols(), std::move(e));
}

// ---------------------------------------------------------------------------
// fraction-free elimination

struct RankResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivotColumns;
};

namespace detail {

// One Bareiss sweep. Pivot: first column with a nonzero entry at or below the
// current row, smallest such row. Returns the eliminated matrix, pivots and
// the number of row swaps performed.
template <class T>
struct BareissState {
  Mat<T> m;
  RankResult rank;
  std::size_t swaps = 0;
};

template <class T>
BareissState<T> bareiss(Mat<T> a) {
  BareissState<T> st;
  std::optional<T> prev;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).isZero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      a.swapRows(piv, r);
      ++st.swaps;
    }
    const T pivot = a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const T lead = a(i, c);
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        T v = pivot * a(i, j);
        if (!lead.isZero() && !a(r, j).isZero()) v -= lead * a(r, j);
        a(i, j) = prev ? exactQuotient(v, *prev) : std::move(v);
      }
      a(i, c) = lead - lead;
    }
    prev = pivot;
    st.rank.pivotColumns.push_back(c);
    ++r;
  }
  st.rank.rank = r;
  st.m = std::move(a);
  return st;
}

}  // namespace detail

/// Rank over the fraction field of the entry domain.
template <class T>
RankResult bareissRank(const Mat<T>& m) {
  return detail::bareiss(m).rank;
}

/// Fraction-free determinant; `zero` is returned for singular input.
template <class T>
T bareissDet(const Mat<T>& m, const T& zero) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) throw std::invalid_argument("determinant of an empty matrix");
  auto st = detail::bareiss(m);
  if (st.rank.rank < m.rows()) return zero;
  T d = st.m(m.rows() - 1, m.cols() - 1);
  return (st.swaps % 2) ? -d : d;
}

inline PolyQ symDet(const MatPolyQ& m) {
  if (m.rows() == 0) throw std::invalid_argument("determinant of an empty matrix");
  return bareissDet(m, PolyQ(m(0, 0).arity()));
}

inline Rat determinant(const MatQ& m) { return bareissDet(m, Rat(0)); }

// ---------------------------------------------------------------------------
// kernels over fields

namespace detail {

template <class T>
struct Rref {
  Mat<T> m;
  std::vector<std::size_t> pivots;
};

template <class T>
Rref<T> rref(Mat<T> a, const T& zero) {
  Rref<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).isZero()) ++piv;
    if (piv == a.rows()) continue;
    a.swapRows(piv, r);
    const T inv = exactQuotient(a(r, c) / a(r, c), a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).isZero()) continue;
      const T f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).isZero()) a(i, j) -= f * a(r, j);
      a(i, c) = zero;
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(a);
  return out;
}

template <class T>
std::vector<std::vector<T>> kernelWith(const Mat<T>& m, const T& zero, const T& one) {
  auto rr = rref(m, zero);
  std::vector<bool> isPivot(m.cols(), false);
  for (auto c : rr.pivots) isPivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (isPivot[f]) continue;
    std::vector<T> v(m.cols(), zero);
    v[f] = one;
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Basis of the right null space.
inline std::vector<std::vector<Rat>> kernelBasis(const MatQ& m) {
  return detail::kernelWith(m, Rat(0), Rat(1));
}

inline std::vector<std::vector<FpScalar>> kernelBasis(const Mat<FpScalar>& m, std::uint64_t prime) {
  return detail::kernelWith(m, FpScalar(0, prime), FpScalar(1, prime));
}

/// Solves A x = b over Q; nullopt when b is outside the column span.
/// Free variables are set to zero.
inline std::optional<std::vector<Rat>> solve(const MatQ& a, std::span<const Rat> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length");
  std::vector<Rat> e;
  e.reserve(a.rows() * (a.cols() + 1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) e.push_back(a(i, j));
    e.push_back(b[i]);
  }
  auto rr = detail::rref(MatQ(a.rows(), a.cols() + 1, std::move(e)), Rat(0));
  if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rat> x(a.cols(), Rat(0));
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) x[rr.pivots[k]] = rr.m(k, a.cols());
  return x;
}

template <class T>
std::vector<T> apply(const Mat<T>& m, std::span<const T> v) {
  if (v.size() != m.cols() || m.cols() == 0) throw std::invalid_argument("apply: vector length");
  std::vector<T> out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    T acc = m(i, 0) * v[0];
    for (std::size_t j = 1; j < m.cols(); ++j)
      if (!m(i, j).isZero()) acc += m(i, j) * v[j];
    out.push_back(std::move(acc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// probabilistic generic-rank certification

struct RankCertificate {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t claimedMaxRank = 0;
  std::size_t trials = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::uint64_t totalDegreeBound = 0;
  std::vector<std::size_t> observedRanks;
  /// Upper bound on log2 of the probability that a matrix of generic rank
  /// above the claim produced every observation: trials*(ceil log2 D - floor log2 p).
  Rat errorBoundLog2;
};

struct ClaimRefuted : std::runtime_error {
  ClaimRefuted(std::size_t trial, std::size_t rank, std::vector<std::uint64_t> pt, std::uint64_t p)
      : std::runtime_error("rank claim refuted: observed rank " + std::to_string(rank) + " at trial " +
                           std::to_string(trial)),
        trialIndex(trial),
        observedRank(rank),
        point(std::move(pt)),
        prime(p) {}
  std::size_t trialIndex;
  std::size_t observedRank;
  std::vector<std::uint64_t> point;
  std::uint64_t prime;
};

namespace detail {

inline unsigned floorLog2(std::uint64_t x) {
  unsigned r = 0;
  while (x >>= 1) ++r;
  return r;
}

inline unsigned ceilLog2(std::uint64_t x) {
  unsigned f = floorLog2(x);
  return (x & (x - 1)) ? f + 1 : f;
}

/// Uniform draw in [0, p) by rejection; independent of library distributions.
inline std::uint64_t uniformBelow(std::mt19937_64& rng, std::uint64_t p) {
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % p);
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % p;
}

/// Per-trial stream derived from (seed, trial) only.
inline std::mt19937_64 trialStream(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace detail

inline int maxEntryDegree(const MatPolyQ& m) {
  int d = 0;
  for (const auto& p : m.entries()) d = std::max(d, p.degree());
  return d;
}

/// Specializes every variable to independent uniform values mod `prime` and
/// checks the rank each time. Throws ClaimRefuted on the first rank above the
/// claim.
inline RankCertificate pitRankCertify(const MatPolyQ& m, std::size_t claimedMaxRank, std::size_t trials,
                                      std::uint64_t prime, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("pitRankCertify: trials must be >= 1");
  if (claimedMaxRank >= std::min(m.rows(), m.cols()))
    throw std::invalid_argument("pitRankCertify: claim must be below min(rows, cols)");
  if (!isPrime64(prime) || prime >= (1ULL << 63)) throw std::invalid_argument("pitRankCertify: modulus is not a usable prime");

  const auto reduced = fpReduce(m, prime);
  const std::size_t arity = m.rows() && m.cols() ? m(0, 0).arity() : 0;

  RankCertificate cert;
  cert.rows = m.rows();
  cert.cols = m.cols();
  cert.claimedMaxRank = claimedMaxRank;
  cert.trials = trials;
  cert.prime = prime;
  cert.seed = seed;
  cert.totalDegreeBound = static_cast<std::uint64_t>(claimedMaxRank + 1) *
                          static_cast<std::uint64_t>(std::max(1, maxEntryDegree(m)));

  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = detail::trialStream(seed, t);
    std::vector<FpScalar> point;
    point.reserve(arity);
    for (std::size_t v = 0; v < arity; ++v) point.emplace_back(detail::uniformBelow(rng, prime), prime);
    const std::size_t r = bareissRank(evaluate(reduced, point, prime)).rank;
    cert.observedRanks.push_back(r);
    if (r > claimedMaxRank) {
      std::vector<std::uint64_t> raw;
      for (const auto& x : point) raw.push_back(x.value());
      throw ClaimRefuted(t, r, std::move(raw), prime);
    }
  }
  const long perTrial = static_cast<long>(detail::ceilLog2(cert.totalDegreeBound)) -
                        static_cast<long>(detail::floorLog2(prime));
  cert.errorBoundLog2 = Rat(perTrial) * Rat(static_cast<long>(trials));
  return cert;
}

}  // namespace prelie
