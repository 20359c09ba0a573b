#pragma once
//
// Slow, obviously-correct reference implementations used to cross-check the
// real algorithms: cofactor determinants, textbook Gaussian rank, and a
// dynamic-programming feasibility test for dimension sums.
//

#include "prelie/symlinalg.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace prelie::oracle {

/// Laplace expansion along the first row.
template <class T>
T cofactorDet(const Mat<T>& m, const T& zero) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  T acc = zero;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).isZero()) continue;
    std::vector<T> e;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) e.push_back(m(i, k));
    const T minor = cofactorDet(Mat<T>(n - 1, n - 1, std::move(e)), zero);
    if (j % 2) acc -= m(0, j) * minor;
    else acc += m(0, j) * minor;
  }
  return acc;
}

/// Row reduction with rational division and the largest-index pivot, a
/// different strategy from the fraction-free code it checks.
inline std::size_t naiveRank(MatQ m) {
  std::size_t rank = 0;
  for (std::size_t c = m.cols(); c-- > 0 && rank < m.rows();) {
    std::size_t piv = m.rows();
    for (std::size_t r = rank; r < m.rows(); ++r)
      if (!m(r, c).isZero()) piv = r;
    if (piv == m.rows()) continue;
    m.swapRows(piv, rank);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c).isZero()) continue;
      const Rat f = m(r, c) / m(rank, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

/// Is `target` a nonnegative integer combination of `dims`?
inline bool dpFeasible(std::uint64_t target, const std::vector<std::uint64_t>& dims) {
  std::vector<bool> reach(target + 1, false);
  reach[0] = true;
  for (std::uint64_t s = 1; s <= target; ++s)
    for (auto d : dims)
      if (d > 0 && d <= s && reach[s - d]) {
        reach[s] = true;
        break;
      }
  return reach[target];
}

/// Random rational matrix with small entries and a controlled chance of zeros
/// and dependent rows, so low ranks actually occur.
inline MatQ randomRationalMatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> val(-4, 4), den(1, 3), coin(0, 3);
  MatQ m(rows, cols, Rat(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (i > 0 && coin(rng) == 0) {
      // copy a combination of two earlier rows
      std::uniform_int_distribution<std::size_t> pick(0, i - 1);
      const std::size_t a = pick(rng), b = pick(rng);
      const Rat s(val(rng)), t(val(rng));
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = s * m(a, j) + t * m(b, j);
      continue;
    }
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng)) m(i, j) = Rat(mpz_class(val(rng)), mpz_class(den(rng)));
  }
  return m;
}

/// Random polynomial matrix with entries of degree <= 1 in `arity` variables.
inline MatPolyQ randomLinearPolyMatrix(std::mt19937_64& rng, std::size_t n, std::size_t arity) {
  std::uniform_int_distribution<int> val(-3, 3);
  MatPolyQ m(n, n, PolyQ(arity));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PolyQ p = constantQ(arity, Rat(val(rng)));
      for (std::size_t v = 0; v < arity; ++v) p += Rat(val(rng)) * variableQ(arity, v);
      m(i, j) = p;
    }
  return m;
}

}  // namespace prelie::oracle
