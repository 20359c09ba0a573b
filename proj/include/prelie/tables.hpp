#pragma once
//
// Cubic coefficient tables: Lie structure constants and prelie products.
//

#include "prelie/exactmath.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace prelie {

namespace detail {

class CubicTable {
 public:
  CubicTable() = default;
  explicit CubicTable(std::size_t dim) : dim_(dim), t_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  Rat& operator()(std::size_t i, std::size_t j, std::size_t k) { return t_[(i * dim_ + j) * dim_ + k]; }
  const Rat& operator()(std::size_t i, std::size_t j, std::size_t k) const { return t_[(i * dim_ + j) * dim_ + k]; }

  /// Coefficient vector of the product of basis elements i and j.
  std::vector<Rat> product(std::size_t i, std::size_t j) const {
    return {t_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_),
            t_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j + 1) * dim_)};
  }

  /// Bilinear product of two coefficient vectors.
  std::vector<Rat> product(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    std::vector<Rat> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].isZero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (b[j].isZero()) continue;
        const Rat ab = a[i] * b[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!(*this)(i, j, k).isZero()) out[k] += ab * (*this)(i, j, k);
      }
    }
    return out;
  }

  friend bool operator==(const CubicTable&, const CubicTable&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rat> t_;
};

}  // namespace detail

/// c(i,j,k) is the coefficient of x_k in [x_i, x_j].
struct StructConsts : detail::CubicTable {
  using CubicTable::CubicTable;

  bool isAntisymmetric() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k)
          if ((*this)(i, j, k) != -(*this)(j, i, k)) return false;
    return true;
  }

  bool satisfiesJacobi() const {
    const std::size_t d = dim();
    auto basis = [d](std::size_t i) {
      std::vector<Rat> v(d);
      v[i] = Rat(1);
      return v;
    };
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          auto a = product(basis(i), product(j, k));
          auto b = product(basis(j), product(k, i));
          auto c = product(basis(k), product(i, j));
          for (std::size_t m = 0; m < d; ++m)
            if (!(a[m] + b[m] + c[m]).isZero()) return false;
        }
    return true;
  }
};

/// t(i,j,k) is the coefficient of x_k in x_i * x_j.
struct PreLieTable : detail::CubicTable {
  using CubicTable::CubicTable;
};

inline StructConsts abelianConsts(std::size_t dim) { return StructConsts(dim); }

/// Bracket induced by a product: [x,y] = x*y - y*x.
inline StructConsts inducedBracket(const PreLieTable& t) {
  StructConsts c(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      for (std::size_t k = 0; k < t.dim(); ++k) c(i, j, k) = t(i, j, k) - t(j, i, k);
  return c;
}

}  // namespace prelie
