#pragma once
//
// Explicit matrix bases for sl_n, so_{2n+1} and g2, and the pointed modules
// built on them: the defining module, matrix spaces M_{d,k} acted on by left
// multiplication, the adjoint module, and the third exterior power of the
// standard sl_6 module.
//

#include "prelie/catalog.hpp"
#include "prelie/symlinalg.hpp"
#include "prelie/tables.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prelie {

struct TranscriptionInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LieBasis {
  LieFamily family;
  std::vector<MatQ> matrices;
  std::vector<std::string> labels;

  std::size_t dim() const { return matrices.size(); }
  std::size_t matrixSize() const { return matrices.empty() ? 0 : matrices.front().rows(); }
};

/// A g-module given by one action matrix per basis element, with a marked
/// point (symbolic by default: variable i is coordinate i).
struct PointedModuleSpec {
  LieFamily family;
  std::string description;
  std::size_t moduleDim = 0;
  std::vector<MatQ> actions;
  std::vector<PolyQ> point;
};

inline std::vector<PolyQ> symbolicPoint(std::size_t dim) {
  std::vector<PolyQ> p;
  p.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) p.push_back(variableQ(dim, i));
  return p;
}

inline std::vector<PolyQ> rationalPoint(std::span<const Rat> values) {
  std::vector<PolyQ> p;
  p.reserve(values.size());
  for (const auto& v : values) p.push_back(constantQ(values.size(), v));
  return p;
}

// ---------------------------------------------------------------------------
// span membership

/// Expresses vectors in the span of a fixed set of columns. Built once per
/// basis; each query costs one small matrix-vector product plus a residual
/// check.
class SpanSolver {
 public:
  explicit SpanSolver(std::vector<std::vector<Rat>> columns) : cols_(std::move(columns)) {
    if (cols_.empty()) throw std::invalid_argument("SpanSolver: no columns");
    const std::size_t n = cols_.front().size(), k = cols_.size();
    // transpose: rows = columns, pivots of the transpose pick independent coordinates
    MatQ t(k, n, Rat(0));
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t i = 0; i < n; ++i) t(c, i) = cols_[c][i];
    auto rank = bareissRank(t);
    if (rank.rank != k) throw std::invalid_argument("SpanSolver: columns are linearly dependent");
    rows_ = rank.pivotColumns;
    // invert the square submatrix on the selected coordinates
    MatQ aug(k, 2 * k, Rat(0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) aug(r, c) = cols_[c][rows_[r]];
      aug(r, k + r) = Rat(1);
    }
    auto rr = detail::rref(aug, Rat(0));
    inv_ = MatQ(k, k, Rat(0));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) inv_(r, c) = rr.m(r, k + c);
  }

  std::size_t size() const { return cols_.size(); }

  std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const {
    const std::size_t k = cols_.size();
    std::vector<Rat> x(k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        if (!inv_(r, c).isZero() && !v[rows_[c]].isZero()) x[r] += inv_(r, c) * v[rows_[c]];
    std::vector<Rat> back(v.size());
    for (std::size_t c = 0; c < k; ++c) {
      if (x[c].isZero()) continue;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!cols_[c][i].isZero()) back[i] += x[c] * cols_[c][i];
    }
    if (back != v) return std::nullopt;
    return x;
  }

 private:
  std::vector<std::vector<Rat>> cols_;
  std::vector<std::size_t> rows_;
  MatQ inv_;
};

inline std::vector<Rat> flatten(const MatQ& m) { return m.entries(); }

inline SpanSolver basisSolver(const LieBasis& b) {
  std::vector<std::vector<Rat>> cols;
  for (const auto& m : b.matrices) cols.push_back(flatten(m));
  return SpanSolver(std::move(cols));
}

// ---------------------------------------------------------------------------
// invariants

struct LieBasisReport {
  bool independent = false;
  bool closed = false;
  bool traceless = false;
  bool dimensionMatches = false;
  bool ok() const { return independent && closed && traceless && dimensionMatches; }
};

inline LieBasisReport checkLieBasis(const LieBasis& b) {
  LieBasisReport rep;
  rep.dimensionMatches = b.dim() == b.family.dimension();
  rep.traceless = std::all_of(b.matrices.begin(), b.matrices.end(), [](const MatQ& m) { return trace(m).isZero(); });
  std::optional<SpanSolver> solver;
  try {
    solver.emplace(basisSolver(b));
    rep.independent = true;
  } catch (const std::invalid_argument&) {
    return rep;
  }
  rep.closed = true;
  for (std::size_t i = 0; i < b.dim() && rep.closed; ++i)
    for (std::size_t j = i + 1; j < b.dim() && rep.closed; ++j)
      if (!solver->coordinates(flatten(commutator(b.matrices[i], b.matrices[j])))) rep.closed = false;
  return rep;
}

/// Structure constants in the given basis; throws when the span is not closed.
inline StructConsts structureConstants(const LieBasis& b) {
  const auto solver = basisSolver(b);
  StructConsts c(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      auto x = solver.coordinates(flatten(commutator(b.matrices[i], b.matrices[j])));
      if (!x) throw std::invalid_argument("structureConstants: bracket leaves the span");
      for (std::size_t k = 0; k < b.dim(); ++k) {
        c(i, j, k) = (*x)[k];
        c(j, i, k) = -(*x)[k];
      }
    }
  return c;
}

// ---------------------------------------------------------------------------
// bases

namespace detail {

inline MatQ unit(std::size_t n, std::size_t i, std::size_t j, const Rat& v = Rat(1)) {
  MatQ m(n, n, Rat(0));
  m(i, j) = v;
  return m;
}

inline MatQ fromRows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  MatQ m(n, n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw TranscriptionInvalid("g2 generator row " + std::to_string(i + 1) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(rows[i][j]);
  }
  return m;
}

}  // namespace detail

/// Cartan elements E_ii - E_{i+1,i+1}, then E_ij, E_ji for i < j, in that order.
inline LieBasis basisSL(int n) {
  LieBasis b{LieFamily::sl(n), {}, {}};
  const auto N = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + 1 < N; ++i) {
    MatQ h(N, N, Rat(0));
    h(i, i) = Rat(1);
    h(i + 1, i + 1) = Rat(-1);
    b.matrices.push_back(std::move(h));
    b.labels.push_back("H" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i + 1 < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      b.matrices.push_back(detail::unit(N, i, j));
      b.labels.push_back("E" + std::to_string(i + 1) + "," + std::to_string(j + 1));
      b.matrices.push_back(detail::unit(N, j, i));
      b.labels.push_back("E" + std::to_string(j + 1) + "," + std::to_string(i + 1));
    }
  return b;
}

/// so_{2n+1} in the block form
///     ( A   B  -tF )
///     ( C  -tA -tE )      B, C skew, E and F rows of length n.
///     ( E   F   0  )
/// Basis order: the n^2 elementary A, then skew B, skew C, then E, then F.
inline LieBasis basisSOOdd(int n) {
  LieBasis b{LieFamily::soOdd(n), {}, {}};
  const auto N = static_cast<std::size_t>(n);
  const std::size_t size = 2 * N + 1, last = 2 * N;
  auto lbl = [](const char* block, std::size_t i, std::size_t j) {
    return std::string(block) + std::to_string(i + 1) + "," + std::to_string(j + 1);
  };
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      MatQ m(size, size, Rat(0));
      m(i, j) = Rat(1);
      m(N + j, N + i) = Rat(-1);
      b.matrices.push_back(std::move(m));
      b.labels.push_back(lbl("A", i, j));
    }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      MatQ m(size, size, Rat(0));
      m(i, N + j) = Rat(1);
      m(j, N + i) = Rat(-1);
      b.matrices.push_back(std::move(m));
      b.labels.push_back(lbl("B", i, j));
    }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      MatQ m(size, size, Rat(0));
      m(N + i, j) = Rat(1);
      m(N + j, i) = Rat(-1);
      b.matrices.push_back(std::move(m));
      b.labels.push_back(lbl("C", i, j));
    }
  for (std::size_t j = 0; j < N; ++j) {
    MatQ m(size, size, Rat(0));
    m(last, j) = Rat(1);
    m(N + j, last) = Rat(-1);
    b.matrices.push_back(std::move(m));
    b.labels.push_back("E" + std::to_string(j + 1));
  }
  for (std::size_t j = 0; j < N; ++j) {
    MatQ m(size, size, Rat(0));
    m(last, N + j) = Rat(1);
    m(j, last) = Rat(-1);
    b.matrices.push_back(std::move(m));
    b.labels.push_back("F" + std::to_string(j + 1));
  }
  return b;
}

/// How to read the two g2 generator recipes whose printed form is ambiguous.
enum class G2Reading {
  /// X6 = -[X2, X5], Y6 = [Y2, Y5]; X1 row 6 is (0,0,0,0,0,0,-1).
  Commutator,
  /// X6 = -X2*X5 - X5*X2 taken literally as printed.
  Anticommutator,
};

/// Fourteen 7x7 generators H1, H2, X1..X6, Y1..Y6. Throws
/// TranscriptionInvalid when the chosen reading does not give a Lie algebra
/// of dimension 14.
inline LieBasis basisG2(G2Reading reading = G2Reading::Commutator) {
  using detail::fromRows;
  const MatQ H1 = fromRows({{1, 0, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0, 0}, {0, 0, 2, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, -2, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, -1}});
  const MatQ H2 = fromRows({{0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, 0, 0}});
  const MatQ Y1 = fromRows({{0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0},
                            {0, 0, 0, 2, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -1, 0}});
  const MatQ Y2 = fromRows({{0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 0}});
  const MatQ X1 = fromRows({{0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 2, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 0, 0, 0}});
  const MatQ X2 = fromRows({{0, 0, 0, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}});

  const Rat half(1, 2), third(1, 3);
  const MatQ Y3 = Y2 * Y1 - Y1 * Y2;
  const MatQ Y4 = scale(-half, commutator(Y1, Y3));
  const MatQ Y5 = scale(third, commutator(Y1, Y4));
  const MatQ Y6 = commutator(Y2, Y5);
  const MatQ X3 = commutator(X1, X2);
  const MatQ X4 = scale(half, commutator(X1, X3));
  const MatQ X5 = scale(-third, commutator(X1, X4));
  const MatQ X6 = reading == G2Reading::Commutator ? scale(Rat(-1), commutator(X2, X5))
                                                   : scale(Rat(-1), X2 * X5) - X5 * X2;

  LieBasis b{LieFamily::g2(),
             {H1, H2, X1, X2, X3, X4, X5, X6, Y1, Y2, Y3, Y4, Y5, Y6},
             {"H1", "H2", "X1", "X2", "X3", "X4", "X5", "X6", "Y1", "Y2", "Y3", "Y4", "Y5", "Y6"}};
  const auto rep = checkLieBasis(b);
  if (!rep.ok())
    throw TranscriptionInvalid(std::string("g2 generators fail:") + (rep.independent ? "" : " independence") +
                               (rep.closed ? "" : " closure") + (rep.traceless ? "" : " tracelessness") +
                               (rep.dimensionMatches ? "" : " dimension"));
  return b;
}

inline LieBasis basisFor(const LieFamily& f) {
  switch (f.tag) {
    case FamilyTag::SL: return basisSL(f.n);
    case FamilyTag::SOOdd: return basisSOOdd(f.n);
    case FamilyTag::G2: return basisG2();
    default: throw std::invalid_argument("no matrix basis for " + f.name());
  }
}

// ---------------------------------------------------------------------------
// third exterior power of the sl_6 standard module

using Triple = std::array<int, 3>;

/// The 20 increasing triples of {1..6} in lexicographic order.
inline const std::vector<Triple>& wedge3Basis() {
  static const std::vector<Triple> basis = [] {
    std::vector<Triple> b;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        for (int k = j + 1; k <= 6; ++k) b.push_back({i, j, k});
    return b;
  }();
  return basis;
}

inline std::size_t wedge3Index(const Triple& t) {
  const auto& b = wedge3Basis();
  auto it = std::find(b.begin(), b.end(), t);
  if (it == b.end()) throw std::out_of_range("not an increasing triple");
  return static_cast<std::size_t>(it - b.begin());
}

/// Sorts a triple of distinct indices; returns the sign of the sorting permutation.
inline int sortTriple(Triple& t) {
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (int p = 0; p < 2; ++p)
      if (t[p] > t[p + 1]) {
        std::swap(t[p], t[p + 1]);
        sign = -sign;
      }
  return sign;
}

/// Derivation action of a 6x6 matrix X on the third exterior power:
/// X(e_i^e_j^e_k) = Xe_i^e_j^e_k + e_i^Xe_j^e_k + e_i^e_j^Xe_k.
inline MatQ wedge3ActionSL6(const MatQ& X) {
  if (X.rows() != 6 || X.cols() != 6) throw std::invalid_argument("wedge3ActionSL6 expects a 6x6 matrix");
  const auto& basis = wedge3Basis();
  MatQ out(20, 20, Rat(0));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Triple& b = basis[col];
    for (int slot = 0; slot < 3; ++slot)
      for (int n = 1; n <= 6; ++n) {
        const Rat& coef = X(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(b[slot] - 1));
        if (coef.isZero()) continue;
        Triple t = b;
        t[slot] = n;
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
        const int sign = sortTriple(t);
        out(wedge3Index(t), col) += sign > 0 ? coef : -coef;
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// modules

/// M_{d,copies}: d x copies matrices, flattened column-major, with X acting by
/// left multiplication (block diagonal on the flattened vector).
inline PointedModuleSpec matrixModule(const LieBasis& b, std::size_t copies) {
  if (copies < 1) throw std::invalid_argument("matrixModule: copies must be >= 1");
  const std::size_t d = b.matrixSize();
  PointedModuleSpec s;
  s.family = b.family;
  s.description = "M_{" + std::to_string(d) + "," + std::to_string(copies) + "} (left multiplication)";
  s.moduleDim = d * copies;
  for (const auto& X : b.matrices) {
    MatQ a(s.moduleDim, s.moduleDim, Rat(0));
    for (std::size_t c = 0; c < copies; ++c)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a(c * d + i, c * d + j) = X(i, j);
    s.actions.push_back(std::move(a));
  }
  s.point = symbolicPoint(s.moduleDim);
  return s;
}

inline PointedModuleSpec wedge3ModuleSL6() {
  const auto b = basisSL(6);
  PointedModuleSpec s;
  s.family = b.family;
  s.description = "Lambda^3 of the standard sl_6 module";
  s.moduleDim = 20;
  for (const auto& X : b.matrices) s.actions.push_back(wedge3ActionSL6(X));
  s.point = symbolicPoint(20);
  return s;
}

/// (g, ad): column j of ad(x_i) holds the coordinates of [x_i, x_j].
inline PointedModuleSpec adjointModule(const LieFamily& family, const StructConsts& c) {
  PointedModuleSpec s;
  s.family = family;
  s.description = "adjoint module";
  s.moduleDim = c.dim();
  for (std::size_t i = 0; i < c.dim(); ++i) {
    MatQ a(c.dim(), c.dim(), Rat(0));
    for (std::size_t j = 0; j < c.dim(); ++j)
      for (std::size_t k = 0; k < c.dim(); ++k) a(k, j) = c(i, j, k);
    s.actions.push_back(std::move(a));
  }
  s.point = symbolicPoint(s.moduleDim);
  return s;
}

/// act(x_i) act(x_j) - act(x_j) act(x_i) = sum_k c(i,j,k) act(x_k) for all pairs.
inline bool isRepresentation(const PointedModuleSpec& s, const StructConsts& c) {
  if (s.actions.size() != c.dim()) return false;
  const MatQ zero(s.moduleDim, s.moduleDim, Rat(0));
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = i + 1; j < c.dim(); ++j) {
      MatQ rhs = zero;
      for (std::size_t k = 0; k < c.dim(); ++k)
        if (!c(i, j, k).isZero()) rhs = rhs + scale(c(i, j, k), s.actions[k]);
      if (commutator(s.actions[i], s.actions[j]) != rhs) return false;
    }
  return true;
}

}  // namespace prelie
