#pragma once
//
// Upsilon maps x -> x.m of pointed modules and the obstructions built on them:
// generic-rank certificates that no point makes Upsilon_m surjective, the
// exact kernel witness for so_{2n+1}, and the adjoint identity [m, m] = 0.
//

#include "prelie/repbuild.hpp"
#include "prelie/symlinalg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prelie {

enum class Verdict { Obstructed, NotObstructed, DimensionMismatch };

inline const char* verdictName(Verdict v) {
  switch (v) {
    case Verdict::Obstructed: return "Obstructed";
    case Verdict::NotObstructed: return "NotObstructed";
    case Verdict::DimensionMismatch: return "DimensionMismatch";
  }
  return "?";
}

struct ObstructionReport {
  LieFamily algebra;
  std::string moduleDescription;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t claimedMaxRank = 0;
  std::optional<RankCertificate> certificate;
  /// Exact witness text, e.g. "det = 0 (symbolic Bareiss)" or "cols < rows".
  std::optional<std::string> exactWitness;
  std::optional<ClaimRefuted> refutation;
  Verdict verdict = Verdict::NotObstructed;
};

struct ObstructionOptions {
  std::size_t trials = 20;
  std::uint64_t prime = kCertificationPrimes[0];
  std::uint64_t seed = 0xF01551;
  /// Demand a bijective map (very good); a shape mismatch is then reported as such.
  bool requireBijective = false;
  /// Also run fraction-free elimination over the polynomial ring.
  bool symbolic = false;
};

/// moduleDim x dim(g) matrix whose column j is actions[j] * point.
inline MatPolyQ upsilonMatrix(const PointedModuleSpec& spec) {
  if (spec.point.size() != spec.moduleDim) throw std::invalid_argument("upsilonMatrix: point length differs from module dimension");
  if (spec.actions.empty()) throw std::invalid_argument("upsilonMatrix: no actions");
  const std::size_t arity = spec.point.front().arity();
  MatPolyQ u(spec.moduleDim, spec.actions.size(), PolyQ(arity));
  for (std::size_t j = 0; j < spec.actions.size(); ++j) {
    const MatQ& a = spec.actions[j];
    for (std::size_t i = 0; i < spec.moduleDim; ++i) {
      PolyQ acc(arity);
      for (std::size_t k = 0; k < spec.moduleDim; ++k)
        if (!a(i, k).isZero()) acc += a(i, k) * spec.point[k];
      u(i, j) = std::move(acc);
    }
  }
  return u;
}

/// Decides whether Upsilon_m can be onto the module for some point m. The
/// claim is generic rank <= moduleDim - 1; an upheld claim means Obstructed.
inline ObstructionReport obstructionVerdict(const PointedModuleSpec& spec, const ObstructionOptions& opt = {}) {
  ObstructionReport rep;
  rep.algebra = spec.family;
  rep.moduleDescription = spec.description;
  rep.rows = spec.moduleDim;
  rep.cols = spec.actions.size();
  rep.claimedMaxRank = spec.moduleDim - 1;

  if (opt.requireBijective && rep.rows != rep.cols) {
    rep.verdict = Verdict::DimensionMismatch;
    return rep;
  }
  if (rep.cols < rep.rows) {
    rep.exactWitness = "dim g < dim M: the map can never be onto";
    rep.verdict = Verdict::Obstructed;
    return rep;
  }

  const MatPolyQ u = upsilonMatrix(spec);
  try {
    rep.certificate = pitRankCertify(u, rep.claimedMaxRank, opt.trials, opt.prime, opt.seed);
  } catch (const ClaimRefuted& e) {
    rep.refutation = e;
    rep.verdict = Verdict::NotObstructed;
    return rep;
  }

  if (opt.symbolic) {
    if (rep.rows == rep.cols) {
      const PolyQ det = symDet(u);
      if (!det.isZero()) {
        rep.verdict = Verdict::NotObstructed;
        rep.exactWitness = "symbolic determinant is nonzero";
        return rep;
      }
      rep.exactWitness = "symbolic determinant is the zero polynomial";
    } else {
      const auto r = bareissRank(u).rank;
      if (r > rep.claimedMaxRank) {
        rep.verdict = Verdict::NotObstructed;
        rep.exactWitness = "symbolic rank " + std::to_string(r);
        return rep;
      }
      rep.exactWitness = "symbolic rank " + std::to_string(r);
    }
  }
  rep.verdict = Verdict::Obstructed;
  return rep;
}

// ---------------------------------------------------------------------------
// so_{2n+1}

struct BNotSkew : std::invalid_argument {
  BNotSkew() : std::invalid_argument("B is not skew-symmetric") {}
};
struct BZero : std::invalid_argument {
  BZero() : std::invalid_argument("B is zero") {}
};

/// Block-pattern membership in so_{2n+1}:
///     ( A   B  -tF )
///     ( C  -tA -tE )      B, C skew.
///     ( E   F   0  )
template <class T>
bool isInSoOdd(const Mat<T>& m, std::size_t n) {
  const std::size_t s = 2 * n + 1, last = 2 * n;
  if (m.rows() != s || m.cols() != s) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(m(n + i, n + j) + m(j, i)).isZero()) return false;          // middle = -tA
      if (!(m(i, n + j) + m(j, n + i)).isZero()) return false;          // B skew
      if (!(m(n + i, j) + m(n + j, i)).isZero()) return false;          // C skew
    }
  for (std::size_t j = 0; j < n; ++j) {
    if (!(m(n + j, last) + m(last, j)).isZero()) return false;          // -tE
    if (!(m(j, last) + m(last, n + j)).isZero()) return false;          // -tF
  }
  return m(last, last).isZero();
}

struct SoOddWitness {
  MatPolyQ A;
  MatPolyQ point;  // (I_n; Y'; z'), a (2n+1) x n matrix
  bool inSoOdd = false;
  bool isZeroOnPoint = false;
};

/// Symbolic Y' (n x n) and z' (1 x n): variables y_ij then z_j, row-major.
inline std::pair<MatPolyQ, std::vector<PolyQ>> symbolicYZ(std::size_t n) {
  const std::size_t arity = n * n + n;
  MatPolyQ y(n, n, PolyQ(arity));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y(i, j) = variableQ(arity, i * n + j);
  std::vector<PolyQ> z;
  for (std::size_t j = 0; j < n; ++j) z.push_back(variableQ(arity, n * n + j));
  return {y, z};
}

/// The kernel element
///     A = (  -BY     B    0 )
///         ( tYBY  -tYB    0 )
///         (   0      0    0 )
/// and the check A . (I; Y'; z') = 0 as a polynomial identity.
inline SoOddWitness soOddWitness(std::size_t n, const MatPolyQ& yPrime, const MatQ& B,
                                 std::optional<std::vector<PolyQ>> zPrime = std::nullopt) {
  if (n < 2) throw std::invalid_argument("soOddWitness: n must be >= 2");
  if (B.rows() != n || B.cols() != n || yPrime.rows() != n || yPrime.cols() != n)
    throw std::invalid_argument("soOddWitness: block shapes");
  if (transpose(B) != scale(Rat(-1), B)) throw BNotSkew();
  if (isZeroMatrix(B)) throw BZero();

  const std::size_t arity = yPrime(0, 0).arity();
  if (!zPrime) zPrime = std::vector<PolyQ>(n, PolyQ(arity));
  if (zPrime->size() != n) throw std::invalid_argument("soOddWitness: z' length");

  const MatPolyQ b = liftToPoly(B, arity);
  const MatPolyQ yt = transpose(yPrime);
  const MatPolyQ tl = scale(Rat(-1), b * yPrime);
  const MatPolyQ ml = yt * b * yPrime;
  const MatPolyQ mm = scale(Rat(-1), yt * b);

  const std::size_t s = 2 * n + 1;
  SoOddWitness w;
  w.A = MatPolyQ(s, s, PolyQ(arity));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      w.A(i, j) = tl(i, j);
      w.A(i, n + j) = b(i, j);
      w.A(n + i, j) = ml(i, j);
      w.A(n + i, n + j) = mm(i, j);
    }
  w.point = MatPolyQ(s, n, PolyQ(arity));
  for (std::size_t j = 0; j < n; ++j) {
    w.point(j, j) = constantQ(arity, Rat(1));
    for (std::size_t i = 0; i < n; ++i) w.point(n + i, j) = yPrime(i, j);
    w.point(2 * n, j) = (*zPrime)[j];
  }
  w.inSoOdd = isInSoOdd(w.A, n);
  w.isZeroOnPoint = isZeroMatrix(w.A * w.point);
  return w;
}

// ---------------------------------------------------------------------------
// adjoint module

/// Upsilon_m(m) = [m, m] = 0: the symbolic point is a kernel vector of the
/// adjoint Upsilon matrix, so its determinant vanishes identically.
inline bool adjointNotVeryGood(const LieBasis& basis) {
  const auto consts = structureConstants(basis);
  const auto spec = adjointModule(basis.family, consts);
  const auto u = upsilonMatrix(spec);
  const auto image = apply<PolyQ>(u, spec.point);
  for (const auto& e : image)
    if (!e.isZero()) return false;
  for (const auto& p : spec.point)
    if (!p.isZero()) return true;
  return false;
}

}  // namespace prelie
