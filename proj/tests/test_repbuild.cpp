#include "prelie/repbuild.hpp"
#include "prelie/verygood.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace prelie;

namespace {

/// Parity of a permutation by counting inversions.
int inversionSign(const Triple& t) {
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) inv += t[static_cast<std::size_t>(i)] > t[static_cast<std::size_t>(j)];
  return inv % 2 ? -1 : 1;
}

MatQ randomCombination(const LieBasis& b, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(-3, 3);
  MatQ m(b.matrixSize(), b.matrixSize(), Rat(0));
  for (const auto& x : b.matrices) m = m + scale(Rat(v(rng)), x);
  return m;
}

}  // namespace

TEST(Bases, DimensionsAndValidation) {
  for (int n = 2; n <= 6; ++n) {
    const auto b = basisSL(n);
    EXPECT_EQ(b.dim(), static_cast<std::size_t>(n * n - 1));
    EXPECT_TRUE(checkLieBasis(b).ok()) << "sl_" << n;
  }
  for (int n = 2; n <= 4; ++n) {
    const auto b = basisSOOdd(n);
    EXPECT_EQ(b.dim(), static_cast<std::size_t>(n * (2 * n + 1)));
    EXPECT_EQ(b.matrixSize(), static_cast<std::size_t>(2 * n + 1));
    EXPECT_TRUE(checkLieBasis(b).ok()) << "so_" << 2 * n + 1;
  }
  const auto g = basisG2();
  EXPECT_EQ(g.dim(), 14u);
  EXPECT_EQ(g.matrixSize(), 7u);
  EXPECT_TRUE(checkLieBasis(g).ok());
}

TEST(Bases, Sl2Labels) {
  const auto b = basisSL(2);
  EXPECT_EQ(b.labels, (std::vector<std::string>{"H1", "E1,2", "E2,1"}));
}

TEST(Bases, StructureConstantsAreALieAlgebra) {
  for (const auto& b : {basisSL(3), basisSOOdd(2), basisG2()}) {
    const auto c = structureConstants(b);
    EXPECT_TRUE(c.isAntisymmetric());
    EXPECT_TRUE(c.satisfiesJacobi());
  }
}

TEST(Bases, StructureConstantsReproduceCommutators) {
  const auto b = basisG2();
  const auto c = structureConstants(b);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      MatQ sum(7, 7, Rat(0));
      for (std::size_t k = 0; k < b.dim(); ++k) sum = sum + scale(c(i, j, k), b.matrices[k]);
      EXPECT_EQ(sum, commutator(b.matrices[i], b.matrices[j])) << i << "," << j;
    }
}

TEST(G2, CommutatorReadingOfSixthRootVectors) {
  const auto b = basisG2();
  auto at = [&](const std::string& l) {
    return b.matrices[static_cast<std::size_t>(std::find(b.labels.begin(), b.labels.end(), l) - b.labels.begin())];
  };
  EXPECT_EQ(commutator(at("X1"), at("Y1")), at("H1"));
  EXPECT_EQ(at("X6"), scale(Rat(-1), commutator(at("X2"), at("X5"))));
  EXPECT_EQ(at("Y6"), commutator(at("Y2"), at("Y5")));
}

TEST(G2, LiteralAnticommutatorReadingIsNotALieAlgebra) {
  EXPECT_THROW(basisG2(G2Reading::Anticommutator), TranscriptionInvalid);
}

TEST(SoOdd, BasisMembersPreserveTheQuadraticForm) {
  // t(M) Q + Q M = 0 with Q = [[0, I, 0], [I, 0, 0], [0, 0, 1]]
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 4; ++n) {
    const auto N = static_cast<std::size_t>(n);
    MatQ Q(2 * N + 1, 2 * N + 1, Rat(0));
    for (std::size_t i = 0; i < N; ++i) {
      Q(i, N + i) = Rat(1);
      Q(N + i, i) = Rat(1);
    }
    Q(2 * N, 2 * N) = Rat(1);
    const auto b = basisSOOdd(n);
    for (const auto& m : b.matrices) {
      EXPECT_TRUE(isZeroMatrix(transpose(m) * Q + Q * m));
      EXPECT_TRUE(isInSoOdd(m, N));
    }
    const auto x = randomCombination(b, rng);
    EXPECT_TRUE(isInSoOdd(x, N));
    EXPECT_TRUE(isZeroMatrix(transpose(x) * Q + Q * x));
    MatQ bad = x;
    bad(0, 0) += Rat(1);
    EXPECT_FALSE(isInSoOdd(bad, N));
    EXPECT_FALSE(isZeroMatrix(transpose(bad) * Q + Q * bad));
  }
}

TEST(Wedge3, BasisAndSortSigns) {
  const auto& basis = wedge3Basis();
  EXPECT_EQ(basis.size(), 20u);
  for (std::size_t i = 0; i < basis.size(); ++i) EXPECT_EQ(wedge3Index(basis[i]), i);
  Triple t{2, 4, 5};
  do {
    Triple s = t;
    EXPECT_EQ(sortTriple(s), inversionSign(t));
    EXPECT_EQ(s, (Triple{2, 4, 5}));
  } while (std::next_permutation(t.begin(), t.end()));
}

TEST(Wedge3, ActionExamples) {
  const auto e123 = wedge3Index({1, 2, 3}), e234 = wedge3Index({2, 3, 4});
  // H1 = E11 - E22 has weight 1 - 1 + 0 on e1^e2^e3
  MatQ h1(6, 6, Rat(0));
  h1(0, 0) = Rat(1);
  h1(1, 1) = Rat(-1);
  const auto a = wedge3ActionSL6(h1);
  for (std::size_t i = 0; i < 20; ++i) EXPECT_TRUE(a(i, e123).isZero());
  // E41 sends e1^e2^e3 to e4^e2^e3 = +e2^e3^e4
  MatQ e41(6, 6, Rat(0));
  e41(3, 0) = Rat(1);
  const auto b = wedge3ActionSL6(e41);
  for (std::size_t i = 0; i < 20; ++i) EXPECT_EQ(b(i, e123), i == e234 ? Rat(1) : Rat(0));
}

TEST(Modules, ShapesAndRepresentationProperty) {
  const auto g2 = basisG2();
  const auto m = matrixModule(g2, 2);
  EXPECT_EQ(m.moduleDim, 14u);
  EXPECT_EQ(m.actions.size(), 14u);
  EXPECT_TRUE(isRepresentation(m, structureConstants(g2)));

  const auto so5 = basisSOOdd(2);
  const auto ms = matrixModule(so5, 2);
  EXPECT_EQ(ms.moduleDim, 10u);
  EXPECT_TRUE(isRepresentation(ms, structureConstants(so5)));

  const auto w = wedge3ModuleSL6();
  EXPECT_EQ(w.moduleDim, 20u);
  EXPECT_EQ(w.actions.size(), 35u);
  EXPECT_TRUE(isRepresentation(w, structureConstants(basisSL(6))));

  const auto sl3 = basisSL(3);
  const auto c = structureConstants(sl3);
  EXPECT_TRUE(isRepresentation(adjointModule(sl3.family, c), c));
}

TEST(Modules, BrokenActionIsNotARepresentation) {
  const auto so5 = basisSOOdd(2);
  auto m = matrixModule(so5, 1);
  m.actions[0] = scale(Rat(2), m.actions[0]);
  EXPECT_FALSE(isRepresentation(m, structureConstants(so5)));
}

TEST(Modules, ZeroMatrixActsByZero) {
  LieBasis b{LieFamily::sl(2), {MatQ(2, 2, Rat(0))}, {"0"}};
  const auto m = matrixModule(b, 3);
  EXPECT_TRUE(isZeroMatrix(m.actions[0]));
}
