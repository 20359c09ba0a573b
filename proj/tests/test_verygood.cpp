#include "prelie/json_io.hpp"
#include "prelie/verygood.hpp"

#include <gtest/gtest.h>

using namespace prelie;

namespace {

MatQ skewB(std::size_t n) {
  MatQ B(n, n, Rat(0));
  B(0, 1) = Rat(1);
  B(1, 0) = Rat(-1);
  return B;
}

/// gl_2 elements E11 and E21 acting on Q^2: at m = (m1, m2) the map is
/// (m1, 0), (0, m1) -- onto whenever m1 != 0.
PointedModuleSpec veryGoodToy() {
  MatQ e11(2, 2, Rat(0)), e21(2, 2, Rat(0));
  e11(0, 0) = Rat(1);
  e21(1, 0) = Rat(1);
  return {LieFamily::sl(2), "toy", 2, {e11, e21}, symbolicPoint(2)};
}

}  // namespace

TEST(Upsilon, ColumnsAreActionsOnThePoint) {
  const auto u = upsilonMatrix(veryGoodToy());
  EXPECT_EQ(u(0, 0), variableQ(2, 0));
  EXPECT_TRUE(u(1, 0).isZero());
  EXPECT_TRUE(u(0, 1).isZero());
  EXPECT_EQ(u(1, 1), variableQ(2, 0));
}

TEST(Upsilon, AdjointSl2DeterminantVanishes) {
  const auto b = basisSL(2);
  const auto u = upsilonMatrix(adjointModule(b.family, structureConstants(b)));
  EXPECT_EQ(u.rows(), 3u);
  EXPECT_TRUE(symDet(u).isZero());
  // at the rational point m = (1, 0, 0), i.e. m = H1, the kernel is nonempty
  const std::vector<Rat> h{Rat(1), Rat(0), Rat(0)};
  EXPECT_FALSE(kernelBasis(evaluate(u, h)).empty());
}

TEST(Upsilon, ZeroPointGivesZeroMatrix) {
  auto spec = matrixModule(basisG2(), 2);
  spec.point = std::vector<PolyQ>(14, PolyQ(14));
  EXPECT_TRUE(isZeroMatrix(upsilonMatrix(spec)));
}

TEST(Obstruction, Sl6OntoLambda3) {
  const auto r = obstructionVerdict(wedge3ModuleSL6());
  EXPECT_EQ(r.verdict, Verdict::Obstructed);
  EXPECT_EQ(r.rows, 20u);
  EXPECT_EQ(r.cols, 35u);
  EXPECT_EQ(r.claimedMaxRank, 19u);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->trials, 20u);
  for (auto k : r.certificate->observedRanks) EXPECT_EQ(k, 19u);
  EXPECT_LE(r.certificate->errorBoundLog2, Rat(-300));
}

TEST(Obstruction, G2OnTwoCopies) {
  const auto r = obstructionVerdict(matrixModule(basisG2(), 2));
  EXPECT_EQ(r.verdict, Verdict::Obstructed);
  ASSERT_TRUE(r.certificate);
  // the generic stabilizer of a pair of vectors in the 7-dimensional module is 3-dimensional
  for (auto k : r.certificate->observedRanks) EXPECT_EQ(k, 11u);
}

TEST(Obstruction, BijectivityDemandOnMismatchedDimensions) {
  ObstructionOptions opt;
  opt.requireBijective = true;
  const auto r = obstructionVerdict(matrixModule(basisSL(2), 1), opt);
  EXPECT_EQ(r.verdict, Verdict::DimensionMismatch);
  EXPECT_FALSE(r.certificate);
}

TEST(Obstruction, SmallAlgebraCannotBeOntoLargeModule) {
  // sl_2 (dim 3) on Q^2 x Q^2 (dim 4)
  const auto r = obstructionVerdict(matrixModule(basisSL(2), 2));
  EXPECT_EQ(r.verdict, Verdict::Obstructed);
  EXPECT_TRUE(r.exactWitness);
  EXPECT_FALSE(r.certificate);
}

TEST(Obstruction, VeryGoodModuleIsNotObstructed) {
  const auto r = obstructionVerdict(veryGoodToy());
  EXPECT_EQ(r.verdict, Verdict::NotObstructed);
  ASSERT_TRUE(r.refutation);
  EXPECT_EQ(r.refutation->observedRank, 2u);

  ObstructionOptions sym;
  sym.symbolic = true;
  EXPECT_EQ(obstructionVerdict(veryGoodToy(), sym).verdict, Verdict::NotObstructed);
}

TEST(Obstruction, ReportsAreReproducible) {
  ObstructionOptions opt;
  opt.seed = 7;
  const auto a = toJson(obstructionVerdict(matrixModule(basisG2(), 2), opt)).dump();
  const auto b = toJson(obstructionVerdict(matrixModule(basisG2(), 2), opt)).dump();
  EXPECT_EQ(a, b);
  opt.seed = 8;
  EXPECT_NE(a, toJson(obstructionVerdict(matrixModule(basisG2(), 2), opt)).dump());
}

TEST(SoOdd, WitnessKillsTheGenericPoint) {
  for (std::size_t n : {2u, 3u, 4u}) {
    auto [y, z] = symbolicYZ(n);
    const auto w = soOddWitness(n, y, skewB(n), z);
    EXPECT_TRUE(w.inSoOdd) << n;
    EXPECT_TRUE(w.isZeroOnPoint) << n;
    EXPECT_FALSE(isZeroMatrix(w.A));
    EXPECT_EQ(w.point.rows(), 2 * n + 1);
    EXPECT_EQ(w.point.cols(), n);
  }
}

TEST(SoOdd, WitnessArgumentChecks) {
  auto [y, z] = symbolicYZ(2);
  MatQ notSkew(2, 2, Rat(0));
  notSkew(0, 1) = Rat(1);
  EXPECT_THROW(soOddWitness(2, y, notSkew, z), BNotSkew);
  EXPECT_THROW(soOddWitness(2, y, MatQ(2, 2, Rat(0)), z), BZero);
  EXPECT_THROW(soOddWitness(2, y, skewB(3), z), std::invalid_argument);
}

TEST(SoOdd, MatrixModuleIsObstructed) {
  for (int n : {2, 3}) {
    const auto r = obstructionVerdict(matrixModule(basisSOOdd(n), static_cast<std::size_t>(n)));
    EXPECT_EQ(r.verdict, Verdict::Obstructed) << n;
  }
}

TEST(Adjoint, NeverVeryGood) {
  EXPECT_TRUE(adjointNotVeryGood(basisSL(2)));
  EXPECT_TRUE(adjointNotVeryGood(basisSL(3)));
  EXPECT_TRUE(adjointNotVeryGood(basisSOOdd(2)));
  EXPECT_TRUE(adjointNotVeryGood(basisG2()));
}
