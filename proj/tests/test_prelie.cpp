#include "prelie/paper_claims.hpp"
#include "prelie/prelie.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace prelie;

namespace {

/// sl_2 on (e, h, f): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
StructConsts sl2() {
  StructConsts c(3);
  c(0, 2, 1) = Rat(1);
  c(2, 0, 1) = Rat(-1);
  c(1, 0, 0) = Rat(2);
  c(0, 1, 0) = Rat(-2);
  c(1, 2, 2) = Rat(-2);
  c(2, 1, 2) = Rat(2);
  return c;
}

UEAElem gen(std::size_t d, std::size_t cap, std::size_t i) { return UEAElem::generator(d, cap, i); }

mpz_class factorial(std::uint32_t k) {
  mpz_class f = 1;
  for (std::uint32_t i = 2; i <= k; ++i) f *= i;
  return f;
}

mpz_class multiFactorial(const PBWMono& m) {
  mpz_class f = 1;
  for (auto e : m) f *= factorial(e);
  return f;
}

/// Sum over b + c = a of v_b (x) v_c with v_a = x^a / a!, rewritten in the
/// plain monomial basis: coefficient a! / (b! c!).
Tensor2 dividedPowerCoproduct(const PBWMono& a) {
  Tensor2 out;
  PBWMono b(a.size(), 0);
  for (;;) {
    PBWMono c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    addTo(out, b, c, Rat(multiFactorial(a), multiFactorial(b) * multiFactorial(c)));
    std::size_t i = 0;
    while (i < a.size() && b[i] == a[i]) b[i++] = 0;
    if (i == a.size()) break;
    ++b[i];
  }
  return out;
}

/// One-dimensional x * x = x: associative, hence prelie, with zero bracket.
PreLieTable idempotentLine() {
  PreLieTable t(1);
  t(0, 0, 0) = Rat(1);
  return t;
}

}  // namespace

// --- enveloping algebra ----------------------------------------------------

TEST(Uea, Sl2Straightening) {
  const auto c = sl2();
  const std::size_t cap = 4;
  const auto fe = ueaMul(gen(3, cap, 2), gen(3, cap, 0), c);
  UEAElem expected(3, cap);
  expected.add({1, 0, 1}, Rat(1));
  expected.add({0, 1, 0}, Rat(-1));
  EXPECT_EQ(fe, expected);
  EXPECT_EQ(fe, ueaMul(gen(3, cap, 2), gen(3, cap, 0), c, Rewrite::LastDescent));
  EXPECT_EQ(fe.str({"e", "h", "f"}), "e*f - h");
}

TEST(Uea, UnitAndAbelianProducts) {
  const auto c = sl2();
  const auto u = ueaMul(gen(3, 4, 0), gen(3, 4, 1), c);
  EXPECT_EQ(ueaMul(UEAElem::one(3, 4), u, c), u);
  EXPECT_EQ(ueaMul(u, UEAElem::one(3, 4), c), u);

  const auto ab = abelianConsts(2);
  const auto p = ueaMul(UEAElem::monomial(5, {2, 0}), UEAElem::monomial(5, {1, 2}), ab);
  EXPECT_EQ(p, UEAElem::monomial(5, {3, 2}));
}

TEST(Uea, CapIsEnforced) {
  EXPECT_THROW(ueaMul(UEAElem::monomial(3, {2, 0}), UEAElem::monomial(3, {0, 2}), abelianConsts(2)), CapExceeded);
}

TEST(Uea, AssociativityAndConfluenceOnRandomTriples) {
  std::mt19937_64 rng(0xF01551);
  std::string why;
  EXPECT_TRUE(claims::ueaPropertySweep(rng, 200, why)) << why;
}

TEST(Uea, CommutatorOfGeneratorsIsTheBracket) {
  const auto c = sl2();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const auto lhs = ueaMul(gen(3, 3, i), gen(3, 3, j), c) - ueaMul(gen(3, 3, j), gen(3, 3, i), c);
      std::vector<Rat> v(3);
      for (std::size_t k = 0; k < 3; ++k) v[k] = c(i, j, k);
      EXPECT_EQ(lhs, UEAElem::fromVector(3, v));
    }
}

// --- coproduct -------------------------------------------------------------

TEST(Coproduct, Examples) {
  Tensor2 dx;
  addTo(dx, {1}, {0}, Rat(1));
  addTo(dx, {0}, {1}, Rat(1));
  EXPECT_EQ(ueaCoproduct(UEAElem::monomial(3, {1})), dx);

  Tensor2 dxx;
  addTo(dxx, {1}, {1}, Rat(2));
  EXPECT_EQ(ueaCoproduct(UEAElem::monomial(3, {2}), true), dxx);

  // e f in U(sl_2): reduced coproduct e (x) f + f (x) e
  Tensor2 def;
  addTo(def, {1, 0, 0}, {0, 0, 1}, Rat(1));
  addTo(def, {0, 0, 1}, {1, 0, 0}, Rat(1));
  EXPECT_EQ(ueaCoproduct(UEAElem::monomial(3, {1, 0, 1}), true), def);
}

TEST(Coproduct, EquivalentToDividedPowerFormula) {
  for (const auto& m : detail::monomialsUpTo(2, 0, 4)) EXPECT_EQ(ueaCoproduct(UEAElem::monomial(4, m)), dividedPowerCoproduct(m));
  for (const auto& m : detail::monomialsUpTo(3, 0, 4)) EXPECT_EQ(ueaCoproduct(UEAElem::monomial(4, m)), dividedPowerCoproduct(m));
}

TEST(Coproduct, IsAnAlgebraMorphismForUea) {
  const auto c = sl2();
  const std::size_t cap = 4;
  Straightener s(c, cap);
  auto mul = [&](const UEAElem& a, const UEAElem& b) { return ueaMul(a, b, s); };
  for (const auto& a : detail::monomialsUpTo(3, 1, 2))
    for (const auto& b : detail::monomialsUpTo(3, 1, 2)) {
      const auto A = UEAElem::monomial(cap, a), B = UEAElem::monomial(cap, b);
      EXPECT_EQ(ueaCoproduct(mul(A, B)), tensorMul(ueaCoproduct(A), ueaCoproduct(B), cap, mul));
    }
}

// --- prelie tables ---------------------------------------------------------

TEST(Tables, Aff1IsPrelieWithTheRightBracket) {
  EXPECT_TRUE(preLieDefect(aff1Table()).empty());
  EXPECT_TRUE(inducedBracketCheck(aff1Table(), aff1Consts()));
  EXPECT_FALSE(isAssociative(aff1Table()));
}

TEST(Tables, FlippedSignIsStillPrelieButForTheOppositeBracket) {
  // y * x = +x alone: the only nonzero associator is (y, y, x), trivially
  // symmetric in its first two slots, so the table is prelie -- it is aff(1)
  // again after y -> -y. Only the bracket no longer matches [x, y] = x.
  auto t = aff1Table();
  t(1, 0, 0) = Rat(1);
  EXPECT_TRUE(preLieDefect(t).empty());
  EXPECT_FALSE(inducedBracketCheck(t, aff1Consts()));
}

TEST(Tables, DefectsAreReported) {
  // x * x = y, y * y = x: (x*x)*x = x but x*(x*x) = 0, and swapping the first
  // two slots cannot repair it
  PreLieTable t(2);
  t(0, 0, 1) = Rat(1);
  t(1, 1, 0) = Rat(1);
  const auto d = preLieDefect(t);
  ASSERT_FALSE(d.empty());
  bool found = false;
  for (const auto& e : d) found = found || (e.i == 0 && e.j == 1 && e.k == 0) || (e.i == 1 && e.j == 0 && e.k == 0);
  EXPECT_TRUE(found);
}

TEST(Tables, AssociativeTablesAreAlwaysPrelie) {
  EXPECT_TRUE(preLieDefect(idempotentLine()).empty());
  EXPECT_TRUE(preLieDefect(PreLieTable(3)).empty());
  EXPECT_TRUE(inducedBracketCheck(PreLieTable(2), abelianConsts(2)));
  const auto sl2Basis = basisSL(2);
  EXPECT_FALSE(inducedBracketCheck(PreLieTable(3), structureConstants(sl2Basis)));
}

// --- ideals <-> prelie products ---------------------------------------------

TEST(Ideal, AbelianLine) {
  const auto r = prelieFromIdeal(PreLieTable(1), abelianConsts(1), 4);
  EXPECT_TRUE(r.consistent);
  EXPECT_EQ(r.recovered, PreLieTable(1));
  // I = (x^2) in K[x]: spans x^2; x^2, x^3; x^2, x^3, x^4
  EXPECT_EQ(r.idealDims, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Ideal, AbelianPlaneIsSymmetricAlgebraInDegreesTwoAndUp) {
  const auto r = prelieFromIdeal(PreLieTable(2), abelianConsts(2), 4);
  EXPECT_TRUE(r.consistent);
  // monomials of degree 2..D in two variables: 3, 3 + 4, 3 + 4 + 5
  EXPECT_EQ(r.idealDims, (std::vector<std::size_t>{3, 7, 12}));
}

TEST(Ideal, RoundTripRecoversTheTable) {
  for (const auto& [t, c] : std::vector<std::pair<PreLieTable, StructConsts>>{
           {aff1Table(), aff1Consts()}, {idempotentLine(), abelianConsts(1)}, {PreLieTable(3), abelianConsts(3)}}) {
    const auto r = prelieFromIdeal(t, c, 4);
    EXPECT_TRUE(r.consistent);
    EXPECT_EQ(r.recovered, t);
  }
}

TEST(Ideal, Preconditions) {
  auto bad = aff1Table();
  bad(1, 0, 0) = Rat(1);
  EXPECT_THROW(prelieFromIdeal(bad, aff1Consts(), 4), PreconditionViolation);
  EXPECT_THROW(prelieFromIdeal(aff1Table(), abelianConsts(3), 4), PreconditionViolation);
  EXPECT_THROW(prelieFromIdeal(aff1Table(), aff1Consts(), 2), std::invalid_argument);
}

// --- Oudom-Guin extension ----------------------------------------------------

TEST(OudomGuin, BaseCases) {
  const auto t = aff1Table();
  const std::size_t cap = 4;
  const auto x = gen(2, cap, 0), y = gen(2, cap, 1);
  const auto P = UEAElem::monomial(cap, {1, 2});
  EXPECT_EQ(oudomGuinStar(UEAElem::one(2, cap), P, t), P);
  EXPECT_EQ(oudomGuinStar(y, x, t), UEAElem::monomial(cap, {1, 0}, Rat(-1)));
  EXPECT_TRUE(oudomGuinStar(x, y, t).isZero());
  // (x y) * x = x * (y * x) - (x * y) * x = 0
  EXPECT_TRUE(oudomGuinStar(symMul(x, y), x, t).isZero());
}

TEST(OudomGuin, GeneratorsActByDerivations) {
  // x * (y z) = (x * y) z + y (x * z)
  const auto t = aff1Table();
  const std::size_t cap = 4;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) {
        const auto X = gen(2, cap, a), Y = gen(2, cap, b), Z = gen(2, cap, c);
        const auto lhs = oudomGuinStar(X, symMul(Y, Z), t);
        const auto rhs = symMul(oudomGuinStar(X, Y, t), Z) + symMul(Y, oudomGuinStar(X, Z, t));
        EXPECT_EQ(lhs, rhs);
      }
}

TEST(OudomGuin, ProductOnGenerators) {
  const auto t = aff1Table();
  const std::size_t cap = 4;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      const auto X = gen(2, cap, a), Y = gen(2, cap, b);
      EXPECT_EQ(oudomGuinProduct(X, Y, t), symMul(X, Y) + oudomGuinStar(X, Y, t));
    }
  const auto Q = UEAElem::monomial(cap, {1, 1});
  EXPECT_EQ(oudomGuinProduct(UEAElem::one(2, cap), Q, t), Q);
}

TEST(OudomGuin, ProductIsAssociative) {
  const auto t = aff1Table();
  const std::size_t cap = 4;
  OudomGuin og(t, cap);
  const auto low = detail::monomialsUpTo(2, 1, 2);
  for (const auto& a : low)
    for (const auto& b : low)
      for (const auto& c : detail::monomialsUpTo(2, 0, cap - length(a) - length(b))) {
        const auto A = UEAElem::monomial(cap, a), B = UEAElem::monomial(cap, b), C = UEAElem::monomial(cap, c);
        EXPECT_EQ(og.product(og.product(A, B), C), og.product(A, og.product(B, C)));
      }
}

TEST(OudomGuin, IndependentOfFactorChoice) {
  const auto t = aff1Table();
  const std::size_t cap = 4;
  for (const auto& p : detail::monomialsUpTo(2, 1, 3))
    for (const auto& q : detail::monomialsUpTo(2, 1, 3)) {
      const auto P = UEAElem::monomial(cap, p), Q = UEAElem::monomial(cap, q);
      EXPECT_EQ(oudomGuinStar(P, Q, t, FactorChoice::First), oudomGuinStar(P, Q, t, FactorChoice::Last));
    }
}

TEST(OudomGuin, CapExceeded) {
  const auto t = aff1Table();
  EXPECT_THROW(oudomGuinProduct(UEAElem::monomial(3, {2, 0}), UEAElem::monomial(3, {0, 2}), t), CapExceeded);
}

TEST(Invariants, DegreePreservationAndIdeals) {
  EXPECT_TRUE(starPreservesDegree(aff1Table(), 4));
  EXPECT_TRUE(starPreservesDegree(PreLieTable(3), 4));

  const auto aff = prop6Checks(aff1Table(), 4);
  EXPECT_TRUE(aff.leftIdeal);
  EXPECT_FALSE(aff.bilateral);
  EXPECT_FALSE(aff.associativeOnG);

  const auto zero = prop6Checks(PreLieTable(2), 4);
  EXPECT_TRUE(zero.leftIdeal && zero.bilateral && zero.associativeOnG);

  const auto line = prop6Checks(idempotentLine(), 4);
  EXPECT_TRUE(line.associativeOnG);
  EXPECT_TRUE(line.bilateral);
}

TEST(Invariants, Aff1AssociatorWitness) {
  // (y * y) * x = 0 but y * (y * x) = y * (-x) = x
  const auto t = aff1Table();
  const std::vector<Rat> x{Rat(1), Rat(0)}, y{Rat(0), Rat(1)};
  EXPECT_EQ(t.product(t.product(y, y), x), (std::vector<Rat>{Rat(0), Rat(0)}));
  EXPECT_EQ(t.product(y, t.product(y, x)), (std::vector<Rat>{Rat(1), Rat(0)}));
}
