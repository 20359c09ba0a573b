#include "prelie/exactmath.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace prelie;

namespace {

PolyQ P(const char* s, std::size_t arity) { return parsePolyQ(s, arity); }

}  // namespace

TEST(Rat, CanonicalFormAndParsing) {
  EXPECT_EQ(Rat::parse("3/6").str(), "1/2");
  EXPECT_EQ(Rat::parse("-4/2").str(), "-2");
  EXPECT_EQ(Rat::parse(" 7 ").str(), "7");
  EXPECT_TRUE(Rat::parse("0/5").isZero());
  EXPECT_THROW(Rat::parse("1/0"), ParseError);
  EXPECT_THROW(Rat::parse("abc"), ParseError);
  EXPECT_THROW(Rat::parse(""), ParseError);
}

TEST(Rat, FieldArithmetic) {
  const Rat a(mpz_class(2), mpz_class(3)), b(mpz_class(-5), mpz_class(4));
  EXPECT_EQ((a + b).str(), "-7/12");
  EXPECT_EQ((a * b).str(), "-5/6");
  EXPECT_EQ((a / b).str(), "-8/15");
  EXPECT_LT(b, a);
  EXPECT_THROW(a / Rat(0), std::domain_error);
}

TEST(Poly, Products) {
  EXPECT_EQ(P("x1+1", 1) * P("x1-1", 1), P("x1^2-1", 1));
  EXPECT_TRUE((PolyQ(1) * P("x1+1", 1)).isZero());
  EXPECT_EQ(P("x1+x2", 2) * P("x1+x2", 2), P("x1^2+2*x1*x2+x2^2", 2));
  EXPECT_THROW(P("x1", 1) * P("x1", 2), ArityMismatch);
}

TEST(Poly, TextRoundTrip) {
  const auto p = P("3/2*x1^2*x3 - x2 + 5", 3);
  EXPECT_EQ(toString(p), "3/2*x1^2*x3 - x2 + 5");
  EXPECT_EQ(parsePolyQ(toString(p), 3), p);
  EXPECT_EQ(toString(PolyQ(2)), "0");
  EXPECT_THROW(parsePolyQ("x1 +", 1), ParseError);
  EXPECT_THROW(parsePolyQ("x3", 2), ParseError);
}

TEST(Poly, Evaluation) {
  const Rat three(3), one(1), two(2);
  EXPECT_EQ(polyEval(P("x1^2-1", 1), std::vector<Rat>{three}), Rat(8));
  EXPECT_EQ(polyEval(constantQ(2, Rat(5)), std::vector<Rat>{one, two}), Rat(5));
  EXPECT_EQ(polyEval(P("x1^2+2*x1*x2+x2^2", 2), std::vector<Rat>{one, two}), Rat(9));
  EXPECT_THROW(polyEval(P("x1", 1), std::vector<Rat>{one, two}), ArityMismatch);
}

TEST(Poly, ExactDivision) {
  EXPECT_EQ(divExact(P("x1^2-1", 1), P("x1-1", 1)), P("x1+1", 1));
  EXPECT_EQ(divExact(P("x1^2*x2 - x2^3", 2), P("x1+x2", 2)), P("x1*x2 - x2^2", 2));
  EXPECT_THROW(divExact(P("x1^2+1", 1), P("x1-1", 1)), ExactDivisionFailure);
  EXPECT_THROW(divExact(P("x1", 1), PolyQ(1)), ExactDivisionFailure);
}

TEST(Poly, ReductionModPrime) {
  const auto half = fpReduce(P("1/2*x1", 1), 7);
  ASSERT_EQ(half.size(), 1u);
  EXPECT_EQ(half.terms().front().coeff.value(), 4u);

  const auto sq = fpReduce(P("x1^2-1", 1), 5);
  EXPECT_EQ(sq.constantTerm(FpScalar(0, 5)).value(), 4u);

  EXPECT_THROW(fpReduce(P("1/3*x1", 1), 3), BadPrime);
}

TEST(Poly, ReductionCommutesWithEvaluation) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> v(-20, 20);
  const auto p = P("3/7*x1^3*x2 - 5*x2^2 + 1/2*x1 + 9", 2);
  const std::uint64_t prime = kCertificationPrimes[3];
  for (int s = 0; s < 20; ++s) {
    const Rat a(v(rng)), b(v(rng));
    const Rat exact = polyEval(p, std::vector<Rat>{a, b});
    const std::vector<FpScalar> pt{reduceRat(a, prime), reduceRat(b, prime)};
    EXPECT_EQ(evaluateFp(fpReduce(p, prime), pt, prime), reduceRat(exact, prime));
  }
}

TEST(Primes, CertificationListIsPrimeAndLarge) {
  for (auto p : kCertificationPrimes) {
    EXPECT_TRUE(isPrime64(p)) << p;
    EXPECT_GE(p, 1ULL << 31);
  }
  EXPECT_FALSE(isPrime64(4294967297ULL));  // 641 * 6700417
  EXPECT_FALSE(isPrime64(1));
  EXPECT_TRUE(isPrime64(2));
  EXPECT_FALSE(isPrime64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Primes, SmallRangeAgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 3000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    EXPECT_EQ(isPrime64(n), prime) << n;
  }
}

TEST(FpScalar, InverseAndWraparound) {
  const std::uint64_t p = kCertificationPrimes[0];
  const FpScalar a(123456789, p);
  EXPECT_EQ((a * a.inverse()).value(), 1u);
  EXPECT_EQ((FpScalar(p - 1, p) + FpScalar(5, p)).value(), 4u);
  EXPECT_THROW(FpScalar(0, p).inverse(), std::domain_error);
}
