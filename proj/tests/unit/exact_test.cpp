#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "stoes/exact.hpp"
#include "stoes/float.hpp"
#include "stoes/scaled_exp.hpp"

namespace stoes {
namespace {

TEST(FallingFactorial, SmallValues) {
  EXPECT_EQ(falling_factorial(10, 0), 1);
  EXPECT_EQ(falling_factorial(10, 1), 10);
  EXPECT_EQ(falling_factorial(10, 3), 720);
  EXPECT_EQ(falling_factorial(5, 5), 120);
  EXPECT_EQ(falling_factorial(5, 6), 0);
}

TEST(FallingFactorial, AgreesWithFactorialRatio) {
  for (std::uint64_t n = 0; n <= 30; ++n) {
    for (std::uint64_t r = 0; r <= n; ++r) {
      EXPECT_EQ(falling_factorial(n, r), factorial(n) / factorial(n - r)) << n << "," << r;
    }
  }
}

TEST(DerangementNumber, KnownValues) {
  EXPECT_EQ(derangement_number(0), 1);
  EXPECT_EQ(derangement_number(1), 0);
  EXPECT_EQ(derangement_number(2), 1);
  EXPECT_EQ(derangement_number(6), 265);
  EXPECT_EQ(derangement_number(10), 1334961);
}

TEST(DerangementNumber, MatchesPermutationEnumeration) {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::uint64_t count = 0;
    for (const auto& p : oracle::all_permutations(n)) count += oracle::permutation_cycles(p).count(1) == 0;
    EXPECT_EQ(derangement_number(n), static_cast<unsigned long>(count)) << n;
  }
}

TEST(DerangementNumber, TableMatchesSingleValues) {
  const auto d = derangement_numbers(40);
  ASSERT_EQ(d.size(), 41U);
  for (std::uint64_t n = 0; n <= 40; ++n) EXPECT_EQ(d[n], derangement_number(n));
  EXPECT_EQ(d[40], oracle::perms_min_cycle(40, 2));
}

TEST(PoissonPartialSum, MatchesDirectSum) {
  for (std::uint64_t j = 1; j <= 12; ++j) {
    for (std::int64_t k = 0; k <= 14; ++k) {
      BigRat direct = 0;
      for (std::int64_t i = 0; i <= k; ++i) {
        direct += BigRat(int_pow(BigInt(static_cast<unsigned long>(j)), static_cast<std::uint64_t>(i)),
                         factorial(static_cast<std::uint64_t>(i)));
      }
      direct.canonicalize();
      EXPECT_EQ(poisson_partial_sum(j, k), direct) << j << "," << k;
    }
  }
}

TEST(PoissonPartialSum, EmptySumIsZero) { EXPECT_EQ(poisson_partial_sum(5, -1), 0); }

TEST(Binomial, PascalAndRange) {
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Multinomial, ThreeWaySplit) {
  EXPECT_EQ(multinomial(10, 2, 3), 2520);  // 10!/(2!3!5!)
  EXPECT_EQ(multinomial(4, 2, 3), 0);
}

TEST(RationalHelpers, PowAndMakeRat) {
  EXPECT_EQ(rat_pow(BigRat(2, 3), 3), BigRat(8, 27));
  EXPECT_EQ(rat_pow(BigRat(-1, 2), 0), 1);
  EXPECT_EQ(int_pow(BigInt(9), 10), BigInt("3486784401"));
  EXPECT_EQ(make_rat(6, 4), BigRat(3, 2));
  EXPECT_THROW(make_rat(1, 0), std::domain_error);
}

TEST(Rounding, HalfEven) {
  EXPECT_EQ(round_half_even(BigRat(1, 8), 2), BigRat(3, 25));   // 0.125 -> 0.12
  EXPECT_EQ(round_half_even(BigRat(3, 8), 2), BigRat(19, 50));  // 0.375 -> 0.38
  EXPECT_EQ(round_half_even(BigRat(-1, 8), 2), BigRat(-3, 25));
  EXPECT_EQ(to_fixed(BigRat(2, 3), 4), "0.6667");
  EXPECT_EQ(to_fixed(BigRat(0), 4), "0.0000");
  EXPECT_EQ(to_fixed(BigRat(-1, 3), 3), "-0.333");
  EXPECT_EQ(to_fixed(BigRat(1, 100000), 4), "0.0000");
  EXPECT_EQ(to_fixed(BigRat(7), 0), "7");
}

TEST(Float, ArithmeticMatchesDouble) {
  const Float a(1.5), b(0.25);
  EXPECT_DOUBLE_EQ((a + b).to_double(), 1.75);
  EXPECT_DOUBLE_EQ((a - b).to_double(), 1.25);
  EXPECT_DOUBLE_EQ((a * b).to_double(), 0.375);
  EXPECT_DOUBLE_EQ((a / b).to_double(), 6.0);
  EXPECT_DOUBLE_EQ((-a).to_double(), -1.5);
  EXPECT_TRUE(b < a);
  EXPECT_TRUE(Float(2) == Float(2.0));
}

TEST(Float, Functions) {
  EXPECT_NEAR(exp(Float(1)).to_double(), std::exp(1.0), 1e-15);
  EXPECT_NEAR(log(Float(2)).to_double(), std::log(2.0), 1e-15);
  EXPECT_NEAR(sqrt(Float(2)).to_double(), std::sqrt(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(abs(Float(-3)).to_double(), 3.0);
}

TEST(Float, RationalIsCorrectlyRounded) {
  const Float third(BigRat(1, 3), 256);
  EXPECT_EQ(third.to_fixed(30), "0.333333333333333333333333333333");
  EXPECT_EQ(Float(BigRat(-1, 1000000)).to_fixed(4), "0.0000");
  EXPECT_EQ(Float(BigInt("123456789012345678901234567890"), 200).to_fixed(0), "123456789012345678901234567890");
}

TEST(Float, CopyAndMoveKeepValue) {
  Float a(BigRat(22, 7));
  Float b = a;
  Float c = std::move(a);
  EXPECT_TRUE(b == c);
  b = Float(1);
  EXPECT_DOUBLE_EQ(b.to_double(), 1.0);
  EXPECT_EQ(Float::zero(64).precision(), 64);
}

TEST(ScaledExp, ExactProductsAndQuotients) {
  const ScaledExp x(BigRat(3, 2), -2);
  const ScaledExp y(BigRat(4), 5);
  const ScaledExp p = x * y;
  EXPECT_EQ(p.coeff(), 6);
  EXPECT_EQ(p.epow(), 3);
  EXPECT_EQ((p / y), x);
  EXPECT_EQ(x.pow(3), ScaledExp(BigRat(27, 8), -6));
  EXPECT_EQ((ScaledExp::e_power(-3) * ScaledExp::e_power(3)).as_rational(), 1);
}

TEST(ScaledExp, SumsNeedMatchingPowers) {
  ScaledExp a(BigRat(1), -1);
  a += ScaledExp(BigRat(2), -1);
  EXPECT_EQ(a, ScaledExp(BigRat(3), -1));
  a += ScaledExp();
  EXPECT_EQ(a, ScaledExp(BigRat(3), -1));
  EXPECT_THROW(a += ScaledExp(BigRat(1), 0), std::domain_error);
  EXPECT_THROW(a -= ScaledExp(BigRat(1), 2), std::domain_error);
  EXPECT_THROW((void)a.as_rational(), std::domain_error);
  EXPECT_EQ(ScaledExp(BigRat(0), 4), ScaledExp(BigRat(0), 0));
}

TEST(ScaledExp, ToFloat) {
  EXPECT_NEAR(ScaledExp(BigRat(2), -1).to_double(), 2.0 / std::exp(1.0), 1e-15);
  EXPECT_DOUBLE_EQ(ScaledExp::rational(BigRat(5, 4)).to_double(), 1.25);
}

}  // namespace
}  // namespace stoes
