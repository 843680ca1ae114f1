#include <gtest/gtest.h>

#include "support.hpp"

using namespace apostol;
using namespace testing_support;

namespace {

const LambdaMode kSym = LambdaMode::symbolic();
const LambdaMode kOne = LambdaMode::numeric(1);

XPolynomial x_poly(const LambdaMode& mode, std::initializer_list<BigRational> c) {
  return XPolynomial::from_rationals(mode, std::vector<BigRational>(c));
}

// Order-k numbers from the order-1 oracle by binomial convolution of the
// exponential generating functions (kernel^k = kernel^(k-1) * kernel).
std::vector<FieldElement> convolved_numbers(bool euler, unsigned k, long n_max, const LambdaMode& mode) {
  std::vector<FieldElement> first, acc;
  for (long n = 0; n <= n_max; ++n) {
    first.push_back(in_mode(euler ? stirling_euler(n) : stirling_bernoulli(n), mode));
    acc.push_back(n == 0 ? mode.one() : mode.zero());
  }
  for (unsigned r = 0; r < k; ++r) {
    std::vector<FieldElement> next;
    for (long n = 0; n <= n_max; ++n) {
      FieldElement s = mode.zero();
      for (long m = 0; m <= n; ++m) s += acc[m] * first[n - m] * BigRational(binomial(n, m));
      next.push_back(s);
    }
    acc = next;
  }
  return acc;
}

}  // namespace

TEST(NumbersTest, ZeroOrderKernelIsOne) {
  for (const auto& mode : all_modes()) {
    auto b = apostol_bernoulli_numbers(0, 5, mode);
    auto e = apostol_euler_numbers(0, 5, mode);
    for (long n = 0; n <= 5; ++n) {
      FieldElement expected = n == 0 ? mode.one() : mode.zero();
      EXPECT_EQ(b.values[n], expected);
      EXPECT_EQ(e.values[n], expected);
    }
  }
}

TEST(NumbersTest, SymbolicFirstOrderExamples) {
  auto b = apostol_bernoulli_numbers(1, 3, kSym);
  EXPECT_EQ(b.values[0].str(), "0");
  EXPECT_EQ(b.values[1].str(), "1/(L-1)");
  EXPECT_EQ(b.values[2].str(), "-2L/(L-1)^2");
  auto e = apostol_euler_numbers(1, 1, kSym);
  EXPECT_EQ(e.values[0].str(), "2/(L+1)");
  EXPECT_EQ(e.values[1].str(), "-2L/(L+1)^2");
}

TEST(NumbersTest, ClassicalBranchAtLambdaOne) {
  auto b = apostol_bernoulli_numbers(1, 2, kOne);
  EXPECT_EQ(b.values[0], kOne.constant(1));
  EXPECT_EQ(b.values[1], kOne.constant(rat_normalize(-1, 2)));
  EXPECT_EQ(b.values[2], kOne.constant(rat_normalize(1, 6)));
  auto e = apostol_euler_numbers(1, 1, kOne);
  EXPECT_EQ(e.values[0], kOne.constant(1));
  EXPECT_EQ(e.values[1], kOne.constant(rat_normalize(-1, 2)));
}

TEST(NumbersTest, EulerPoleAtMinusOne) {
  EXPECT_THROW(apostol_euler_numbers(0, 3, LambdaMode::numeric(-1)), PoleError);
  EXPECT_THROW(apostol_euler_numbers(1, 3, LambdaMode::numeric(-1)), PoleError);
  EXPECT_THROW(apostol_euler_poly(2, 2, LambdaMode::numeric(-1)), PoleError);
}

TEST(NumbersTest, FirstOrderMatchesStirlingOracle) {
  for (const auto& mode : all_modes()) {
    auto e = apostol_euler_numbers(1, 10, mode);
    for (long n = 0; n <= 10; ++n) ASSERT_EQ(e.values[n], in_mode(stirling_euler(n), mode)) << mode.key() << " " << n;
    if (mode.is_one()) continue;
    auto b = apostol_bernoulli_numbers(1, 10, mode);
    for (long n = 0; n <= 10; ++n) {
      ASSERT_EQ(b.values[n], in_mode(stirling_bernoulli(n), mode)) << mode.key() << " " << n;
    }
  }
}

TEST(NumbersTest, HigherOrderMatchesConvolutionOracle) {
  for (const auto& mode : all_modes()) {
    for (unsigned k = 2; k <= 4; ++k) {
      auto e = apostol_euler_numbers(k, 8, mode);
      ASSERT_EQ(e.values, convolved_numbers(true, k, 8, mode)) << mode.key() << " k=" << k;
      if (mode.is_one()) continue;
      auto b = apostol_bernoulli_numbers(k, 8, mode);
      ASSERT_EQ(b.values, convolved_numbers(false, k, 8, mode)) << mode.key() << " k=" << k;
    }
  }
}

TEST(NumbersTest, ClassicalTablesAgainstFrozenValues) {
  const auto& frozen = frozen_bernoulli();
  auto rec = bernoulli_numbers_by_recurrence(24);
  auto ser = apostol_bernoulli_numbers(1, 24, kOne);
  ASSERT_EQ(rec.values.size(), 25u);
  for (long n = 0; n <= 24; ++n) {
    EXPECT_EQ(rec.values[n], kOne.constant(frozen[n])) << n;
    EXPECT_EQ(ser.values[n], kOne.constant(frozen[n])) << n;
  }
  auto euler = euler_numbers_by_recurrence(12);
  for (long n = 0; n <= 12; ++n) {
    EXPECT_EQ(euler.values[n], kOne.constant(frozen_euler()[n])) << n;
    EXPECT_EQ(euler_number_from_polynomial(static_cast<unsigned>(n)), frozen_euler()[n]) << n;
  }
}

TEST(NumbersTest, RecurrenceExamples) {
  auto b = bernoulli_numbers_by_recurrence(3);
  EXPECT_EQ(b.values[0].str(), "1");
  EXPECT_EQ(b.values[1].str(), "-1/2");
  EXPECT_EQ(b.values[3].str(), "0");
  auto e = euler_numbers_by_recurrence(2);
  EXPECT_EQ(e.values[0].str(), "1");
  EXPECT_EQ(e.values[1].str(), "0");
  EXPECT_EQ(e.values[2].str(), "-1");
}

TEST(PolynomialTest, Examples) {
  for (const auto& mode : all_modes()) {
    for (unsigned n = 0; n <= 6; ++n) {
      EXPECT_EQ(apostol_bernoulli_poly(n, 0, mode), XPolynomial::monomial(mode, n));
      EXPECT_EQ(apostol_euler_poly(n, 0, mode), XPolynomial::monomial(mode, n));
    }
  }
  EXPECT_EQ(apostol_bernoulli_poly(1, 1, kSym), XPolynomial::constant(kSym, FieldElement(lam_plus(-1).inverse())));
  EXPECT_EQ(apostol_bernoulli_poly(1, 1, kOne), x_poly(kOne, {rat_normalize(-1, 2), 1}));
  EXPECT_EQ(apostol_euler_poly(1, 1, kOne), x_poly(kOne, {rat_normalize(-1, 2), 1}));
  XPolynomial e1 = apostol_euler_poly(1, 1, kSym);
  std::vector<BigRational> at_one;
  for (const auto& c : e1.coefficients()) at_one.push_back(c.symbolic().evaluate(1));
  EXPECT_EQ(XPolynomial::from_rationals(kOne, at_one), x_poly(kOne, {rat_normalize(-1, 2), 1}));
  EXPECT_EQ(bernoulli_poly(3).str(), "1/2*x - 3/2*x^2 + x^3");
  EXPECT_EQ(apostol_bernoulli_poly(2, 1, kSym).str(), "-2L/(L-1)^2 + 2/(L-1)*x");
}

TEST(PolynomialTest, ClassicalPolynomialsMatchFrozenNumbers) {
  const auto& frozen = frozen_bernoulli();
  for (unsigned n = 0; n <= 16; ++n) {
    XPolynomial expected(kOne);
    for (unsigned l = 0; l <= n; ++l) {
      expected += XPolynomial::monomial(kOne, n - l, kOne.constant(frozen[l] * BigRational(binomial(n, l))));
    }
    EXPECT_EQ(bernoulli_poly(n), expected) << n;
    // E_n(x) = sum C(n,l) (E_l / 2^l) (x - 1/2)^(n-l).
    XPolynomial euler_expected(kOne);
    if (n <= 12) {
      for (unsigned l = 0; l <= n; ++l) {
        XPolynomial term = XPolynomial::monomial(kOne, n - l).shift(rat_normalize(-1, 2));
        euler_expected += term * (frozen_euler()[l] * BigRational(binomial(n, l)) / BigRational(2).pow(l));
      }
      EXPECT_EQ(euler_poly(n), euler_expected) << n;
    }
  }
}

TEST(PolynomialTest, DualPathEquality) {
  for (const auto& mode : all_modes()) {
    for (unsigned k = 0; k <= 4; ++k) {
      for (unsigned n = 0; n <= 10; ++n) {
        ASSERT_EQ(apostol_bernoulli_poly(n, k, mode), apostol_bernoulli_poly_from_series(n, k, mode))
            << mode.key() << " n=" << n << " k=" << k;
        ASSERT_EQ(apostol_euler_poly(n, k, mode), apostol_euler_poly_from_series(n, k, mode))
            << mode.key() << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(PolynomialTest, DerivativeAndDifferenceRelations) {
  for (const auto& mode : all_modes()) {
    for (unsigned k = 0; k <= 4; ++k) {
      for (unsigned n = 1; n <= 10; ++n) {
        ASSERT_EQ(apostol_bernoulli_poly(n, k, mode).derivative(), apostol_bernoulli_poly(n - 1, k, mode) * BigRational(n));
        ASSERT_EQ(apostol_euler_poly(n, k, mode).derivative(), apostol_euler_poly(n - 1, k, mode) * BigRational(n));
      }
    }
    for (unsigned k = 1; k <= 4; ++k) {
      for (unsigned n = 0; n <= 8; ++n) {
        XPolynomial b = apostol_bernoulli_poly(n + 1, k, mode);
        ASSERT_EQ(b.shift(BigRational(1)) * mode.lambda() - b, apostol_bernoulli_poly(n, k - 1, mode) * BigRational(n + 1));
      }
    }
  }
}

TEST(PolynomialTest, DegreeFacts) {
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned j = 0; j <= 10; ++j) {
      XPolynomial sym = apostol_bernoulli_poly(j, k, kSym);
      if (j < k) {
        EXPECT_TRUE(sym.is_zero()) << j << " " << k;
      } else {
        EXPECT_EQ(sym.degree(), static_cast<long>(j - k));
      }
      XPolynomial classical = apostol_bernoulli_poly(j, k, kOne);
      EXPECT_EQ(classical.degree(), static_cast<long>(j));
      EXPECT_TRUE(classical.leading().is_one());
    }
  }
}

TEST(PolynomialTest, MemoizedResultsAreStable) {
  XPolynomial first = apostol_bernoulli_poly(7, 3, kSym);
  XPolynomial second = apostol_bernoulli_poly(7, 3, kSym);
  EXPECT_EQ(first, second);
  EXPECT_EQ(apostol_bernoulli_numbers(2, 4, kSym).values.size(), 5u);
  EXPECT_EQ(apostol_bernoulli_numbers(2, 9, kSym).values.size(), 10u);
}
