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

}  // namespace

TEST(ExpansionTest, OracleExamples) {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto e = expand_oracle(XPolynomial::monomial(kSym, n), 0, kSym);
    for (long j = e.j_lo; j <= e.j_hi; ++j) {
      EXPECT_EQ(e.coefficient(j), j == static_cast<long>(n) ? kSym.one() : kSym.zero());
    }
  }
  auto e = expand_oracle(XPolynomial::monomial(kSym, 1), 1, kSym);
  EXPECT_EQ(e.j_lo, 1);
  EXPECT_EQ(e.j_hi, 2);
  EXPECT_EQ(e.coefficient(1), FieldElement(lam()));
  EXPECT_EQ(e.coefficient(2), FieldElement(lam_plus(-1) * rat_normalize(1, 2)));
  EXPECT_TRUE(e.exact);

  auto c = expand_oracle(XPolynomial::monomial(kOne, 1), 1, kOne);
  EXPECT_EQ(c.j_lo, 0);
  EXPECT_EQ(c.coefficient(0), kOne.constant(rat_normalize(1, 2)));
  EXPECT_EQ(c.coefficient(1), kOne.one());
}

TEST(ExpansionTest, Theorem1LiteralExamples) {
  auto taylor = theorem1_coefficients(XPolynomial::monomial(kSym, 1), 0, kSym);
  EXPECT_EQ(taylor.coefficient(0), kSym.zero());
  EXPECT_EQ(taylor.coefficient(1), kSym.one());
  EXPECT_TRUE(taylor.exact);

  auto lit = theorem1_coefficients(XPolynomial::monomial(kSym, 1), 1, kSym);
  EXPECT_EQ(lit.j_lo, 1);
  EXPECT_EQ(lit.j_hi, 1);
  EXPECT_EQ(lit.coefficient(1), FieldElement(-lam()));
  EXPECT_FALSE(lit.exact);
  EXPECT_EQ(reconstruct(lit), XPolynomial::constant(kSym, FieldElement(-lam() * lam_plus(-1).inverse())));
  EXPECT_EQ((reconstruct(lit) - XPolynomial::monomial(kSym, 1)).str(), "-L/(L-1) - x");

  // q = 1, k = 1 at lambda = 1: the printed range j = 1..0 is empty, so the
  // reconstruction is 0 and differs from q.
  auto empty = theorem1_coefficients(XPolynomial::monomial(kOne, 0), 1, kOne);
  EXPECT_TRUE(empty.coefficients.empty());
  EXPECT_TRUE(reconstruct(empty, kOne).is_zero());
  EXPECT_FALSE(empty.exact);
  EXPECT_TRUE(theorem1_coefficients(XPolynomial(kOne), 1, kOne).exact);
}

TEST(ExpansionTest, CorrectedExamples) {
  auto e = corrected_coefficients(XPolynomial::monomial(kSym, 1), 1, kSym);
  EXPECT_EQ(e.coefficient(1), FieldElement(lam()));
  EXPECT_EQ(e.coefficient(2), FieldElement(lam_plus(-1) * rat_normalize(1, 2)));
  EXPECT_TRUE(e.exact);

  auto t = corrected_coefficients(XPolynomial::monomial(kSym, 2), 0, kSym);
  EXPECT_EQ(t.coefficients, (std::vector<FieldElement>{kSym.zero(), kSym.zero(), kSym.one()}));
  EXPECT_TRUE(t.exact);

  auto z = corrected_coefficients(XPolynomial(kSym), 2, kSym);
  for (const auto& b : z.coefficients) EXPECT_TRUE(b.is_zero());
  EXPECT_TRUE(z.exact);

  EXPECT_THROW(corrected_coefficients(XPolynomial::monomial(kOne, 1), 1, kOne), UnsupportedMode);
}

TEST(ExpansionTest, Reconstruct) {
  BasisExpansion empty{ExpansionMethod::Oracle, 1, kSym, 1, 0, {}, true};
  EXPECT_TRUE(reconstruct(empty, kSym).is_zero());
  EXPECT_EQ(reconstruct(expand_oracle(XPolynomial::monomial(kSym, 1), 1, kSym)), XPolynomial::monomial(kSym, 1));
}

TEST(ExpansionPropertyTest, OracleRoundTripOnMonomials) {
  for (const auto& mode : all_modes()) {
    for (unsigned k = 0; k <= 3; ++k) {
      for (std::size_t n = 0; n <= 6; ++n) {
        XPolynomial q = XPolynomial::monomial(mode, n);
        auto e = expand_oracle(q, k, mode);
        ASSERT_TRUE(e.exact);
        ASSERT_EQ(reconstruct(e), q) << mode.key() << " k=" << k << " n=" << n;
      }
    }
  }
}

TEST(ExpansionPropertyTest, OracleRoundTripRandomized) {
  for (int trial = 0; trial < 200; ++trial) {
    const LambdaMode& mode = all_modes()[static_cast<std::size_t>(uniform(0, 4))];
    auto k = static_cast<unsigned>(uniform(0, 3));
    XPolynomial q = random_poly(mode, 6);
    auto e = expand_oracle(q, k, mode);
    ASSERT_EQ(reconstruct(e), q) << mode.key() << " " << q.str();
    // Uniqueness: expanding again gives the same coefficients.
    ASSERT_EQ(expand_oracle(q, k, mode).coefficients, e.coefficients);
  }
}

TEST(ExpansionPropertyTest, CorrectedMatchesOracle) {
  for (const auto& mode : all_modes()) {
    for (unsigned k = 0; k <= 3; ++k) {
      for (std::size_t n = 0; n <= 6; ++n) {
        XPolynomial q = XPolynomial::monomial(mode, n);
        auto oracle = expand_oracle(q, k, mode);
        if (mode.is_one()) {
          // Only j >= k is comparable at lambda = 1.
          auto upper = corrected_upper_coefficients(q, k, mode);
          for (long j = k; j <= oracle.j_hi; ++j) ASSERT_EQ(upper.at(static_cast<std::size_t>(j - k)), oracle.coefficient(j));
          continue;
        }
        auto corrected = corrected_coefficients(q, k, mode);
        ASSERT_EQ(corrected.j_lo, oracle.j_lo);
        ASSERT_EQ(corrected.coefficients, oracle.coefficients) << mode.key() << " k=" << k << " n=" << n;
      }
    }
  }
  for (int trial = 0; trial < 40; ++trial) {
    const LambdaMode& mode = all_modes()[static_cast<std::size_t>(uniform(2, 4))];
    XPolynomial q = random_poly(mode, 6);
    auto k = static_cast<unsigned>(uniform(0, 3));
    ASSERT_EQ(corrected_coefficients(q, k, mode).coefficients, expand_oracle(q, k, mode).coefficients);
  }
}
