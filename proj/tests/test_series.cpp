#include <gtest/gtest.h>

#include "support.hpp"

using namespace apostol;
using namespace testing_support;

namespace {

using QSeries = BasicSeries<FieldElement>;

QSeries rational_series(std::initializer_list<BigRational> c) {
  std::vector<FieldElement> v;
  for (const auto& x : c) v.emplace_back(x);
  return QSeries(v);
}

QSeries exp_series(long sign, std::size_t order) {
  return exp_scaled_series(FieldElement(BigRational(sign)), order);
}

QSeries random_series(std::size_t order, bool invertible) {
  std::vector<FieldElement> v;
  for (std::size_t i = 0; i <= order; ++i) v.emplace_back(small_rational());
  if (invertible && v[0].is_zero()) v[0] = FieldElement(BigRational(1));
  return QSeries(v);
}

}  // namespace

TEST(SeriesTest, Addition) {
  auto sum = series_add(rational_series({1, 1, 0}), rational_series({1, -1, 0}));
  EXPECT_EQ(sum, rational_series({2, 0, 0}));
  auto a = rational_series({3, rat_normalize(1, 2), -4});
  EXPECT_EQ(series_add(a, QSeries::constant(FieldElement(), 2)), a);
  auto even = series_add(exp_series(1, 3), exp_series(-1, 3));
  EXPECT_EQ(even, rational_series({2, 0, 1, 0}));
  EXPECT_THROW(series_add(rational_series({1}), rational_series({1, 2})), OrderMismatch);
}

TEST(SeriesTest, Multiplication) {
  EXPECT_EQ(series_mul(rational_series({1, 1, 0}), rational_series({1, -1, 0})), rational_series({1, 0, -1}));
  auto a = rational_series({2, 5, -1, rat_normalize(1, 7)});
  EXPECT_EQ(series_mul(a, QSeries::constant(FieldElement(BigRational(1)), 3)), a);
  EXPECT_EQ(series_mul(exp_series(1, 3), exp_series(1, 3)), rational_series({1, 2, 2, rat_normalize(4, 3)}));
}

TEST(SeriesTest, Reciprocal) {
  EXPECT_EQ(series_recip(rational_series({1, -1, 0, 0})), rational_series({1, 1, 1, 1}));
  EXPECT_EQ(series_recip(exp_series(1, 3)), rational_series({1, -1, rat_normalize(1, 2), rat_normalize(-1, 6)}));
  EXPECT_THROW(series_recip(rational_series({0, 1})), NonInvertibleSeries);

  // (L e^t - 1) over Q(L): reciprocal starts 1/(L-1), -L/(L-1)^2.
  const LambdaMode sym = LambdaMode::symbolic();
  auto kernel = series_add(series_scale(exp_scaled_series(sym.one(), 1), sym.lambda()),
                           QSeries::constant(-sym.one(), 1));
  auto r = series_recip(kernel);
  EXPECT_EQ(r[0], FieldElement(lam_plus(-1).inverse()));
  EXPECT_EQ(r[1], FieldElement(-lam() * (lam_plus(-1) * lam_plus(-1)).inverse()));
}

TEST(SeriesTest, Powers) {
  auto a = rational_series({3, 1, 4});
  EXPECT_EQ(series_pow(a, 0), rational_series({1, 0, 0}));
  EXPECT_EQ(series_pow(rational_series({1, 1, 0}), 2), rational_series({1, 2, 1}));
  const LambdaMode sym = LambdaMode::symbolic();
  auto kernel = series_add(series_scale(exp_scaled_series(sym.one(), 2), sym.lambda()),
                           QSeries::constant(-sym.one(), 2));
  EXPECT_EQ(series_pow(kernel, 2)[0], FieldElement(lam_plus(-1) * lam_plus(-1)));
}

TEST(SeriesTest, ScaledExponential) {
  EXPECT_EQ(exp_scaled_series(FieldElement(BigRational(0)), 3), rational_series({1, 0, 0, 0}));
  EXPECT_EQ(exp_series(1, 3), rational_series({1, 1, rat_normalize(1, 2), rat_normalize(1, 6)}));
  const LambdaMode sym = LambdaMode::symbolic();
  auto e = exp_scaled_series(sym.lambda(), 2);
  EXPECT_EQ(e[0], sym.one());
  EXPECT_EQ(e[1], FieldElement(lam()));
  EXPECT_EQ(e[2], FieldElement(lam() * lam() * rat_normalize(1, 2)));
}

TEST(SeriesPropertyTest, ReciprocalInverts) {
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_series(static_cast<std::size_t>(uniform(0, 8)), true);
    ASSERT_EQ(series_mul(a, series_recip(a)), QSeries::constant(FieldElement(BigRational(1)), a.order()));
  }
}

TEST(SeriesPropertyTest, PowersAdd) {
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_series(6, false);
    auto j = static_cast<unsigned>(uniform(0, 4));
    auto k = static_cast<unsigned>(uniform(0, 4));
    ASSERT_EQ(series_pow(a, j + k), series_mul(series_pow(a, j), series_pow(a, k)));
  }
}

TEST(SeriesPropertyTest, ExponentialIsAdditive) {
  for (int trial = 0; trial < 60; ++trial) {
    FieldElement a(small_rational()), b(small_rational());
    ASSERT_EQ(exp_scaled_series(a + b, 7), series_mul(exp_scaled_series(a, 7), exp_scaled_series(b, 7)));
  }
  for (int trial = 0; trial < 10; ++trial) {
    FieldElement a(small_ratfunc()), b(small_ratfunc());
    ASSERT_EQ(exp_scaled_series(a + b, 4), series_mul(exp_scaled_series(a, 4), exp_scaled_series(b, 4)));
  }
}
