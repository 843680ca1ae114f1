#pragma once

#include <random>
#include <string>
#include <vector>

#include "apostol/apostol.hpp"

namespace testing_support {

using namespace apostol;

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline BigRational small_rational(long max_num = 6, long max_den = 5) {
  return BigRational::normalize(uniform(-max_num, max_num), uniform(1, max_den));
}

inline LambdaPoly small_lambda_poly(long max_degree = 2) {
  std::vector<BigRational> c;
  long d = uniform(0, max_degree);
  for (long i = 0; i <= d; ++i) c.push_back(small_rational(4, 3));
  return LambdaPoly(c);
}

inline LambdaRatFunc small_ratfunc() {
  LambdaPoly den;
  while (den.is_zero()) den = small_lambda_poly();
  return LambdaRatFunc::canonical(small_lambda_poly(), den);
}

inline XPolynomial random_poly(const LambdaMode& mode, long max_degree) {
  std::vector<BigRational> c;
  long d = uniform(0, max_degree);
  for (long i = 0; i <= d; ++i) c.push_back(small_rational());
  return XPolynomial::from_rationals(mode, c);
}

inline LambdaRatFunc lam() { return LambdaRatFunc::variable(); }
inline LambdaRatFunc lam_plus(long c) { return LambdaRatFunc(LambdaPoly({BigRational(c), BigRational(1)})); }

inline const std::vector<LambdaMode>& all_modes() {
  static const std::vector<LambdaMode> modes{LambdaMode::symbolic(), LambdaMode::numeric(1), LambdaMode::numeric(2),
                                             LambdaMode::numeric(-2),
                                             LambdaMode::numeric(BigRational::normalize(1, 3))};
  return modes;
}

/// Classical Bernoulli numbers B_0..B_24 (B_1 = -1/2), frozen from tables.
inline const std::vector<BigRational>& frozen_bernoulli() {
  static const std::vector<BigRational> values = [] {
    const char* text[] = {"1",        "-1/2", "1/6",          "0", "-1/30",      "0", "1/42",       "0", "-1/30",
                          "0",        "5/66", "0",            "-691/2730",    "0", "7/6",        "0", "-3617/510",
                          "0",        "43867/798",            "0", "-174611/330", "0", "854513/138", "0",
                          "-236364091/2730"};
    std::vector<BigRational> v;
    for (const char* t : text) v.push_back(BigRational::parse(t));
    return v;
  }();
  return values;
}

/// Euler numbers E_0..E_12, frozen from tables.
inline const std::vector<BigRational>& frozen_euler() {
  static const std::vector<BigRational> values{1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521, 0, 2702765};
  return values;
}

/// Stirling numbers of the second kind S(n, j).
inline BigInt stirling2(long n, long j) {
  std::vector<std::vector<BigInt>> s(static_cast<std::size_t>(n + 1), std::vector<BigInt>(static_cast<std::size_t>(n + 1), 0));
  s[0][0] = 1;
  for (long i = 1; i <= n; ++i) {
    for (long m = 1; m <= i; ++m) s[i][m] = m * s[i - 1][m] + s[i - 1][m - 1];
  }
  return (j < 0 || j > n) ? BigInt(0) : s[n][j];
}

/// First-order Apostol-Bernoulli number via expanding 1/(L e^t - 1) in powers of
/// (e^t - 1):  B_n(L) = n * sum_j (-1)^j j! S(n-1, j) L^j / (L-1)^(j+1).
inline LambdaRatFunc stirling_bernoulli(long n) {
  if (n == 0) return LambdaRatFunc();
  LambdaRatFunc acc;
  for (long j = 0; j <= n - 1; ++j) {
    LambdaRatFunc term = LambdaRatFunc(BigRational(factorial(j) * stirling2(n - 1, j)) * BigRational(parity_sign(j)));
    for (long i = 0; i < j; ++i) term = term * lam();
    for (long i = 0; i <= j; ++i) term = term * lam_plus(-1).inverse();
    acc = acc + term;
  }
  return acc * BigRational(n);
}

/// First-order Apostol-Euler number: E_n(L) = 2 sum_j (-1)^j j! S(n, j) L^j / (L+1)^(j+1).
inline LambdaRatFunc stirling_euler(long n) {
  LambdaRatFunc acc;
  for (long j = 0; j <= n; ++j) {
    LambdaRatFunc term = LambdaRatFunc(BigRational(factorial(j) * stirling2(n, j)) * BigRational(2 * parity_sign(j)));
    for (long i = 0; i < j; ++i) term = term * lam();
    for (long i = 0; i <= j; ++i) term = term * lam_plus(1).inverse();
    acc = acc + term;
  }
  return acc;
}

/// Value of a symbolic oracle in the given mode (numeric modes evaluate at lambda0).
inline FieldElement in_mode(const LambdaRatFunc& f, const LambdaMode& mode) {
  if (mode.is_symbolic()) return FieldElement(f);
  return FieldElement(f.evaluate(mode.value()));
}

}  // namespace testing_support
