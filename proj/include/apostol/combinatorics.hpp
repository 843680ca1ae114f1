#pragma once

#include "apostol/big_rational.hpp"

namespace apostol {

/// C(n, k) by the multiplicative formula; zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) here
  }
  return r;
}

inline BigInt factorial(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

/// n! / m! for n, m >= 0; zero when m < 0 (a term with a negative
/// factorial index vanishes).
inline BigRational factorial_ratio(long n, long m) {
  if (m < 0) return 0;
  BigInt r = 1;
  for (long i = m + 1; i <= n; ++i) r *= i;
  if (m <= n) return r;
  for (long i = n + 1; i <= m; ++i) r *= i;
  return BigRational::normalize(1, r);
}

inline BigRational inverse_factorial(long n) { return BigRational::normalize(1, factorial(n)); }

/// (-1)^e
inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace apostol
