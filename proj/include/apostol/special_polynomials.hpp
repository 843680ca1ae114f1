#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "apostol/combinatorics.hpp"
#include "apostol/field_element.hpp"
#include "apostol/series.hpp"
#include "apostol/x_polynomial.hpp"

namespace apostol {

enum class Family { ApostolBernoulli, ApostolEuler, Bernoulli, Euler };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::ApostolBernoulli: return "apostol-bernoulli";
    case Family::ApostolEuler: return "apostol-euler";
    case Family::Bernoulli: return "bernoulli";
    case Family::Euler: return "euler";
  }
  return "?";
}

/// values[n] = n! [t^n] of the family's generating kernel, n = 0..n_max.
struct NumberTable {
  Family family;
  unsigned k;
  LambdaMode mode;
  std::vector<FieldElement> values;
};

/// The Euler kernel 2/(lambda e^t + 1) has a pole at t = 0 for lambda = -1.
inline void require_euler_regular(const LambdaMode& mode) {
  if (mode.is_value(BigRational(-1))) {
    throw PoleError("Apostol-Euler family is undefined at lambda = -1");
  }
}

/**
 * Ordinary coefficients of the order-k generating kernel through t^order:
 *
 *   Apostol-Bernoulli  t^k / (lambda e^t - 1)^k, or ((e^t - 1)/t)^{-k} when lambda = 1
 *   Apostol-Euler      2^k / (lambda e^t + 1)^k
 *
 * The lambda = 1 Bernoulli branch is selected by the mode, never by
 * substituting into symbolic results (those have a pole there).
 */
inline TruncatedSeries generating_kernel(Family family, unsigned k, const LambdaMode& mode, std::size_t order) {
  const FieldElement one = mode.one();
  if (family == Family::ApostolBernoulli && mode.is_one()) {
    std::vector<FieldElement> q;
    q.reserve(order + 1);
    for (std::size_t m = 0; m <= order; ++m) q.push_back(mode.constant(inverse_factorial(static_cast<long>(m) + 1)));
    return series_recip(series_pow(TruncatedSeries(std::move(q)), k));
  }
  if (family == Family::ApostolBernoulli) {
    // lambda e^t - 1
    std::vector<FieldElement> d = series_scale(exp_scaled_series(one, order), mode.lambda()).coefficients();
    d[0] -= one;
    TruncatedSeries recip = series_recip(series_pow(TruncatedSeries(std::move(d)), k));
    std::vector<FieldElement> shifted(order + 1, mode.zero());
    for (std::size_t n = k; n <= order; ++n) shifted[n] = recip[n - k];
    return TruncatedSeries(std::move(shifted));
  }
  if (family == Family::ApostolEuler) {
    require_euler_regular(mode);
    std::vector<FieldElement> d = series_scale(exp_scaled_series(one, order), mode.lambda()).coefficients();
    d[0] += one;
    TruncatedSeries recip = series_recip(series_pow(TruncatedSeries(std::move(d)), k));
    return series_scale(recip, BigRational(BigInt(1) << k));
  }
  throw Error("generating kernel requested for a classical number family");
}

namespace detail {

/// Memo for number tables and polynomials. Entries are pure functions of
/// their key, so a hit is indistinguishable from recomputation.
class SpecialMemo {
 public:
  using NumberKey = std::tuple<int, unsigned, std::string>;
  using PolyKey = std::tuple<int, unsigned, unsigned, std::string>;

  bool find_numbers(const NumberKey& key, std::size_t n_max, std::vector<FieldElement>& out) {
    std::lock_guard lock(mu_);
    auto it = numbers_.find(key);
    if (it == numbers_.end() || it->second.size() <= n_max) return false;
    out.assign(it->second.begin(), it->second.begin() + static_cast<std::ptrdiff_t>(n_max + 1));
    return true;
  }
  void store_numbers(const NumberKey& key, const std::vector<FieldElement>& values) {
    std::lock_guard lock(mu_);
    auto& slot = numbers_[key];
    if (slot.size() < values.size()) slot = values;
  }

  bool find_poly(const PolyKey& key, XPolynomial& out) {
    std::lock_guard lock(mu_);
    auto it = polys_.find(key);
    if (it == polys_.end()) return false;
    out = it->second;
    return true;
  }
  void store_poly(const PolyKey& key, const XPolynomial& p) {
    std::lock_guard lock(mu_);
    polys_.emplace(key, p);
  }
  void clear() {
    std::lock_guard lock(mu_);
    numbers_.clear();
    polys_.clear();
  }

 private:
  std::mutex mu_;
  std::map<NumberKey, std::vector<FieldElement>> numbers_;
  std::map<PolyKey, XPolynomial> polys_;
};

inline SpecialMemo& special_memo() {
  static SpecialMemo memo;
  return memo;
}

inline NumberTable kernel_numbers(Family family, unsigned k, unsigned n_max, const LambdaMode& mode) {
  if (family == Family::ApostolEuler) require_euler_regular(mode);
  const SpecialMemo::NumberKey key{static_cast<int>(family), k, mode.key()};
  NumberTable table{family, k, mode, {}};
  if (special_memo().find_numbers(key, n_max, table.values)) return table;
  TruncatedSeries kernel = generating_kernel(family, k, mode, n_max);
  table.values.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) table.values.push_back(kernel[n] * BigRational(factorial(n)));
  special_memo().store_numbers(key, table.values);
  return table;
}

}  // namespace detail

/// Apostol-Bernoulli numbers of order k, B_n^{(k)}(lambda), n = 0..n_max.
/// At lambda = 1 these are the classical Bernoulli numbers of order k.
inline NumberTable apostol_bernoulli_numbers(unsigned k, unsigned n_max, const LambdaMode& mode) {
  return detail::kernel_numbers(Family::ApostolBernoulli, k, n_max, mode);
}

/// Apostol-Euler numbers of order k, E_n^{(k)}(lambda). PoleError at lambda = -1.
inline NumberTable apostol_euler_numbers(unsigned k, unsigned n_max, const LambdaMode& mode) {
  return detail::kernel_numbers(Family::ApostolEuler, k, n_max, mode);
}

/// Bernoulli numbers from (B+1)^n - B_n = delta_{n,1} read umbrally:
/// the n-th instance determines B_{n-1} = (delta_{n,1} - sum_{i<n-1} C(n,i) B_i) / n.
inline NumberTable bernoulli_numbers_by_recurrence(unsigned n_max) {
  std::vector<BigRational> b;
  b.reserve(n_max + 1);
  for (long n = 1; n <= static_cast<long>(n_max) + 1; ++n) {
    BigRational rhs = (n == 1) ? BigRational(1) : BigRational(0);
    for (long i = 0; i < n - 1; ++i) rhs -= BigRational(binomial(n, i)) * b[static_cast<std::size_t>(i)];
    b.push_back(rhs / BigRational(n));
  }
  const LambdaMode classical = LambdaMode::numeric(1);
  NumberTable table{Family::Bernoulli, 1, classical, {}};
  for (auto& v : b) table.values.emplace_back(std::move(v));
  return table;
}

/// Euler numbers from (E+1)^n + (E-1)^n = 2 delta_{n,0}. Terms with n - i odd
/// cancel, leaving E_n = delta_{n,0} - sum_{i<n, n-i even} C(n,i) E_i.
inline NumberTable euler_numbers_by_recurrence(unsigned n_max) {
  std::vector<BigRational> e;
  e.reserve(n_max + 1);
  for (long n = 0; n <= static_cast<long>(n_max); ++n) {
    BigRational v = (n == 0) ? BigRational(1) : BigRational(0);
    for (long i = n - 2; i >= 0; i -= 2) v -= BigRational(binomial(n, i)) * e[static_cast<std::size_t>(i)];
    e.push_back(std::move(v));
  }
  const LambdaMode classical = LambdaMode::numeric(1);
  NumberTable table{Family::Euler, 1, classical, {}};
  for (auto& v : e) table.values.emplace_back(std::move(v));
  return table;
}

namespace detail {

inline XPolynomial binomial_sum_poly(Family family, unsigned n, unsigned k, const LambdaMode& mode) {
  const SpecialMemo::PolyKey key{static_cast<int>(family), n, k, mode.key()};
  XPolynomial cached(mode);
  if (special_memo().find_poly(key, cached)) return cached;
  NumberTable numbers = kernel_numbers(family, k, n, mode);
  std::vector<FieldElement> c;
  c.reserve(n + 1);
  for (unsigned l = 0; l <= n; ++l) c.push_back(numbers.values[n - l] * BigRational(binomial(n, l)));
  XPolynomial p(mode, std::move(c));
  special_memo().store_poly(key, p);
  return p;
}

inline XPolynomial series_extraction_poly(Family family, unsigned n, unsigned k, const LambdaMode& mode) {
  TruncatedSeries kernel = generating_kernel(family, k, mode, n);
  std::vector<XPolynomial> lifted;
  lifted.reserve(n + 1);
  for (const auto& c : kernel.coefficients()) lifted.push_back(XPolynomial::constant(mode, c));
  BasicSeries<XPolynomial> kernel_x(std::move(lifted));
  BasicSeries<XPolynomial> exp_xt = exp_scaled_series(XPolynomial::monomial(mode, 1), n);
  return series_mul(kernel_x, exp_xt)[n] * BigRational(factorial(n));
}

}  // namespace detail

/// B_n^{(k)}(x | lambda) = sum_l C(n,l) x^l B_{n-l}^{(k)}(lambda).
inline XPolynomial apostol_bernoulli_poly(unsigned n, unsigned k, const LambdaMode& mode) {
  return detail::binomial_sum_poly(Family::ApostolBernoulli, n, k, mode);
}

/// E_n^{(k)}(x | lambda) = sum_l C(n,l) x^l E_{n-l}^{(k)}(lambda).
inline XPolynomial apostol_euler_poly(unsigned n, unsigned k, const LambdaMode& mode) {
  return detail::binomial_sum_poly(Family::ApostolEuler, n, k, mode);
}

/// n! [t^n] (kernel * e^{xt}) computed in Q(lambda)[x][[t]]; independent of
/// the number tables and used to cross-check the binomial-sum construction.
inline XPolynomial apostol_bernoulli_poly_from_series(unsigned n, unsigned k, const LambdaMode& mode) {
  return detail::series_extraction_poly(Family::ApostolBernoulli, n, k, mode);
}

inline XPolynomial apostol_euler_poly_from_series(unsigned n, unsigned k, const LambdaMode& mode) {
  return detail::series_extraction_poly(Family::ApostolEuler, n, k, mode);
}

/// Classical Bernoulli polynomial of order k, B_n^{(k)}(x) = B_n^{(k)}(x | 1).
inline XPolynomial bernoulli_poly(unsigned n, unsigned k = 1) {
  return apostol_bernoulli_poly(n, k, LambdaMode::numeric(1));
}

/// Classical Euler polynomial of order k, E_n^{(k)}(x) = E_n^{(k)}(x | 1).
inline XPolynomial euler_poly(unsigned n, unsigned k = 1) {
  return apostol_euler_poly(n, k, LambdaMode::numeric(1));
}

/// 2^m E_m(1/2): the Euler numbers recovered from the Euler polynomials.
inline BigRational euler_number_from_polynomial(unsigned m) {
  return euler_poly(m).evaluate(BigRational::normalize(1, 2)).rational() * BigRational(BigInt(1) << m);
}

}  // namespace apostol
