#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "apostol/combinatorics.hpp"
#include "apostol/errors.hpp"
#include "apostol/field_element.hpp"

namespace apostol {

/**
 * Formal power series c_0 + c_1 t + ... + c_N t^N truncated at order N
 * (inclusive), with ordinary (not factorial-scaled) coefficients.
 *
 * R must provide +, -, * and the free functions zero_like(R) / one_like(R);
 * series_recip additionally needs inverse(R). The truncation order never
 * changes implicitly: binary operations require equal orders.
 */
template <class R>
class BasicSeries {
 public:
  explicit BasicSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw Error("series needs at least the constant coefficient");
  }

  /// c0 followed by zeros through order n.
  static BasicSeries constant(const R& c0, std::size_t order) {
    std::vector<R> c(order + 1, zero_like(c0));
    c[0] = c0;
    return BasicSeries(std::move(c));
  }

  std::size_t order() const { return c_.size() - 1; }
  const R& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<R>& coefficients() const { return c_; }

  friend bool operator==(const BasicSeries& a, const BasicSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<R> c_;
};

namespace detail {
template <class R>
void require_same_order(const BasicSeries<R>& a, const BasicSeries<R>& b) {
  if (a.order() != b.order()) throw OrderMismatch();
}
}  // namespace detail

template <class R>
BasicSeries<R> series_add(const BasicSeries<R>& a, const BasicSeries<R>& b) {
  detail::require_same_order(a, b);
  std::vector<R> c;
  c.reserve(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) c.push_back(a[i] + b[i]);
  return BasicSeries<R>(std::move(c));
}

template <class R>
BasicSeries<R> series_sub(const BasicSeries<R>& a, const BasicSeries<R>& b) {
  detail::require_same_order(a, b);
  std::vector<R> c;
  c.reserve(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) c.push_back(a[i] - b[i]);
  return BasicSeries<R>(std::move(c));
}

/// Truncated Cauchy product.
template <class R>
BasicSeries<R> series_mul(const BasicSeries<R>& a, const BasicSeries<R>& b) {
  detail::require_same_order(a, b);
  const std::size_t n = a.order();
  std::vector<R> c;
  c.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    R acc = a[0] * b[k];
    for (std::size_t i = 1; i <= k; ++i) acc = acc + a[i] * b[k - i];
    c.push_back(std::move(acc));
  }
  return BasicSeries<R>(std::move(c));
}

template <class R, class S>
BasicSeries<R> series_scale(const BasicSeries<R>& a, const S& s) {
  std::vector<R> c;
  c.reserve(a.order() + 1);
  for (const auto& x : a.coefficients()) c.push_back(x * s);
  return BasicSeries<R>(std::move(c));
}

/// Multiplicative inverse by the triangular recurrence
/// b_0 = 1/a_0, b_n = -(1/a_0) sum_{i=1..n} a_i b_{n-i}.
template <class R>
BasicSeries<R> series_recip(const BasicSeries<R>& a) {
  if (a[0].is_zero()) throw NonInvertibleSeries();
  const std::size_t n = a.order();
  const R inv0 = inverse(a[0]);
  std::vector<R> b;
  b.reserve(n + 1);
  b.push_back(inv0);
  for (std::size_t k = 1; k <= n; ++k) {
    R acc = a[1] * b[k - 1];
    for (std::size_t i = 2; i <= k; ++i) acc = acc + a[i] * b[k - i];
    b.push_back(-(inv0 * acc));
  }
  return BasicSeries<R>(std::move(b));
}

/// a^k by binary powering; a^0 is the unit series.
template <class R>
BasicSeries<R> series_pow(const BasicSeries<R>& a, unsigned k) {
  BasicSeries<R> result = BasicSeries<R>::constant(one_like(a[0]), a.order());
  BasicSeries<R> base = a;
  while (k > 0) {
    if (k & 1U) result = series_mul(result, base);
    k >>= 1U;
    if (k > 0) base = series_mul(base, base);
  }
  return result;
}

/// exp(c t) truncated at order n: coefficients c^m / m!.
template <class R>
BasicSeries<R> exp_scaled_series(const R& c, std::size_t order) {
  std::vector<R> out;
  out.reserve(order + 1);
  out.push_back(one_like(c));
  R power = one_like(c);
  for (std::size_t m = 1; m <= order; ++m) {
    power = power * c;
    out.push_back(power * inverse_factorial(static_cast<long>(m)));
  }
  return BasicSeries<R>(std::move(out));
}

using TruncatedSeries = BasicSeries<FieldElement>;

}  // namespace apostol
