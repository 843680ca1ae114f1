#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "apostol/big_rational.hpp"

namespace apostol {

/// Dense univariate polynomial over Q in the parameter lambda.
/// Index i of the coefficient list holds the coefficient of lambda^i; the
/// zero polynomial is the empty list.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  explicit LambdaPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }
  LambdaPoly(const BigRational& constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) c_.push_back(constant);
  }

  /// The polynomial lambda.
  static LambdaPoly variable() { return LambdaPoly({BigRational(0), BigRational(1)}); }

  const std::vector<BigRational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const BigRational& leading() const { return c_.back(); }
  BigRational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }
  bool is_constant() const { return c_.size() <= 1; }

  BigRational evaluate(const BigRational& at) const {
    BigRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  LambdaPoly monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
  }

  LambdaPoly operator-() const {
    LambdaPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  LambdaPoly& operator+=(const LambdaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  LambdaPoly& operator-=(const LambdaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }

  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return LambdaPoly(std::move(r));
  }
  friend LambdaPoly operator*(LambdaPoly a, const BigRational& s) {
    if (s.is_zero()) return {};
    for (auto& c : a.c_) c *= s;
    return a;
  }

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  static std::pair<LambdaPoly, LambdaPoly> divmod(const LambdaPoly& a, const LambdaPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {LambdaPoly(), a};
    std::vector<BigRational> rem = a.c_;
    std::vector<BigRational> quo(a.c_.size() - b.c_.size() + 1);
    BigRational inv_lead = b.leading().inverse();
    for (long i = a.degree() - b.degree(); i >= 0; --i) {
      BigRational f = rem[static_cast<std::size_t>(i) + b.c_.size() - 1] * inv_lead;
      quo[static_cast<std::size_t>(i)] = f;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= f * b.c_[j];
    }
    return {LambdaPoly(std::move(quo)), LambdaPoly(std::move(rem))};
  }

  /// Exact quotient; the caller guarantees b divides a.
  static LambdaPoly exact_div(const LambdaPoly& a, const LambdaPoly& b) { return divmod(a, b).first; }

  /// Monic gcd over Q[lambda]; gcd(0, 0) = 0.
  static LambdaPoly gcd(const LambdaPoly& a, const LambdaPoly& b);

  /// Integer content split: *this = content * primitive, where primitive has
  /// coprime integer coefficients and positive leading coefficient.
  std::pair<BigRational, std::vector<BigInt>> content_primitive() const;

  /// Descending-power rendering with integer coefficients, e.g. "L^2-2L+1".
  /// Only meaningful for integer coefficient lists.
  static std::string render_integer(const std::vector<BigInt>& coeffs, const RenderStyle& style);

  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<BigRational> c_;
};

namespace detail {

using IntPoly = std::vector<BigInt>;

inline void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline BigInt int_content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline IntPoly primitive_part(IntPoly p) {
  trim_int(p);
  if (p.empty()) return p;
  BigInt g = int_content(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

/// Pseudo-remainder of a by b over Z (b nonzero).
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (a.size() >= b.size()) {
    BigInt la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim_int(a);
  }
  return a;
}

}  // namespace detail

inline std::pair<BigRational, std::vector<BigInt>> LambdaPoly::content_primitive() const {
  if (is_zero()) return {BigRational(0), {}};
  BigInt lcm_den = 1;
  for (const auto& c : c_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.raw().get_den_mpz_t());
  detail::IntPoly ints;
  ints.reserve(c_.size());
  for (const auto& c : c_) ints.push_back(c.numerator() * (lcm_den / c.denominator()));
  BigInt g = detail::int_content(ints);
  if (ints.back() < 0) g = -g;
  for (auto& v : ints) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return {BigRational::normalize(g, lcm_den), std::move(ints)};
}

inline LambdaPoly LambdaPoly::gcd(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return LambdaPoly(BigRational(1));
  detail::IntPoly x = a.content_primitive().second;
  detail::IntPoly y = b.content_primitive().second;
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    detail::IntPoly r = detail::primitive_part(detail::pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<BigRational> out;
  out.reserve(x.size());
  for (const auto& v : x) out.emplace_back(v);
  return LambdaPoly(std::move(out)).monic();
}

inline std::string LambdaPoly::render_integer(const std::vector<BigInt>& coeffs, const RenderStyle& style) {
  std::string out;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const BigInt& c = coeffs[k];
    if (c == 0) continue;
    bool negative = c < 0;
    BigInt mag = negative ? BigInt(-c) : c;
    if (negative) out += style.minus;
    else if (!first) out += "+";
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += style.variable;
    if (k >= 2) out += "^" + std::to_string(k);
    first = false;
  }
  return out.empty() ? "0" : out;
}

}  // namespace apostol
