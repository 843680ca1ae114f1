#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "apostol/lambda_poly.hpp"

namespace apostol {

/**
 * Element of the rational function field Q(lambda).
 *
 * Canonical form: gcd(num, den) = 1 over Q[lambda], den is monic, and zero is
 * 0/1. Equality is therefore structural.
 */
class LambdaRatFunc {
 public:
  LambdaRatFunc() : den_(BigRational(1)) {}
  LambdaRatFunc(const BigRational& c) : num_(c), den_(BigRational(1)) {}  // NOLINT(google-explicit-constructor)
  LambdaRatFunc(LambdaPoly p) : num_(std::move(p)), den_(BigRational(1)) {}  // NOLINT(google-explicit-constructor)

  /// num/den in canonical form. Throws DivisionByZero for a zero denominator.
  static LambdaRatFunc canonical(LambdaPoly num, LambdaPoly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    LambdaRatFunc r;
    if (num.is_zero()) return r;
    if (!den.is_constant()) {
      LambdaPoly g = LambdaPoly::gcd(num, den);
      if (!g.is_constant()) {
        num = LambdaPoly::exact_div(num, g);
        den = LambdaPoly::exact_div(den, g);
      }
    }
    BigRational lead_inv = den.leading().inverse();
    r.num_ = num * lead_inv;
    r.den_ = den * lead_inv;
    return r;
  }

  static LambdaRatFunc variable() { return LambdaRatFunc(LambdaPoly::variable()); }

  const LambdaPoly& numerator() const { return num_; }
  const LambdaPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == LambdaPoly(BigRational(1)); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  /// Exact substitution lambda = at; PoleError when den(at) = 0.
  BigRational evaluate(const BigRational& at) const {
    BigRational d = den_.evaluate(at);
    if (d.is_zero()) throw PoleError("pole at lambda = " + at.str());
    return num_.evaluate(at) / d;
  }

  LambdaRatFunc inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return canonical(den_, num_);
  }

  LambdaRatFunc operator-() const {
    LambdaRatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend LambdaRatFunc operator+(const LambdaRatFunc& a, const LambdaRatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return canonical(a.num_ + b.num_, a.den_);
    if (b.den_.is_constant()) return from_parts(a.num_ + b.num_ * a.den_, a.den_);
    if (a.den_.is_constant()) return from_parts(a.num_ * b.den_ + b.num_, b.den_);
    return canonical(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LambdaRatFunc operator-(const LambdaRatFunc& a, const LambdaRatFunc& b) { return a + (-b); }

  friend LambdaRatFunc operator*(const LambdaRatFunc& a, const LambdaRatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Cross-cancellation keeps the product canonical: gcd(a.num, b.den) and
    // gcd(b.num, a.den) are the only possible common factors.
    LambdaPoly g1 = LambdaPoly::gcd(a.num_, b.den_);
    LambdaPoly g2 = LambdaPoly::gcd(b.num_, a.den_);
    LambdaPoly an = g1.is_constant() ? a.num_ : LambdaPoly::exact_div(a.num_, g1);
    LambdaPoly bd = g1.is_constant() ? b.den_ : LambdaPoly::exact_div(b.den_, g1);
    LambdaPoly bn = g2.is_constant() ? b.num_ : LambdaPoly::exact_div(b.num_, g2);
    LambdaPoly ad = g2.is_constant() ? a.den_ : LambdaPoly::exact_div(a.den_, g2);
    LambdaPoly den = ad * bd;
    BigRational lead_inv = den.leading().inverse();
    LambdaRatFunc r;
    r.num_ = (an * bn) * lead_inv;
    r.den_ = den * lead_inv;
    return r;
  }
  friend LambdaRatFunc operator*(const LambdaRatFunc& a, const BigRational& s) {
    if (s.is_zero()) return {};
    LambdaRatFunc r = a;
    r.num_ = r.num_ * s;
    return r;
  }
  friend LambdaRatFunc operator/(const LambdaRatFunc& a, const LambdaRatFunc& b) { return a * b.inverse(); }

  LambdaRatFunc& operator+=(const LambdaRatFunc& o) { return *this = *this + o; }
  LambdaRatFunc& operator-=(const LambdaRatFunc& o) { return *this = *this - o; }
  LambdaRatFunc& operator*=(const LambdaRatFunc& o) { return *this = *this * o; }

  friend bool operator==(const LambdaRatFunc& a, const LambdaRatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Rendering with rational content pulled out, e.g. "-2L/(L-1)^2",
  /// "(L-1)/2", "L+1". Denominators that are a power of a linear factor are
  /// shown factored.
  std::string str(const RenderStyle& style = {}) const;

 private:
  // a/d with gcd(a, d) = 1 already known (d monic).
  static LambdaRatFunc from_parts(LambdaPoly num, LambdaPoly den) {
    LambdaRatFunc r;
    if (num.is_zero()) return r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  LambdaPoly num_;
  LambdaPoly den_;
};

inline LambdaRatFunc ratfunc_canonical(LambdaPoly num, LambdaPoly den) {
  return LambdaRatFunc::canonical(std::move(num), std::move(den));
}

inline BigRational evaluate_at(const LambdaRatFunc& f, const BigRational& at) { return f.evaluate(at); }

namespace detail {

inline std::size_t term_count(const std::vector<BigInt>& p) {
  std::size_t n = 0;
  for (const auto& c : p) n += (c != 0);
  return n;
}

/// If p = (u*L + v)^m with integers u > 0, v, return the linear factor.
inline bool linear_power(const std::vector<BigInt>& p, std::vector<BigInt>& linear) {
  const std::size_t m = p.size() - 1;
  if (m < 2 || p.back() <= 0) return false;
  BigInt u;
  if (mpz_root(u.get_mpz_t(), p.back().get_mpz_t(), m) == 0) return false;
  BigInt scale = BigInt(static_cast<unsigned long>(m));
  BigInt upow;
  mpz_pow_ui(upow.get_mpz_t(), u.get_mpz_t(), m - 1);
  scale *= upow;
  if (!mpz_divisible_p(p[m - 1].get_mpz_t(), scale.get_mpz_t())) return false;
  BigInt v = p[m - 1] / scale;
  std::vector<BigInt> acc{1};
  for (std::size_t e = 0; e < m; ++e) {
    std::vector<BigInt> next(acc.size() + 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i] * v;
      next[i + 1] += acc[i] * u;
    }
    acc = std::move(next);
  }
  if (acc != p) return false;
  linear = {v, u};
  return true;
}

inline bool has_top_level_sign(const std::string& s, const std::string& minus) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (depth == 0 && i > 0 && (c == '+' || s.compare(i, minus.size(), minus) == 0)) return true;
  }
  return false;
}

}  // namespace detail

inline std::string LambdaRatFunc::str(const RenderStyle& style) const {
  if (is_zero()) return "0";
  auto [num_content, num_prim] = num_.content_primitive();
  auto [den_content, den_prim] = den_.content_primitive();
  BigRational scalar = num_content / den_content;
  BigInt a = scalar.numerator();
  BigInt b = scalar.denominator();
  bool negative = a < 0;
  if (negative) a = -a;

  const bool num_trivial = num_prim.size() == 1;
  const bool den_trivial = den_prim.size() == 1;
  const bool has_den = !den_trivial || b != 1;

  std::string num_str;
  if (num_trivial) {
    num_str = a.get_str();
  } else {
    std::string p = LambdaPoly::render_integer(num_prim, style);
    bool multi = detail::term_count(num_prim) > 1;
    if (a == 1) num_str = (multi && has_den) ? "(" + p + ")" : p;
    else num_str = a.get_str() + (multi ? "(" + p + ")" : p);
  }

  std::string den_str;
  if (has_den) {
    if (den_trivial) {
      den_str = b.get_str();
    } else {
      std::string p;
      std::vector<BigInt> linear;
      if (detail::linear_power(den_prim, linear)) {
        p = "(" + LambdaPoly::render_integer(linear, style) + ")^" + std::to_string(den_prim.size() - 1);
      } else if (detail::term_count(den_prim) > 1) {
        p = "(" + LambdaPoly::render_integer(den_prim, style) + ")";
      } else {
        p = LambdaPoly::render_integer(den_prim, style);
      }
      den_str = (b == 1) ? p : "(" + b.get_str() + p + ")";
    }
  }

  std::string out = negative ? style.minus : "";
  out += num_str;
  if (has_den) out += "/" + den_str;
  return out;
}

}  // namespace apostol
