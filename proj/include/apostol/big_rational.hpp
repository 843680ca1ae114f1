#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>
#include <utility>

#include "apostol/errors.hpp"

namespace apostol {

using BigInt = mpz_class;

/// Spelling used when rendering symbolic values. Machine output uses ASCII
/// ("L", "-"); the human style spells the parameter as a Greek lambda.
struct RenderStyle {
  std::string variable = "L";
  std::string minus = "-";

  static RenderStyle machine() { return {}; }
  static RenderStyle human() { return {"λ", "−"}; }
};

/**
 * Exact rational number in canonical form.
 *
 * The denominator is always positive, numerator and denominator are coprime
 * and zero is stored as 0/1. GMP's mpq canonicalization maintains these
 * invariants after every operation.
 */
class BigRational {
 public:
  BigRational() = default;

  template <std::integral I>
  BigRational(I value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  BigRational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)

  /// Canonical n/d. Throws DivisionByZero when d == 0.
  static BigRational normalize(const BigInt& n, const BigInt& d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    BigRational r;
    r.q_ = mpq_class(n, d);
    r.q_.canonicalize();
    return r;
  }

  /// Accepts "p", "p/q" with optional sign; surrounding whitespace is not allowed.
  static BigRational parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
      std::string_view digits = s;
      if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
      if (digits.empty()) throw ParseError("malformed rational '" + std::string(text) + "'");
      for (char c : digits) {
        if (c < '0' || c > '9') throw ParseError("malformed rational '" + std::string(text) + "'");
      }
      std::string owned(s.front() == '+' ? s.substr(1) : s);
      return BigInt(owned, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_int(text));
    BigInt n = parse_int(text.substr(0, slash));
    BigInt d = parse_int(text.substr(slash + 1));
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    return normalize(n, d);
  }

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  BigRational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return from_mpq(mpq_class(1 / q_));
  }

  BigRational abs() const { return from_mpq(mpq_class(::abs(q_))); }

  /// Integer power; negative exponents invert.
  BigRational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return normalize(n, d);
  }

  std::string str(const RenderStyle& style = {}) const {
    std::string body = mpz_class(::abs(q_.get_num())).get_str();
    if (q_.get_den() != 1) body += "/" + q_.get_den().get_str();
    return sign() < 0 ? style.minus + body : body;
  }

  BigRational operator-() const { return from_mpq(-q_); }

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static BigRational from_mpq(mpq_class q) {
    BigRational r;
    r.q_ = std::move(q);
    return r;
  }

  mpq_class q_;
};

inline BigRational rat_normalize(const BigInt& n, const BigInt& d) { return BigRational::normalize(n, d); }

}  // namespace apostol
