#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "apostol/lambda_rat_func.hpp"

namespace apostol {

/**
 * Scalar of the active coefficient field: either Q (a fixed rational lambda)
 * or Q(lambda) (symbolic lambda). Binary operations require both operands to
 * hold the same alternative and throw VariantMismatch otherwise. Scaling by a
 * BigRational is always allowed since Q embeds in both fields.
 */
class FieldElement {
 public:
  using Storage = std::variant<BigRational, LambdaRatFunc>;

  FieldElement() = default;  // rational zero
  FieldElement(BigRational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  FieldElement(LambdaRatFunc f) : v_(std::move(f)) {}  // NOLINT(google-explicit-constructor)

  bool is_symbolic() const { return std::holds_alternative<LambdaRatFunc>(v_); }
  const BigRational& rational() const { return std::get<BigRational>(v_); }
  const LambdaRatFunc& symbolic() const { return std::get<LambdaRatFunc>(v_); }

  bool is_zero() const {
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
  }
  bool is_one() const {
    return std::visit([](const auto& x) { return x.is_one(); }, v_);
  }

  FieldElement zero_like() const {
    return is_symbolic() ? FieldElement(LambdaRatFunc()) : FieldElement(BigRational());
  }
  FieldElement one_like() const {
    return is_symbolic() ? FieldElement(LambdaRatFunc(BigRational(1))) : FieldElement(BigRational(1));
  }

  FieldElement inverse() const {
    return std::visit([](const auto& x) { return FieldElement(x.inverse()); }, v_);
  }

  FieldElement operator-() const {
    return std::visit([](const auto& x) { return FieldElement(-x); }, v_);
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero field element");
    return binary(a, b, [](const auto& x, const auto& y) { return x * y.inverse(); });
  }
  friend FieldElement operator*(const FieldElement& a, const BigRational& s) {
    return std::visit([&](const auto& x) { return FieldElement(x * s); }, a.v_);
  }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  /// Structural equality; elements of different fields never compare equal.
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.v_ == b.v_; }

  std::string str(const RenderStyle& style = {}) const {
    return std::visit([&](const auto& x) { return x.str(style); }, v_);
  }

 private:
  template <class Op>
  static FieldElement binary(const FieldElement& a, const FieldElement& b, Op op) {
    if (a.v_.index() != b.v_.index()) throw VariantMismatch();
    if (a.is_symbolic()) return FieldElement(op(a.symbolic(), b.symbolic()));
    return FieldElement(op(a.rational(), b.rational()));
  }

  Storage v_;
};

// Ring hooks used by the generic series and polynomial code.
inline FieldElement zero_like(const FieldElement& x) { return x.zero_like(); }
inline FieldElement one_like(const FieldElement& x) { return x.one_like(); }
inline FieldElement inverse(const FieldElement& x) { return x.inverse(); }

enum class FieldOp { Add, Sub, Mul, Div, Neg, Inv };

/// Dispatching form of the field operations; b is ignored for Neg and Inv.
inline FieldElement field_arith(FieldOp op, const FieldElement& a, const FieldElement& b = {}) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
    case FieldOp::Neg: return -a;
    case FieldOp::Inv: return a.inverse();
  }
  throw Error("unknown field operation");
}

/**
 * How lambda enters a computation: as the transcendental of Q(lambda), or
 * fixed to an exact rational value. The mode selects the FieldElement
 * alternative used by every coefficient of the computation.
 */
class LambdaMode {
 public:
  static LambdaMode symbolic() { return LambdaMode(); }
  static LambdaMode numeric(BigRational value) {
    LambdaMode m;
    m.value_ = std::move(value);
    return m;
  }
  /// "symbolic", or a rational literal "p" / "p/q".
  static LambdaMode parse(std::string_view text) {
    if (text == "symbolic") return symbolic();
    return numeric(BigRational::parse(text));
  }

  bool is_symbolic() const { return !value_.has_value(); }
  bool is_numeric() const { return value_.has_value(); }
  /// True for the classical branch lambda = 1.
  bool is_one() const { return value_.has_value() && value_->is_one(); }
  bool is_value(const BigRational& v) const { return value_.has_value() && *value_ == v; }
  const BigRational& value() const { return value_.value(); }

  FieldElement constant(const BigRational& c) const {
    return is_symbolic() ? FieldElement(LambdaRatFunc(c)) : FieldElement(c);
  }
  FieldElement zero() const { return constant(0); }
  FieldElement one() const { return constant(1); }
  /// lambda itself as a field element.
  FieldElement lambda() const {
    return is_symbolic() ? FieldElement(LambdaRatFunc::variable()) : FieldElement(*value_);
  }

  /// Whether x is an element of this mode's field.
  bool owns(const FieldElement& x) const { return x.is_symbolic() == is_symbolic(); }

  /// Machine spelling: "symbolic" or the rational literal.
  std::string key() const { return is_symbolic() ? "symbolic" : value_->str(); }

  friend bool operator==(const LambdaMode& a, const LambdaMode& b) { return a.value_ == b.value_; }

  /// Symbolic sorts first, then numeric values ascending.
  friend bool operator<(const LambdaMode& a, const LambdaMode& b) {
    if (a.is_symbolic() != b.is_symbolic()) return a.is_symbolic();
    if (a.is_symbolic()) return false;
    return *a.value_ < *b.value_;
  }

 private:
  LambdaMode() = default;
  std::optional<BigRational> value_;
};

/// Field element of `mode` evaluated at the numeric lambda of `target`.
/// Rational inputs pass through; symbolic inputs are substituted.
inline FieldElement specialize(const FieldElement& x, const LambdaMode& target) {
  if (target.is_symbolic()) {
    if (x.is_symbolic()) return x;
    return FieldElement(LambdaRatFunc(x.rational()));
  }
  if (!x.is_symbolic()) return x;
  return FieldElement(x.symbolic().evaluate(target.value()));
}

}  // namespace apostol
