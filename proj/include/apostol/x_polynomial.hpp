#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "apostol/combinatorics.hpp"
#include "apostol/field_element.hpp"

namespace apostol {

/// Dense polynomial in x whose coefficients live in the field selected by a
/// LambdaMode. Index i holds the coefficient of x^i; no trailing zeros.
class XPolynomial {
 public:
  explicit XPolynomial(LambdaMode mode) : mode_(std::move(mode)) {}

  XPolynomial(LambdaMode mode, std::vector<FieldElement> coeffs)
      : mode_(std::move(mode)), c_(std::move(coeffs)) {
    for (const auto& c : c_) {
      if (!mode_.owns(c)) throw VariantMismatch("coefficient outside the mode's field");
    }
    trim();
  }

  /// Polynomial with rational coefficients lifted into the mode's field.
  static XPolynomial from_rationals(const LambdaMode& mode, const std::vector<BigRational>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs) c.push_back(mode.constant(r));
    return XPolynomial(mode, std::move(c));
  }

  static XPolynomial constant(const LambdaMode& mode, const FieldElement& c) { return XPolynomial(mode, {c}); }

  /// c * x^power
  static XPolynomial monomial(const LambdaMode& mode, std::size_t power, const FieldElement& c) {
    std::vector<FieldElement> v(power + 1, mode.zero());
    v[power] = c;
    return XPolynomial(mode, std::move(v));
  }
  static XPolynomial monomial(const LambdaMode& mode, std::size_t power) {
    return monomial(mode, power, mode.one());
  }

  const LambdaMode& mode() const { return mode_; }
  const std::vector<FieldElement>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  FieldElement coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : mode_.zero(); }
  FieldElement leading() const { return c_.empty() ? mode_.zero() : c_.back(); }

  FieldElement evaluate(const FieldElement& at) const {
    FieldElement acc = mode_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }
  FieldElement evaluate(const BigRational& at) const { return evaluate(mode_.constant(at)); }

  /// s-th derivative in x; zero when s exceeds the degree.
  XPolynomial derivative(std::size_t s = 1) const {
    if (s == 0) return *this;
    if (c_.size() <= s) return XPolynomial(mode_);
    std::vector<FieldElement> out;
    out.reserve(c_.size() - s);
    for (std::size_t i = s; i < c_.size(); ++i) {
      out.push_back(c_[i] * BigRational(factorial_ratio(static_cast<long>(i), static_cast<long>(i - s))));
    }
    return XPolynomial(mode_, std::move(out));
  }

  /// p(x + h): coefficient j is sum_{i>=j} C(i, j) h^{i-j} c_i.
  XPolynomial shift(const FieldElement& h) const {
    if (c_.empty() || h.is_zero()) return *this;
    std::vector<FieldElement> hp{mode_.one()};
    for (std::size_t i = 1; i < c_.size(); ++i) hp.push_back(hp.back() * h);
    std::vector<FieldElement> out(c_.size(), mode_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j <= i; ++j) {
        out[j] += c_[i] * hp[i - j] * BigRational(binomial(static_cast<long>(i), static_cast<long>(j)));
      }
    }
    return XPolynomial(mode_, std::move(out));
  }
  XPolynomial shift(const BigRational& h) const { return shift(mode_.constant(h)); }

  XPolynomial operator-() const {
    XPolynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  XPolynomial& operator+=(const XPolynomial& o) {
    require_same_mode(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mode_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  XPolynomial& operator-=(const XPolynomial& o) {
    require_same_mode(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mode_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
  friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }

  friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
    a.require_same_mode(b);
    if (a.is_zero() || b.is_zero()) return XPolynomial(a.mode_);
    std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, a.mode_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return XPolynomial(a.mode_, std::move(r));
  }
  friend XPolynomial operator*(const XPolynomial& a, const FieldElement& s) {
    if (!a.mode_.owns(s)) throw VariantMismatch("scalar outside the mode's field");
    if (s.is_zero()) return XPolynomial(a.mode_);
    XPolynomial r = a;
    for (auto& c : r.c_) c = c * s;
    return r;
  }
  friend XPolynomial operator*(const XPolynomial& a, const BigRational& s) {
    if (s.is_zero()) return XPolynomial(a.mode_);
    XPolynomial r = a;
    for (auto& c : r.c_) c = c * s;
    return r;
  }

  friend bool operator==(const XPolynomial& a, const XPolynomial& b) {
    return a.mode_ == b.mode_ && a.c_ == b.c_;
  }

  /// Ascending powers of x joined by " + " / " - ", e.g. "-L/(L-1) - x",
  /// "-1/2 + x". Compound coefficients of x^i (i > 0) are parenthesized.
  std::string str(const RenderStyle& style = {}) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      bool negative = false;
      std::string term = render_term(i, negative, style);
      if (first) out += negative ? style.minus + term : term;
      else out += negative ? " " + style.minus + " " + term : " + " + term;
      first = false;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  void require_same_mode(const XPolynomial& o) const {
    if (!(mode_ == o.mode_)) throw VariantMismatch("polynomials from different lambda modes");
  }

  // Magnitude rendering of the i-th term; the sign is reported separately.
  std::string render_term(std::size_t i, bool& negative, const RenderStyle& style) const {
    const RenderStyle machine = RenderStyle::machine();
    std::string ascii = c_[i].str(machine);
    std::string coeff = c_[i].str(style);
    bool compound = detail::has_top_level_sign(ascii, machine.minus);
    negative = !compound && !ascii.empty() && ascii.front() == '-';
    if (negative) coeff = coeff.substr(style.minus.size());
    std::string power = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (i == 0) return coeff;
    if (!compound && coeff == "1") return power;
    return (compound ? "(" + coeff + ")" : coeff) + "*" + power;
  }

  LambdaMode mode_;
  std::vector<FieldElement> c_;
};

// Ring hooks so that polynomials in x can serve as series coefficients.
inline XPolynomial zero_like(const XPolynomial& p) { return XPolynomial(p.mode()); }
inline XPolynomial one_like(const XPolynomial& p) { return XPolynomial::constant(p.mode(), p.mode().one()); }

/// Re-express a polynomial in another mode: rational coefficients are lifted,
/// symbolic coefficients are evaluated at a numeric target lambda.
inline XPolynomial embed(const XPolynomial& p, const LambdaMode& target) {
  std::vector<FieldElement> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.push_back(specialize(x, target));
  return XPolynomial(target, std::move(c));
}

}  // namespace apostol
