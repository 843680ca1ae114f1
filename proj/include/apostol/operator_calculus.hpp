#pragma once

#include "apostol/combinatorics.hpp"
#include "apostol/x_polynomial.hpp"

namespace apostol {

/// How (Lambda^k f)(0) is evaluated.
enum class OperatorVariant {
  /// Literal k-fold application of Lambda; the ground truth.
  DirectIteration,
  /// sum_{l=0}^{k} (-1)^l C(k,l) lambda^l f(l), the closed form as printed.
  PaperLemma,
  /// sum_{l=0}^{k} (-1)^{k-l} C(k,l) lambda^l f(l).
  CorrectedSign,
};

inline XPolynomial shift_poly(const XPolynomial& p, const FieldElement& h) { return p.shift(h); }

/// Lambda p(x) = lambda p(x+1) - p(x).
inline XPolynomial lambda_op(const XPolynomial& p, const LambdaMode& mode) {
  if (!(p.mode() == mode)) throw VariantMismatch("polynomial and operator modes differ");
  return p.shift(mode.one()) * mode.lambda() - p;
}

/// D^s p.
inline XPolynomial d_op(const XPolynomial& p, unsigned s) { return p.derivative(s); }

/// Lambda^k p by repeated application.
inline XPolynomial lambda_power(const XPolynomial& p, unsigned k, const LambdaMode& mode) {
  XPolynomial r = p;
  for (unsigned i = 0; i < k; ++i) r = lambda_op(r, mode);
  return r;
}

inline FieldElement lambda_power_at_zero(const XPolynomial& p, unsigned k, const LambdaMode& mode,
                                         OperatorVariant variant) {
  if (variant == OperatorVariant::DirectIteration) return lambda_power(p, k, mode).evaluate(mode.zero());
  FieldElement acc = mode.zero();
  FieldElement lambda_pow = mode.one();
  for (unsigned l = 0; l <= k; ++l) {
    int sign = variant == OperatorVariant::PaperLemma ? parity_sign(l) : parity_sign(static_cast<long>(k - l));
    BigRational weight = BigRational(binomial(k, l)) * BigRational(sign);
    acc += lambda_pow * p.evaluate(BigRational(l)) * weight;
    lambda_pow = lambda_pow * mode.lambda();
  }
  return acc;
}

/// Whether Lambda D p = D Lambda p holds exactly.
inline bool commutator_check(const XPolynomial& p, const LambdaMode& mode) {
  return lambda_op(d_op(p, 1), mode) == d_op(lambda_op(p, mode), 1);
}

}  // namespace apostol
