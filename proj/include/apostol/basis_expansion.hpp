#pragma once

#include <string>
#include <utility>
#include <vector>

#include "apostol/combinatorics.hpp"
#include "apostol/operator_calculus.hpp"
#include "apostol/special_polynomials.hpp"

namespace apostol {

enum class ExpansionMethod { Oracle, Theorem1Literal, CorrectedConjecture };

inline const char* method_name(ExpansionMethod m) {
  switch (m) {
    case ExpansionMethod::Oracle: return "oracle";
    case ExpansionMethod::Theorem1Literal: return "theorem1-literal";
    case ExpansionMethod::CorrectedConjecture: return "corrected-conjecture";
  }
  return "?";
}

/// q(x) = sum_{j=j_lo}^{j_hi} b_j B_j^{(k)}(x | lambda). An empty range
/// (j_hi < j_lo) is the empty expansion.
struct BasisExpansion {
  ExpansionMethod method;
  unsigned k;
  LambdaMode mode;
  long j_lo;
  long j_hi;
  std::vector<FieldElement> coefficients;
  /// The reconstruction equals q identically.
  bool exact;

  const FieldElement& coefficient(long j) const { return coefficients.at(static_cast<std::size_t>(j - j_lo)); }
};

/// sum_j b_j B_j^{(k)}(x | lambda).
inline XPolynomial reconstruct(const BasisExpansion& e) {
  XPolynomial sum(e.mode);
  for (long j = e.j_lo; j <= e.j_hi; ++j) {
    const FieldElement& b = e.coefficient(j);
    if (b.is_zero()) continue;
    sum += apostol_bernoulli_poly(static_cast<unsigned>(j), e.k, e.mode) * b;
  }
  return sum;
}

inline XPolynomial reconstruct(const BasisExpansion& e, const LambdaMode& mode) {
  if (!(e.mode == mode)) throw VariantMismatch("expansion built for a different lambda mode");
  return reconstruct(e);
}

namespace detail {

inline long effective_degree(const XPolynomial& q) { return q.is_zero() ? 0 : q.degree(); }

inline void require_mode(const XPolynomial& q, const LambdaMode& mode) {
  if (!(q.mode() == mode)) throw VariantMismatch("polynomial and expansion modes differ");
}

inline BasisExpansion finish(BasisExpansion e, const XPolynomial& q) {
  e.exact = reconstruct(e) == q;
  return e;
}

}  // namespace detail

/**
 * Exact expansion by back-substitution on the degree-triangular system.
 *
 * For lambda != 1 the order-k family vanishes below index k and
 * B_j^{(k)}(x | lambda) has degree j - k, so the basis window is
 * j = k .. k + deg q. At lambda = 1 the classical B_j^{(k)}(x) is monic of
 * degree j and the window is j = 0 .. deg q.
 */
inline BasisExpansion expand_oracle(const XPolynomial& q, unsigned k, const LambdaMode& mode) {
  detail::require_mode(q, mode);
  const long d = detail::effective_degree(q);
  const long lo = mode.is_one() ? 0 : static_cast<long>(k);
  BasisExpansion e{ExpansionMethod::Oracle, k, mode, lo, lo + d, std::vector<FieldElement>(d + 1, mode.zero()), false};
  XPolynomial residual = q;
  for (long i = d; i >= 0; --i) {
    FieldElement top = residual.coefficient(static_cast<std::size_t>(i));
    if (top.is_zero()) continue;
    XPolynomial basis = apostol_bernoulli_poly(static_cast<unsigned>(lo + i), k, mode);
    FieldElement b = top / basis.coefficient(static_cast<std::size_t>(i));
    e.coefficients[static_cast<std::size_t>(i)] = b;
    residual -= basis * b;
  }
  e.exact = residual.is_zero();
  return e;
}

/// b_j = (1/j!) sum_{a=0}^{k} (-1)^a C(k,a) lambda^a (D^{j-k} q)(a) for
/// j = k .. deg q, reproduced as printed; exactness is decided by reconstruction.
inline BasisExpansion theorem1_coefficients(const XPolynomial& q, unsigned k, const LambdaMode& mode) {
  detail::require_mode(q, mode);
  const long n = q.degree();
  BasisExpansion e{ExpansionMethod::Theorem1Literal, k, mode, static_cast<long>(k), n, {}, false};
  for (long j = k; j <= n; ++j) {
    XPolynomial dq = q.derivative(static_cast<std::size_t>(j - static_cast<long>(k)));
    FieldElement closed = lambda_power_at_zero(dq, k, mode, OperatorVariant::PaperLemma);
    e.coefficients.push_back(closed * inverse_factorial(j));
  }
  return detail::finish(std::move(e), q);
}

namespace detail {

inline FieldElement corrected_coefficient(const XPolynomial& q, unsigned k, long j, const LambdaMode& mode) {
  XPolynomial dq = q.derivative(static_cast<std::size_t>(j - static_cast<long>(k)));
  return lambda_power_at_zero(dq, k, mode, OperatorVariant::DirectIteration) * inverse_factorial(j);
}

}  // namespace detail

/// b_j = (1/j!) (Lambda^k D^{j-k} q)(0) with Lambda^k iterated directly, over
/// the full window j = k .. k + deg q. Unsupported at lambda = 1, where the
/// basis window starts at 0 and the low indices have no such formula.
inline BasisExpansion corrected_coefficients(const XPolynomial& q, unsigned k, const LambdaMode& mode) {
  detail::require_mode(q, mode);
  if (mode.is_one()) throw UnsupportedMode("corrected expansion is not defined at lambda = 1");
  const long d = detail::effective_degree(q);
  BasisExpansion e{ExpansionMethod::CorrectedConjecture, k, mode, static_cast<long>(k), static_cast<long>(k) + d, {}, false};
  for (long j = e.j_lo; j <= e.j_hi; ++j) e.coefficients.push_back(detail::corrected_coefficient(q, k, j, mode));
  return detail::finish(std::move(e), q);
}

/// The same formula restricted to j = k .. deg q, which is the part that
/// remains meaningful at lambda = 1 (any mode is accepted).
inline std::vector<FieldElement> corrected_upper_coefficients(const XPolynomial& q, unsigned k, const LambdaMode& mode) {
  detail::require_mode(q, mode);
  std::vector<FieldElement> out;
  for (long j = k; j <= q.degree(); ++j) out.push_back(detail::corrected_coefficient(q, k, j, mode));
  return out;
}

}  // namespace apostol
