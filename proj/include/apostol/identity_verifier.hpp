#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "apostol/basis_expansion.hpp"
#include "apostol/combinatorics.hpp"
#include "apostol/operator_calculus.hpp"
#include "apostol/special_polynomials.hpp"

namespace apostol {

// Catalog of checked identities, in report order.
enum class IdentityId {
  ID_DERIV,
  ID_DIFF,
  ID_LOWER_ORDER,
  ID_ZERO_ORDER,
  ID_LEMMA_CLOSED_FORM,
  ID_THM1,
  ID_COR_XN,
  ID_THM2,
  ID_THM3,
  ID_HANSEN,
  ID_EULER_RAMANUJAN,
  ID_THM4,
  ID_DILCHER,
  ID_THM5,
};

inline constexpr std::array<IdentityId, 14> kAllIdentities{
    IdentityId::ID_DERIV,          IdentityId::ID_DIFF,    IdentityId::ID_LOWER_ORDER,
    IdentityId::ID_ZERO_ORDER,     IdentityId::ID_LEMMA_CLOSED_FORM,
    IdentityId::ID_THM1,           IdentityId::ID_COR_XN,  IdentityId::ID_THM2,
    IdentityId::ID_THM3,           IdentityId::ID_HANSEN,  IdentityId::ID_EULER_RAMANUJAN,
    IdentityId::ID_THM4,           IdentityId::ID_DILCHER, IdentityId::ID_THM5,
};

inline const char* identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::ID_DERIV: return "ID_DERIV";
    case IdentityId::ID_DIFF: return "ID_DIFF";
    case IdentityId::ID_LOWER_ORDER: return "ID_LOWER_ORDER";
    case IdentityId::ID_ZERO_ORDER: return "ID_ZERO_ORDER";
    case IdentityId::ID_LEMMA_CLOSED_FORM: return "ID_LEMMA_CLOSED_FORM";
    case IdentityId::ID_THM1: return "ID_THM1";
    case IdentityId::ID_COR_XN: return "ID_COR_XN";
    case IdentityId::ID_THM2: return "ID_THM2";
    case IdentityId::ID_THM3: return "ID_THM3";
    case IdentityId::ID_HANSEN: return "ID_HANSEN";
    case IdentityId::ID_EULER_RAMANUJAN: return "ID_EULER_RAMANUJAN";
    case IdentityId::ID_THM4: return "ID_THM4";
    case IdentityId::ID_DILCHER: return "ID_DILCHER";
    case IdentityId::ID_THM5: return "ID_THM5";
  }
  return "?";
}

inline IdentityId parse_identity(std::string_view name) {
  for (IdentityId id : kAllIdentities) {
    if (name == identity_name(id)) return id;
  }
  throw ConfigError("unknown identity '" + std::string(name) + "'");
}

/// Identities in y as well as x; they are certified by sampling y.
inline bool is_bivariate(IdentityId id) {
  return id == IdentityId::ID_HANSEN || id == IdentityId::ID_DILCHER || id == IdentityId::ID_THM4 ||
         id == IdentityId::ID_THM5;
}

/// Identities about the classical (lambda = 1) polynomials only.
inline bool is_classical_only(IdentityId id) {
  return id == IdentityId::ID_HANSEN || id == IdentityId::ID_DILCHER || id == IdentityId::ID_EULER_RAMANUJAN;
}

/// n and k are interpreted per identity: for ID_LEMMA_CLOSED_FORM, k is the
/// operator power and n the degree of f = x^n; for ID_THM1, q = x^n; for
/// ID_HANSEN / ID_EULER_RAMANUJAN, n is the index m.
struct GridPoint {
  long n = 0;
  long k = 0;
  LambdaMode mode = LambdaMode::symbolic();
  std::optional<BigRational> y;

  friend bool operator==(const GridPoint& a, const GridPoint& b) {
    return a.n == b.n && a.k == b.k && a.mode == b.mode && a.y == b.y;
  }
  friend bool operator<(const GridPoint& a, const GridPoint& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.k != b.k) return a.k < b.k;
    if (!(a.mode == b.mode)) return a.mode < b.mode;
    return a.y < b.y;
  }
};

enum class Verdict { Pass, Fail };

struct CheckResult {
  GridPoint point;
  std::string variant;
  Verdict verdict = Verdict::Pass;
  /// Canonical rendering of LHS - RHS; present exactly when the check fails.
  std::optional<std::string> witness;
  /// Extra context such as both sides of a scalar identity.
  std::optional<std::string> detail;
};

struct ReportSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::string validity_domain;
};

struct IdentityReport {
  IdentityId id;
  std::vector<GridPoint> grid;
  std::vector<CheckResult> results;
  ReportSummary summary;
};

/// Desk-scale limits enforced on every grid.
struct GridBounds {
  long max_n_symbolic = 10;
  long max_n_numeric = 24;
  long max_k = 4;
  /// The Lemma's k is an operator power, not a polynomial order.
  long max_lemma_k = 5;
};

struct SuiteConfig {
  std::vector<IdentityId> ids{kAllIdentities.begin(), kAllIdentities.end()};
  std::vector<LambdaMode> modes{LambdaMode::symbolic(), LambdaMode::numeric(1), LambdaMode::numeric(2),
                                LambdaMode::numeric(-2), LambdaMode::numeric(BigRational::normalize(1, 3))};
  long relation_max_n = 10;  // ID_DERIV, ID_DIFF, ID_LOWER_ORDER, ID_ZERO_ORDER
  long relation_max_k = 4;
  long lemma_max_k = 5;
  long lemma_max_degree = 5;
  long thm1_max_degree = 6;
  long thm1_max_k = 3;
  long theorem_max_n = 8;  // ID_COR_XN, ID_THM2..ID_THM5
  long theorem_max_k = 3;
  long convolution_max_n = 10;  // ID_HANSEN, ID_DILCHER
  long er_min_m = 2;
  long er_max_m = 20;
  /// 0 selects the hardware concurrency.
  unsigned threads = 0;
  GridBounds bounds{};
};

/// Distinct y samples for a bivariate identity of degree `degree` in y:
/// degree + 2 points (2i - 1)/3, i = 0, 1, ...
inline std::vector<BigRational> y_samples(long degree) {
  std::vector<BigRational> ys;
  for (long i = 0; i < degree + 2; ++i) ys.push_back(BigRational::normalize(2 * i - 1, 3));
  return ys;
}

namespace detail {

inline CheckResult poly_check(const GridPoint& p, std::string variant, const XPolynomial& lhs, const XPolynomial& rhs) {
  XPolynomial diff = lhs - rhs;
  CheckResult r{p, std::move(variant), Verdict::Pass, std::nullopt, std::nullopt};
  if (!diff.is_zero()) {
    r.verdict = Verdict::Fail;
    r.witness = diff.str();
  }
  return r;
}

inline CheckResult scalar_check(const GridPoint& p, std::string variant, const FieldElement& lhs,
                                const FieldElement& rhs, std::optional<std::string> detail = std::nullopt) {
  FieldElement diff = lhs - rhs;
  CheckResult r{p, std::move(variant), Verdict::Pass, std::nullopt, std::move(detail)};
  if (!diff.is_zero()) {
    r.verdict = Verdict::Fail;
    r.witness = diff.str();
  }
  return r;
}

inline unsigned u(long v) { return static_cast<unsigned>(v); }

inline XPolynomial x_plus(const LambdaMode& mode, const BigRational& c) {
  return XPolynomial(mode, {mode.constant(c), mode.one()});
}

/// sum_{j=k}^{j_hi} (1/j!) sum_{a=0}^{k} s(a) C(k,a) lambda^a T(j,a) B_j^{(k)}(x | lambda)
/// with s(a) = (-1)^a as printed, or (-1)^{k-a} for the corrected sign.
inline XPolynomial bernoulli_basis_sum(long k, long j_hi, const LambdaMode& mode, bool corrected_sign,
                                       const std::function<XPolynomial(long j, long a)>& term) {
  XPolynomial sum(mode);
  for (long j = k; j <= j_hi; ++j) {
    XPolynomial coeff(mode);
    FieldElement lambda_pow = mode.one();
    for (long a = 0; a <= k; ++a) {
      int sign = corrected_sign ? parity_sign(k - a) : parity_sign(a);
      BigRational weight = BigRational(binomial(k, a)) * BigRational(sign) * inverse_factorial(j);
      coeff += term(j, a) * (lambda_pow * weight);
      lambda_pow = lambda_pow * mode.lambda();
    }
    if (!coeff.is_zero()) coeff = coeff * apostol_bernoulli_poly(u(j), u(k), mode);
    sum += coeff;
  }
  return sum;
}

/// The printed expansion and its mechanical repair (sum extended to
/// j = k..n+k, sign (-1)^{k-a}). The repair is only meaningful for lambda != 1.
inline std::vector<CheckResult> printed_and_corrected(
    const GridPoint& p, const XPolynomial& target,
    const std::function<XPolynomial(long j, long a)>& printed_term,
    const std::function<XPolynomial(long j, long a)>& corrected_term) {
  std::vector<CheckResult> out;
  XPolynomial printed = bernoulli_basis_sum(p.k, p.n, p.mode, false, printed_term);
  out.push_back(poly_check(p, "printed", printed, target));
  if (!p.mode.is_one()) {
    XPolynomial corrected = bernoulli_basis_sum(p.k, p.n + p.k, p.mode, true, corrected_term);
    out.push_back(poly_check(p, "corrected", corrected, target));
  }
  return out;
}

inline XPolynomial constant_poly(const LambdaMode& mode, const BigRational& c) {
  return XPolynomial::constant(mode, mode.constant(c));
}

/// sum_i C(n,i) P_i(x) P_{n-i}(y) for a classical family P.
inline XPolynomial convolution_lhs(long n, const BigRational& y, bool euler) {
  const LambdaMode classical = LambdaMode::numeric(1);
  XPolynomial sum(classical);
  for (long i = 0; i <= n; ++i) {
    XPolynomial pi = euler ? euler_poly(u(i)) : bernoulli_poly(u(i));
    XPolynomial pni = euler ? euler_poly(u(n - i)) : bernoulli_poly(u(n - i));
    sum += pi * (pni.evaluate(y) * BigRational(binomial(n, i)));
  }
  return sum;
}

inline std::vector<CheckResult> check_deriv(const GridPoint& p) {
  XPolynomial lhs = d_op(apostol_bernoulli_poly(u(p.n), u(p.k), p.mode), 1);
  XPolynomial rhs = p.n == 0 ? XPolynomial(p.mode)
                             : apostol_bernoulli_poly(u(p.n - 1), u(p.k), p.mode) * BigRational(p.n);
  return {poly_check(p, "printed", lhs, rhs)};
}

inline std::vector<CheckResult> check_diff(const GridPoint& p) {
  XPolynomial b = apostol_bernoulli_poly(u(p.n + 1), u(p.k), p.mode);
  XPolynomial lhs = (b.shift(BigRational(1)) * p.mode.lambda() - b) * BigRational::normalize(1, p.n + 1);
  XPolynomial rhs = apostol_bernoulli_poly(u(p.n), u(p.k - 1), p.mode);
  return {poly_check(p, "printed", lhs, rhs)};
}

inline std::vector<CheckResult> check_lower_order(const GridPoint& p) {
  XPolynomial lhs = lambda_op(apostol_bernoulli_poly(u(p.n), u(p.k), p.mode), p.mode);
  XPolynomial rhs = p.n == 0 ? XPolynomial(p.mode)
                             : apostol_bernoulli_poly(u(p.n - 1), u(p.k - 1), p.mode) * BigRational(p.n);
  return {poly_check(p, "printed", lhs, rhs)};
}

inline std::vector<CheckResult> check_zero_order(const GridPoint& p) {
  XPolynomial xn = XPolynomial::monomial(p.mode, u(p.n));
  return {poly_check(p, "bernoulli", apostol_bernoulli_poly(u(p.n), 0, p.mode), xn),
          poly_check(p, "euler", apostol_euler_poly(u(p.n), 0, p.mode), xn)};
}

inline std::vector<CheckResult> check_lemma(const GridPoint& p) {
  XPolynomial f = XPolynomial::monomial(p.mode, u(p.n));
  FieldElement direct = lambda_power_at_zero(f, u(p.k), p.mode, OperatorVariant::DirectIteration);
  std::vector<CheckResult> out;
  for (auto [variant, name] : {std::pair{OperatorVariant::PaperLemma, "printed"},
                               std::pair{OperatorVariant::CorrectedSign, "corrected-sign"}}) {
    FieldElement closed = lambda_power_at_zero(f, u(p.k), p.mode, variant);
    std::string detail = "direct=" + direct.str() + "; closed_form=" + closed.str();
    out.push_back(scalar_check(p, name, closed, direct, detail));
  }
  return out;
}

inline std::vector<CheckResult> check_thm1(const GridPoint& p) {
  XPolynomial q = XPolynomial::monomial(p.mode, u(p.n));
  std::vector<CheckResult> out;
  BasisExpansion literal = theorem1_coefficients(q, u(p.k), p.mode);
  out.push_back(poly_check(p, "literal", reconstruct(literal), q));

  BasisExpansion oracle = expand_oracle(q, u(p.k), p.mode);
  if (!p.mode.is_one()) {
    BasisExpansion corrected = corrected_coefficients(q, u(p.k), p.mode);
    CheckResult r = poly_check(p, "corrected", reconstruct(corrected), q);
    if (r.verdict == Verdict::Pass && corrected.coefficients != oracle.coefficients) {
      r.verdict = Verdict::Fail;
      r.witness = "coefficients differ from the oracle";
    }
    out.push_back(std::move(r));
  } else {
    // At lambda = 1 only the indices j >= k carry the corrected formula.
    std::vector<FieldElement> upper = corrected_upper_coefficients(q, u(p.k), p.mode);
    CheckResult r{p, "corrected", Verdict::Pass, std::nullopt, std::nullopt};
    for (std::size_t i = 0; i < upper.size(); ++i) {
      long j = p.k + static_cast<long>(i);
      FieldElement diff = upper[i] - oracle.coefficient(j);
      if (!diff.is_zero()) {
        r.verdict = Verdict::Fail;
        r.witness = "b_" + std::to_string(j) + ": " + diff.str();
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<CheckResult> check_cor_xn(const GridPoint& p) {
  const LambdaMode& mode = p.mode;
  const long n = p.n;
  const long k = p.k;
  auto term = [&](long j, long a) {
    long m = n - j + k;
    if (m < 0) return XPolynomial(mode);
    return constant_poly(mode, factorial_ratio(n, m) * BigRational(a).pow(m));
  };
  return printed_and_corrected(p, XPolynomial::monomial(mode, u(n)), term, term);
}

/// ID_THM2 (Euler) and ID_THM3 (Bernoulli): the order-k classical polynomial
/// expanded through its number table.
inline std::vector<CheckResult> check_order_k_expansion(const GridPoint& p, bool euler) {
  const LambdaMode& mode = p.mode;
  const LambdaMode classical = LambdaMode::numeric(1);
  const long n = p.n;
  const long k = p.k;
  NumberTable numbers = euler ? apostol_euler_numbers(u(k), u(n + k), classical)
                              : apostol_bernoulli_numbers(u(k), u(n + k), classical);
  XPolynomial target = embed(euler ? euler_poly(u(n), u(k)) : bernoulli_poly(u(n), u(k)), mode);
  auto term = [&](long j, long a) {
    long m = n - j + k;
    if (m < 0) return XPolynomial(mode);
    BigRational inner;
    for (long l = 0; l <= m; ++l) {
      inner += BigRational(binomial(m, l)) * BigRational(a).pow(l) * numbers.values[u(m - l)].rational();
    }
    return constant_poly(mode, factorial_ratio(n, m) * inner);
  };
  return printed_and_corrected(p, target, term, term);
}

inline std::vector<CheckResult> check_hansen(const GridPoint& p) {
  const LambdaMode classical = LambdaMode::numeric(1);
  const long m = p.n;
  const BigRational y = p.y.value();
  XPolynomial lhs = convolution_lhs(m, y, false);
  XPolynomial rhs = bernoulli_poly(u(m)).shift(y) * BigRational(1 - m);
  if (m >= 1) rhs += x_plus(classical, y - 1) * bernoulli_poly(u(m - 1)).shift(y) * BigRational(m);
  return {poly_check(p, "printed", lhs, rhs)};
}

inline std::vector<CheckResult> check_euler_ramanujan(const GridPoint& p) {
  const long m = p.n;
  NumberTable b = bernoulli_numbers_by_recurrence(u(std::max<long>(m, 0)));
  BigRational sum;
  for (long i = 2; i <= m - 2; ++i) {
    sum += BigRational(binomial(m, i)) * b.values[u(i)].rational() * b.values[u(m - i)].rational();
  }
  BigRational rhs = -sum / BigRational(m + 1);
  const FieldElement& lhs = b.values[u(m)];
  std::string detail = "B_m=" + lhs.str() + "; convolution=" + rhs.str();
  return {scalar_check(p, "printed", lhs, FieldElement(rhs), detail)};
}

inline std::vector<CheckResult> check_thm4(const GridPoint& p) {
  const LambdaMode& mode = p.mode;
  const long n = p.n;
  const long k = p.k;
  const BigRational y = p.y.value();
  XPolynomial target = embed(convolution_lhs(n, y, false), mode);
  auto term = [&](long j, long a) {
    const long s = j - k;
    const long m = n - s;
    if (m < 0) return XPolynomial(mode);
    const BigRational ay = BigRational(a) + y;
    BigRational v = BigRational(1 - n) * factorial_ratio(n, m) * bernoulli_poly(u(m)).evaluate(ay).rational();
    if (m >= 1) v += (ay - 1) * factorial_ratio(n, m - 1) * bernoulli_poly(u(m - 1)).evaluate(ay).rational();
    v += BigRational(s) * factorial_ratio(n, m) * bernoulli_poly(u(m)).evaluate(ay).rational();
    return constant_poly(mode, v);
  };
  return printed_and_corrected(p, target, term, term);
}

inline std::vector<CheckResult> check_dilcher(const GridPoint& p) {
  const LambdaMode classical = LambdaMode::numeric(1);
  const long n = p.n;
  const BigRational y = p.y.value();
  XPolynomial lhs = convolution_lhs(n, y, true);
  XPolynomial one_minus_x_minus_y = XPolynomial::from_rationals(classical, {1 - y, BigRational(-1)});
  XPolynomial rhs = one_minus_x_minus_y * euler_poly(u(n)).shift(y) * BigRational(2) +
                    euler_poly(u(n + 1)).shift(y) * BigRational(2);
  return {poly_check(p, "printed", lhs, rhs)};
}

inline std::vector<CheckResult> check_thm5(const GridPoint& p) {
  const LambdaMode& mode = p.mode;
  const long n = p.n;
  const long k = p.k;
  const BigRational y = p.y.value();
  XPolynomial target = embed(convolution_lhs(n, y, true), mode);
  // The braces as printed keep x inside; D^{j-k} q evaluated at a replaces x by a.
  auto printed = [&](long j, long a) {
    (void)a;
    const long s = j - k;
    const long m = n - s;
    if (m < 0) return XPolynomial(mode);
    XPolynomial em = embed(euler_poly(u(m)).shift(y), mode);
    XPolynomial em1 = embed(euler_poly(u(m + 1)).shift(y), mode);
    XPolynomial one_minus = XPolynomial::from_rationals(mode, {1 - y, BigRational(-1)});
    XPolynomial v = one_minus * em * factorial_ratio(n, m) - em1 * (BigRational(s) * factorial_ratio(n, m + 1)) +
                    em1 * factorial_ratio(n + 1, m + 1);
    return v * BigRational(2);
  };
  auto corrected = [&](long j, long a) {
    const long s = j - k;
    const long m = n - s;
    if (m < 0) return XPolynomial(mode);
    const BigRational ay = BigRational(a) + y;
    BigRational em = euler_poly(u(m)).evaluate(ay).rational();
    BigRational em1 = euler_poly(u(m + 1)).evaluate(ay).rational();
    BigRational v = (1 - ay) * factorial_ratio(n, m) * em - BigRational(s) * factorial_ratio(n, m + 1) * em1 +
                    factorial_ratio(n + 1, m + 1) * em1;
    return constant_poly(mode, v * BigRational(2));
  };
  return printed_and_corrected(p, target, printed, corrected);
}

}  // namespace detail

/// Verdicts for every variant of `id` at one grid point.
inline std::vector<CheckResult> evaluate_point(IdentityId id, const GridPoint& p) {
  switch (id) {
    case IdentityId::ID_DERIV: return detail::check_deriv(p);
    case IdentityId::ID_DIFF: return detail::check_diff(p);
    case IdentityId::ID_LOWER_ORDER: return detail::check_lower_order(p);
    case IdentityId::ID_ZERO_ORDER: return detail::check_zero_order(p);
    case IdentityId::ID_LEMMA_CLOSED_FORM: return detail::check_lemma(p);
    case IdentityId::ID_THM1: return detail::check_thm1(p);
    case IdentityId::ID_COR_XN: return detail::check_cor_xn(p);
    case IdentityId::ID_THM2: return detail::check_order_k_expansion(p, true);
    case IdentityId::ID_THM3: return detail::check_order_k_expansion(p, false);
    case IdentityId::ID_HANSEN: return detail::check_hansen(p);
    case IdentityId::ID_EULER_RAMANUJAN: return detail::check_euler_ramanujan(p);
    case IdentityId::ID_THM4: return detail::check_thm4(p);
    case IdentityId::ID_DILCHER: return detail::check_dilcher(p);
    case IdentityId::ID_THM5: return detail::check_thm5(p);
  }
  throw ConfigError("unknown identity");
}

/// Rejects grid points outside desk scale or outside an identity's domain.
inline void validate_point(IdentityId id, const GridPoint& p, const GridBounds& bounds = {}) {
  const std::string where = std::string(identity_name(id)) + " at n=" + std::to_string(p.n) +
                            ", k=" + std::to_string(p.k) + ", lambda=" + p.mode.key();
  const long max_n = p.mode.is_symbolic() ? bounds.max_n_symbolic : bounds.max_n_numeric;
  const long max_k = id == IdentityId::ID_LEMMA_CLOSED_FORM ? bounds.max_lemma_k : bounds.max_k;
  if (p.n < 0 || p.k < 0) throw ConfigError("negative grid index: " + where);
  if (p.n > max_n) throw ConfigError("n beyond desk-scale bound " + std::to_string(max_n) + ": " + where);
  if (p.k > max_k) throw ConfigError("k beyond desk-scale bound " + std::to_string(max_k) + ": " + where);
  if (is_bivariate(id) != p.y.has_value()) throw ConfigError("y sample presence mismatch: " + where);
  if (is_classical_only(id) && !p.mode.is_one()) throw ConfigError("identity is stated at lambda = 1 only: " + where);
  if ((id == IdentityId::ID_DIFF || id == IdentityId::ID_LOWER_ORDER) && p.k < 1) {
    throw ConfigError("order must be at least 1: " + where);
  }
  if (id == IdentityId::ID_ZERO_ORDER && p.k != 0) throw ConfigError("zero-order identity needs k = 0: " + where);
  if (id == IdentityId::ID_ZERO_ORDER && p.mode.is_value(BigRational(-1))) {
    throw ConfigError("Apostol-Euler family has a pole at lambda = -1: " + where);
  }
  if (id == IdentityId::ID_DIFF && p.n + 1 > max_n) {
    throw ConfigError("n + 1 beyond desk-scale bound: " + where);
  }
}

namespace detail {

inline std::string index_ranges(const std::vector<long>& values) {
  std::string out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    while (j + 1 < values.size() && values[j + 1] == values[j] + 1) ++j;
    if (!out.empty()) out += ", ";
    out += std::to_string(values[i]);
    if (j > i) out += ".." + std::to_string(values[j]);
    i = j + 1;
  }
  return "{" + out + "}";
}

/// Human-readable description of the passing subset. A point (n, k, lambda)
/// of a bivariate identity passes only if every y sample passes.
inline std::string validity_domain(IdentityId id, const std::vector<CheckResult>& results) {
  std::size_t pass = 0;
  for (const auto& r : results) pass += r.verdict == Verdict::Pass;
  if (results.empty()) return "none";
  if (pass == results.size()) return "all tested points";
  if (pass == 0) return "none";

  const char* param = (id == IdentityId::ID_HANSEN || id == IdentityId::ID_EULER_RAMANUJAN) ? "m" : "n";
  std::vector<std::string> variants;
  using GroupKey = std::tuple<LambdaMode, long>;
  std::map<std::string, std::map<GroupKey, std::map<long, bool>>> table;
  for (const auto& r : results) {
    if (std::find(variants.begin(), variants.end(), r.variant) == variants.end()) variants.push_back(r.variant);
    auto& slot = table[r.variant][GroupKey{r.point.mode, r.point.k}];
    auto [it, inserted] = slot.emplace(r.point.n, true);
    it->second = it->second && r.verdict == Verdict::Pass;
  }
  std::size_t group_count = 0;
  for (const auto& [variant, groups] : table) group_count = std::max(group_count, groups.size());

  std::vector<std::string> parts;
  for (const auto& variant : variants) {
    const auto& groups = table[variant];
    std::vector<std::string> pieces;
    bool all = true;
    for (const auto& [key, ns] : groups) {
      std::vector<long> ok;
      for (const auto& [n, passed] : ns) {
        if (passed) ok.push_back(n);
        else all = false;
      }
      if (ok.empty()) continue;
      std::string piece = std::string(param) + " in " + index_ranges(ok);
      if (group_count > 1) {
        piece = "lambda=" + std::get<0>(key).key() + ", k=" + std::to_string(std::get<1>(key)) + ": " + piece;
      }
      pieces.push_back(piece);
    }
    std::string body;
    if (all) body = "all";
    else if (pieces.empty()) body = "none";
    else {
      for (std::size_t i = 0; i < pieces.size(); ++i) body += (i ? "; " : "") + pieces[i];
    }
    parts.push_back(variants.size() > 1 ? variant + ": " + body : body);
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " | " : "") + parts[i];
  return out;
}

inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace detail

/**
 * Exact verdicts for `id` over `grid`. Points are evaluated independently
 * (concurrently when threads > 1); the report is sorted by grid point and is
 * identical for any thread count.
 */
inline IdentityReport verify_identity(IdentityId id, std::vector<GridPoint> grid, const GridBounds& bounds = {},
                                      unsigned threads = 1) {
  if (grid.empty()) throw ConfigError(std::string("empty grid for ") + identity_name(id));
  for (const auto& p : grid) validate_point(id, p, bounds);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<std::vector<CheckResult>> per_point(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        per_point[i] = evaluate_point(id, grid[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n_threads = std::min<unsigned>(detail::resolve_threads(threads), static_cast<unsigned>(grid.size()));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  IdentityReport report{id, grid, {}, {}};
  for (auto& rs : per_point) {
    for (auto& r : rs) {
      (r.verdict == Verdict::Pass ? report.summary.pass : report.summary.fail)++;
      report.results.push_back(std::move(r));
    }
  }
  report.summary.validity_domain = detail::validity_domain(id, report.results);
  return report;
}

/// The default grid of one identity under `config`.
inline std::vector<GridPoint> default_grid(IdentityId id, const SuiteConfig& config) {
  std::vector<GridPoint> grid;
  const LambdaMode classical = LambdaMode::numeric(1);
  auto each_mode = [&](auto&& fn) {
    for (const auto& mode : config.modes) fn(mode);
  };
  switch (id) {
    case IdentityId::ID_DERIV:
      each_mode([&](const LambdaMode& m) {
        for (long k = 0; k <= config.relation_max_k; ++k)
          for (long n = 0; n <= config.relation_max_n; ++n) grid.push_back({n, k, m, std::nullopt});
      });
      break;
    case IdentityId::ID_DIFF:
      each_mode([&](const LambdaMode& m) {
        for (long k = 1; k <= config.relation_max_k; ++k)
          for (long n = 0; n + 1 <= config.relation_max_n; ++n) grid.push_back({n, k, m, std::nullopt});
      });
      break;
    case IdentityId::ID_LOWER_ORDER:
      each_mode([&](const LambdaMode& m) {
        for (long k = 1; k <= config.relation_max_k; ++k)
          for (long n = 0; n <= config.relation_max_n; ++n) grid.push_back({n, k, m, std::nullopt});
      });
      break;
    case IdentityId::ID_ZERO_ORDER:
      each_mode([&](const LambdaMode& m) {
        for (long n = 0; n <= config.relation_max_n; ++n) grid.push_back({n, 0, m, std::nullopt});
      });
      break;
    case IdentityId::ID_LEMMA_CLOSED_FORM:
      each_mode([&](const LambdaMode& m) {
        for (long k = 0; k <= config.lemma_max_k; ++k)
          for (long n = 0; n <= config.lemma_max_degree; ++n) grid.push_back({n, k, m, std::nullopt});
      });
      break;
    case IdentityId::ID_THM1:
      each_mode([&](const LambdaMode& m) {
        for (long k = 0; k <= config.thm1_max_k; ++k)
          for (long n = 0; n <= config.thm1_max_degree; ++n) grid.push_back({n, k, m, std::nullopt});
      });
      break;
    case IdentityId::ID_COR_XN:
    case IdentityId::ID_THM2:
    case IdentityId::ID_THM3:
      each_mode([&](const LambdaMode& m) {
        for (long k = 0; k <= config.theorem_max_k; ++k)
          for (long n = 0; n <= config.theorem_max_n; ++n) grid.push_back({n, k, m, std::nullopt});
      });
      break;
    case IdentityId::ID_THM4:
    case IdentityId::ID_THM5:
      each_mode([&](const LambdaMode& m) {
        for (long k = 0; k <= config.theorem_max_k; ++k)
          for (long n = 0; n <= config.theorem_max_n; ++n)
            for (const auto& y : y_samples(n)) grid.push_back({n, k, m, y});
      });
      break;
    case IdentityId::ID_HANSEN:
    case IdentityId::ID_DILCHER:
      for (long n = 0; n <= config.convolution_max_n; ++n)
        for (const auto& y : y_samples(n)) grid.push_back({n, 0, classical, y});
      break;
    case IdentityId::ID_EULER_RAMANUJAN:
      for (long m = config.er_min_m; m <= config.er_max_m; ++m) grid.push_back({m, 0, classical, std::nullopt});
      break;
  }
  return grid;
}

/// One report per selected identity, in catalog order.
inline std::vector<IdentityReport> run_suite(const SuiteConfig& config) {
  if (config.ids.empty()) throw ConfigError("no identities selected");
  if (config.modes.empty()) throw ConfigError("no lambda modes selected");
  std::vector<IdentityId> ids = config.ids;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<IdentityReport> reports;
  reports.reserve(ids.size());
  for (IdentityId id : ids) {
    reports.push_back(verify_identity(id, default_grid(id, config), config.bounds, config.threads));
  }
  return reports;
}

}  // namespace apostol
