#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "apostol/basis_expansion.hpp"
#include "apostol/identity_verifier.hpp"
#include "apostol/report.hpp"
#include "apostol/special_polynomials.hpp"

#ifndef APOSTOL_DEFAULT_EXPECTATIONS
#define APOSTOL_DEFAULT_EXPECTATIONS "data/expectations.json"
#endif

namespace apostol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Raised for malformed command lines; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Subcommand { Numbers, Poly, Expand, Verify };

struct CliConfig {
  Subcommand subcommand = Subcommand::Numbers;
  std::string family = "apostol-bernoulli";
  long n = 0;
  long k = 1;
  std::string lambda = "symbolic";
  std::string format = "text";
  std::string output;
  bool unicode = false;
  // expand
  std::string q = "0,1";
  // verify
  std::vector<std::string> ids;
  std::vector<std::string> lambdas;
  long max_n = 10;
  long max_k = 4;
  long max_m = 10;
  long max_er_m = 20;
  long max_thm_n = 8;
  long max_thm_k = 3;
  long max_deg = 6;
  long max_lemma_k = 5;
  long max_lemma_deg = 5;
  unsigned threads = 0;
  std::string expect = APOSTOL_DEFAULT_EXPECTATIONS;
  bool no_expect = false;
  std::string write_expect;
};

namespace detail {

inline Family parse_family(const std::string& name) {
  if (name == "apostol-bernoulli") return Family::ApostolBernoulli;
  if (name == "apostol-euler") return Family::ApostolEuler;
  if (name == "bernoulli") return Family::Bernoulli;
  if (name == "euler") return Family::Euler;
  throw UsageError("unknown family '" + name + "'");
}

inline LambdaMode parse_mode(const std::string& text) {
  try {
    return LambdaMode::parse(text);
  } catch (const Error& e) {
    throw UsageError("malformed --lambda '" + text + "': " + e.what());
  }
}

inline bool is_euler(Family f) { return f == Family::ApostolEuler || f == Family::Euler; }

/// Mode for a family request; classical families fix lambda = 1.
inline LambdaMode family_mode(Family family, const CliConfig& c) {
  if (family == Family::Bernoulli || family == Family::Euler) {
    if (c.lambda != "symbolic" && !parse_mode(c.lambda).is_one()) {
      throw UsageError(std::string("family ") + family_name(family) + " is defined at lambda = 1 only");
    }
    return LambdaMode::numeric(1);
  }
  LambdaMode mode = parse_mode(c.lambda);
  if (is_euler(family) && mode.is_value(BigRational(-1))) {
    throw UsageError("apostol-euler family has a pole at lambda = -1");
  }
  return mode;
}

inline void require_range(const char* flag, long value, long lo, long hi) {
  if (value < lo || value > hi) {
    throw UsageError(std::string(flag) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

inline RenderStyle style_for(const CliConfig& c) {
  return (c.unicode && c.format == "text") ? RenderStyle::human() : RenderStyle::machine();
}

inline std::string family_symbol(Family f) { return is_euler(f) ? "E" : "B"; }

inline std::string run_numbers(const CliConfig& c) {
  const Family family = parse_family(c.family);
  const LambdaMode mode = family_mode(family, c);
  require_range("--n", c.n, 0, mode.is_symbolic() ? 10 : 24);
  require_range("--k", c.k, 0, 4);
  NumberTable table{family, static_cast<unsigned>(c.k), mode, {}};
  if (family == Family::Bernoulli || family == Family::Euler) {
    if (c.k != 1) throw UsageError("classical number families take --k 1");
    table = family == Family::Bernoulli ? bernoulli_numbers_by_recurrence(static_cast<unsigned>(c.n))
                                        : euler_numbers_by_recurrence(static_cast<unsigned>(c.n));
  } else {
    table = family == Family::ApostolBernoulli
                ? apostol_bernoulli_numbers(static_cast<unsigned>(c.k), static_cast<unsigned>(c.n), mode)
                : apostol_euler_numbers(static_cast<unsigned>(c.k), static_cast<unsigned>(c.n), mode);
  }
  const RenderStyle style = style_for(c);
  const std::string sym = family_symbol(family);
  std::ostringstream os;
  const ReportFormat fmt = parse_report_format(c.format);
  if (fmt == ReportFormat::Json) {
    nlohmann::ordered_json j;
    j["family"] = family_name(family);
    j["k"] = c.k;
    j["lambda"] = mode.key();
    j["values"] = nlohmann::ordered_json::array();
    for (const auto& v : table.values) j["values"].push_back(v.str());
    os << j.dump(2) << "\n";
  } else if (fmt == ReportFormat::Csv) {
    os << "n,value\n";
    for (std::size_t i = 0; i < table.values.size(); ++i) os << i << "," << table.values[i].str() << "\n";
  } else if (fmt == ReportFormat::Latex) {
    os << "\\begin{tabular}{rl}\n\\hline\n$n$ & value \\\\\n\\hline\n";
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      os << i << " & \\verb|" << table.values[i].str() << "| \\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
  } else {
    for (std::size_t i = 0; i < table.values.size(); ++i) os << sym << i << "=" << table.values[i].str(style) << "\n";
  }
  return os.str();
}

inline std::string run_poly(const CliConfig& c) {
  const Family family = parse_family(c.family);
  const LambdaMode mode = family_mode(family, c);
  require_range("--n", c.n, 0, mode.is_symbolic() ? 10 : 24);
  require_range("--k", c.k, 0, 4);
  const auto n = static_cast<unsigned>(c.n);
  const auto k = static_cast<unsigned>(c.k);
  XPolynomial p = is_euler(family) ? apostol_euler_poly(n, k, mode) : apostol_bernoulli_poly(n, k, mode);
  const ReportFormat fmt = parse_report_format(c.format);
  std::ostringstream os;
  if (fmt == ReportFormat::Json) {
    nlohmann::ordered_json j;
    j["family"] = family_name(family);
    j["n"] = c.n;
    j["k"] = c.k;
    j["lambda"] = mode.key();
    j["polynomial"] = p.str();
    j["coefficients"] = nlohmann::ordered_json::array();
    for (const auto& v : p.coefficients()) j["coefficients"].push_back(v.str());
    os << j.dump(2) << "\n";
  } else if (fmt == ReportFormat::Csv) {
    os << "power,coefficient\n";
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) os << i << "," << p.coefficients()[i].str() << "\n";
  } else if (fmt == ReportFormat::Latex) {
    os << "\\verb|" << p.str() << "|\n";
  } else {
    os << p.str(style_for(c)) << "\n";
  }
  return os.str();
}

inline XPolynomial parse_q(const std::string& text, const LambdaMode& mode) {
  std::vector<BigRational> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      coeffs.push_back(BigRational::parse(item));
    } catch (const Error& e) {
      throw UsageError("malformed --q coefficient '" + item + "': " + e.what());
    }
  }
  if (coeffs.empty()) throw UsageError("--q needs at least one coefficient");
  if (coeffs.size() > 7) throw UsageError("--q supports degree <= 6");
  return XPolynomial::from_rationals(mode, coeffs);
}

inline std::string run_expand(const CliConfig& c) {
  const LambdaMode mode = parse_mode(c.lambda);
  require_range("--k", c.k, 0, 3);
  const XPolynomial q = parse_q(c.q, mode);
  const auto k = static_cast<unsigned>(c.k);
  const RenderStyle style = style_for(c);

  std::vector<BasisExpansion> expansions{expand_oracle(q, k, mode), theorem1_coefficients(q, k, mode)};
  std::optional<std::string> corrected_note;
  if (mode.is_one()) corrected_note = "unsupported at lambda = 1";
  else expansions.push_back(corrected_coefficients(q, k, mode));
  const BasisExpansion& oracle = expansions.front();

  auto agrees = [&](const BasisExpansion& e) {
    for (long j = std::min(e.j_lo, oracle.j_lo); j <= std::max(e.j_hi, oracle.j_hi); ++j) {
      FieldElement a = (j >= e.j_lo && j <= e.j_hi) ? e.coefficient(j) : mode.zero();
      FieldElement b = (j >= oracle.j_lo && j <= oracle.j_hi) ? oracle.coefficient(j) : mode.zero();
      if (!(a == b)) return false;
    }
    return true;
  };

  const ReportFormat fmt = parse_report_format(c.format);
  std::ostringstream os;
  if (fmt == ReportFormat::Json) {
    nlohmann::ordered_json j;
    j["q"] = q.str();
    j["k"] = c.k;
    j["lambda"] = mode.key();
    j["expansions"] = nlohmann::ordered_json::array();
    for (const auto& e : expansions) {
      nlohmann::ordered_json ej;
      ej["method"] = method_name(e.method);
      ej["j_lo"] = e.j_lo;
      ej["j_hi"] = e.j_hi;
      ej["coefficients"] = nlohmann::ordered_json::array();
      for (const auto& b : e.coefficients) ej["coefficients"].push_back(b.str());
      ej["exact"] = e.exact;
      ej["agrees_with_oracle"] = agrees(e);
      ej["residual"] = (reconstruct(e) - q).str();
      j["expansions"].push_back(std::move(ej));
    }
    if (corrected_note) j["corrected_conjecture"] = *corrected_note;
    os << j.dump(2) << "\n";
  } else if (fmt == ReportFormat::Text) {
    os << "q = " << q.str(style) << ", k = " << c.k << ", lambda = " << mode.key() << "\n";
    for (const auto& e : expansions) {
      os << method_name(e.method) << ": j=" << e.j_lo << ".." << e.j_hi << " exact=" << (e.exact ? "true" : "false")
         << " agrees_with_oracle=" << (agrees(e) ? "true" : "false") << "\n";
      for (long jj = e.j_lo; jj <= e.j_hi; ++jj) os << "  b_" << jj << " = " << e.coefficient(jj).str(style) << "\n";
      if (!e.exact) os << "  residual: " << (reconstruct(e) - q).str(style) << "\n";
    }
    if (corrected_note) os << "corrected-conjecture: " << *corrected_note << "\n";
  } else if (fmt == ReportFormat::Csv) {
    os << "method,j,coefficient\n";
    for (const auto& e : expansions) {
      for (long jj = e.j_lo; jj <= e.j_hi; ++jj) {
        os << method_name(e.method) << "," << jj << "," << e.coefficient(jj).str() << "\n";
      }
    }
  } else {
    os << "\\begin{tabular}{lrl}\n\\hline\nmethod & $j$ & $b_j$ \\\\\n\\hline\n";
    for (const auto& e : expansions) {
      for (long jj = e.j_lo; jj <= e.j_hi; ++jj) {
        os << method_name(e.method) << " & " << jj << " & \\verb|" << e.coefficient(jj).str() << "| \\\\\n";
      }
    }
    os << "\\hline\n\\end{tabular}\n";
  }
  return os.str();
}

inline SuiteConfig suite_config(const CliConfig& c) {
  SuiteConfig s;
  if (!c.ids.empty()) {
    s.ids.clear();
    for (const auto& name : c.ids) {
      try {
        s.ids.push_back(parse_identity(name));
      } catch (const ConfigError& e) {
        throw UsageError(e.what());
      }
    }
  }
  if (!c.lambdas.empty()) {
    s.modes.clear();
    for (const auto& l : c.lambdas) s.modes.push_back(parse_mode(l));
  }
  s.relation_max_n = c.max_n;
  s.relation_max_k = c.max_k;
  s.convolution_max_n = c.max_m;
  s.er_max_m = c.max_er_m;
  s.theorem_max_n = c.max_thm_n;
  s.theorem_max_k = c.max_thm_k;
  s.thm1_max_degree = c.max_deg;
  s.thm1_max_k = c.max_thm_k;
  s.lemma_max_k = c.max_lemma_k;
  s.lemma_max_degree = c.max_lemma_deg;
  s.threads = c.threads;
  return s;
}

inline nlohmann::ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read expectation file '" + path + "'");
  try {
    return nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed expectation file '" + path + "': " + e.what());
  }
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace detail

/**
 * Entry point shared by the executable and the tests. Returns 0 on success,
 * 2 on usage errors (bad flags, malformed rationals, pole configurations,
 * out-of-bounds grids) and 1 on internal errors or, for `verify`, when the
 * observed verdicts deviate from the expectation file.
 */
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Apostol-Bernoulli / Apostol-Euler computations and identity verification", "apostol"};
  app.require_subcommand(1);
  CliConfig c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--lambda", c.lambda, "\"symbolic\" or an exact rational p/q")->capture_default_str();
    sub->add_option("--format", c.format, "json | text | latex | csv")
        ->check(CLI::IsMember({"json", "text", "latex", "csv"}))
        ->capture_default_str();
    sub->add_option("--output", c.output, "write to this file instead of stdout");
    sub->add_flag("--unicode", c.unicode, "spell lambda and minus in Unicode (text format)");
  };

  CLI::App* numbers = app.add_subcommand("numbers", "Table of B_n^(k)(lambda) or E_n^(k)(lambda), n = 0..N");
  numbers->add_option("--family", c.family, "apostol-bernoulli | apostol-euler | bernoulli | euler")
      ->capture_default_str();
  numbers->add_option("--k", c.k, "order")->capture_default_str();
  numbers->add_option("--n", c.n, "largest index")->capture_default_str();
  add_common(numbers);

  CLI::App* poly = app.add_subcommand("poly", "Polynomial B_n^(k)(x|lambda) or E_n^(k)(x|lambda)");
  poly->add_option("--family", c.family, "apostol-bernoulli | apostol-euler | bernoulli | euler")
      ->capture_default_str();
  poly->add_option("--k", c.k, "order")->capture_default_str();
  poly->add_option("--n", c.n, "index")->capture_default_str();
  add_common(poly);

  CLI::App* expand = app.add_subcommand("expand", "Expand q(x) in the Apostol-Bernoulli basis three ways");
  expand->add_option("--q", c.q, "comma-separated rational coefficients of q, ascending powers")
      ->capture_default_str();
  expand->add_option("--k", c.k, "order of the basis")->capture_default_str();
  add_common(expand);

  CLI::App* verify = app.add_subcommand("verify", "Run the identity catalog and compare with expectations");
  verify->add_option("--ids", c.ids, "identities to run (comma-separated); default: all")->delimiter(',');
  verify->add_option("--lambdas", c.lambdas, "lambda modes (comma-separated); default: symbolic,1,2,-2,1/3")
      ->delimiter(',');
  verify->add_option("--max-n", c.max_n, "largest n for the relation identities")->capture_default_str();
  verify->add_option("--max-k", c.max_k, "largest order for the relation identities")->capture_default_str();
  verify->add_option("--max-m", c.max_m, "largest index for the Hansen and Dilcher convolutions")
      ->capture_default_str();
  verify->add_option("--max-er-m", c.max_er_m, "largest m for the Euler-Ramanujan identity")->capture_default_str();
  verify->add_option("--max-thm-n", c.max_thm_n, "largest n for the corollary and Theorems 2-5")
      ->capture_default_str();
  verify->add_option("--max-thm-k", c.max_thm_k, "largest order for Theorems 1-5 and the corollary")
      ->capture_default_str();
  verify->add_option("--max-deg", c.max_deg, "largest degree of q = x^n for Theorem 1")->capture_default_str();
  verify->add_option("--max-lemma-k", c.max_lemma_k, "largest operator power for the Lemma")
      ->capture_default_str();
  verify->add_option("--max-lemma-deg", c.max_lemma_deg, "largest degree of f = x^n for the Lemma")
      ->capture_default_str();
  verify->add_option("--threads", c.threads, "worker threads (0 = hardware concurrency)")->capture_default_str();
  verify->add_option("--expect", c.expect, "expectation file (verdict pattern)")->capture_default_str();
  verify->add_flag("--no-expect", c.no_expect, "require every check to pass instead of reading expectations");
  verify->add_option("--write-expect", c.write_expect, "write the observed verdict pattern to this file");
  verify->add_option("--format", c.format, "json | text | latex | csv")
      ->check(CLI::IsMember({"json", "text", "latex", "csv"}))
      ->capture_default_str();
  verify->add_option("--output", c.output, "write the report to this file instead of stdout");
  verify->add_flag("--unicode", c.unicode, "spell lambda and minus in Unicode (text format)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "apostol: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::string document;
    int status = kExitOk;
    if (numbers->parsed()) {
      c.subcommand = Subcommand::Numbers;
      document = detail::run_numbers(c);
    } else if (poly->parsed()) {
      c.subcommand = Subcommand::Poly;
      document = detail::run_poly(c);
    } else if (expand->parsed()) {
      c.subcommand = Subcommand::Expand;
      document = detail::run_expand(c);
    } else {
      c.subcommand = Subcommand::Verify;
      SuiteConfig config = detail::suite_config(c);
      std::vector<IdentityReport> reports;
      try {
        reports = run_suite(config);
      } catch (const ConfigError& e) {
        throw UsageError(e.what());
      }
      document = render_report(reports, parse_report_format(c.format), detail::style_for(c));
      if (!c.write_expect.empty()) detail::write_file(c.write_expect, expectation_json(reports).dump(1) + "\n");
      std::vector<std::string> mismatches;
      if (c.no_expect) {
        for (const auto& r : reports) {
          for (const auto& res : r.results) {
            if (res.verdict == Verdict::Fail) {
              mismatches.push_back(std::string(identity_name(r.id)) + " [" + res.variant + "] " +
                                   point_json(res.point).dump() + ": fail");
            }
          }
        }
      } else {
        mismatches = match_expectations(reports, detail::read_json_file(c.expect));
      }
      for (const auto& m : mismatches) err << "apostol: verdict mismatch: " << m << "\n";
      if (!mismatches.empty()) status = kExitInternal;
    }
    if (c.output.empty()) out << document;
    else detail::write_file(c.output, document);
    return status;
  } catch (const UsageError& e) {
    err << "apostol: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "apostol: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "apostol: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PoleError& e) {
    err << "apostol: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "apostol: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace apostol::cli
