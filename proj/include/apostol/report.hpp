#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "apostol/identity_verifier.hpp"

namespace apostol {

enum class ReportFormat { Json, Text, Latex, Csv };

inline ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "text") return ReportFormat::Text;
  if (name == "latex") return ReportFormat::Latex;
  if (name == "csv") return ReportFormat::Csv;
  throw ConfigError("unknown report format '" + std::string(name) + "'");
}

inline const char* verdict_name(Verdict v) { return v == Verdict::Pass ? "pass" : "fail"; }

inline Verdict parse_verdict(std::string_view s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "fail") return Verdict::Fail;
  throw ParseError("unknown verdict '" + std::string(s) + "'");
}

inline nlohmann::ordered_json point_json(const GridPoint& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  j["k"] = p.k;
  j["lambda"] = p.mode.key();
  j["y"] = p.y ? nlohmann::ordered_json(p.y->str()) : nlohmann::ordered_json(nullptr);
  return j;
}

/// Report in the stable JSON schema. With `with_witnesses` false the
/// witness/detail fields are dropped, which is the expectation-file form.
inline nlohmann::ordered_json report_json(const IdentityReport& r, bool with_witnesses = true) {
  nlohmann::ordered_json j;
  j["identity"] = identity_name(r.id);
  j["grid"] = nlohmann::ordered_json::array();
  for (const auto& p : r.grid) j["grid"].push_back(point_json(p));
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& res : r.results) {
    nlohmann::ordered_json e;
    e["point"] = point_json(res.point);
    e["variant"] = res.variant;
    e["verdict"] = verdict_name(res.verdict);
    if (with_witnesses) {
      e["witness"] = res.witness ? nlohmann::ordered_json(*res.witness) : nlohmann::ordered_json(nullptr);
      e["detail"] = res.detail ? nlohmann::ordered_json(*res.detail) : nlohmann::ordered_json(nullptr);
    }
    j["results"].push_back(std::move(e));
  }
  j["summary"] = {{"pass", r.summary.pass}, {"fail", r.summary.fail}, {"validity_domain", r.summary.validity_domain}};
  return j;
}

inline nlohmann::ordered_json reports_json(const std::vector<IdentityReport>& reports, bool with_witnesses = true) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : reports) j.push_back(report_json(r, with_witnesses));
  return j;
}

/// Compact expectation document: only the failing checks are listed, since
/// unlisted points are required to pass.
inline nlohmann::ordered_json expectation_json(const std::vector<IdentityReport>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["identity"] = identity_name(r.id);
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& res : r.results) {
      if (res.verdict != Verdict::Fail) continue;
      j["results"].push_back({{"point", point_json(res.point)}, {"variant", res.variant}, {"verdict", "fail"}});
    }
    j["summary"] = {{"pass", r.summary.pass}, {"fail", r.summary.fail}, {"validity_domain", r.summary.validity_domain}};
    out.push_back(std::move(j));
  }
  return out;
}

namespace detail {

inline std::string y_text(const GridPoint& p) { return p.y ? p.y->str() : "-"; }

inline std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '_': out += "\\_"; break;
      case '^': out += "\\^{}"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '&': out += "\\&"; break;
      case '%': out += "\\%"; break;
      case '#': out += "\\#"; break;
      case '$': out += "\\$"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string restyle(const std::string& s, const RenderStyle& style) {
  if (style.variable == "L" && style.minus == "-") return s;
  std::string out;
  for (char c : s) {
    if (c == 'L') out += style.variable;
    else if (c == '-') out += style.minus;
    else out += c;
  }
  return out;
}

}  // namespace detail

/**
 * Serialize reports. JSON is lossless; text, LaTeX and CSV are tabular
 * summaries (text also lists failure witnesses). Output depends only on the
 * reports, so it is byte-identical for identical input.
 */
inline std::string render_report(const std::vector<IdentityReport>& reports, ReportFormat format,
                                 const RenderStyle& style = {}) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::Json:
      os << reports_json(reports).dump(2) << "\n";
      break;
    case ReportFormat::Text:
      for (const auto& r : reports) {
        os << identity_name(r.id) << ": " << r.summary.pass << " pass, " << r.summary.fail << " fail\n";
        os << "  validity domain: " << r.summary.validity_domain << "\n";
        for (const auto& res : r.results) {
          os << "  n=" << res.point.n << " k=" << res.point.k << " lambda=" << res.point.mode.key()
             << " y=" << detail::y_text(res.point) << " [" << res.variant << "] " << verdict_name(res.verdict);
          if (res.witness) os << "  witness: " << detail::restyle(*res.witness, style);
          if (res.detail && res.verdict == Verdict::Fail) os << "  (" << detail::restyle(*res.detail, style) << ")";
          os << "\n";
        }
      }
      break;
    case ReportFormat::Latex:
      for (const auto& r : reports) {
        os << "% " << identity_name(r.id) << "\n";
        os << "\\begin{tabular}{rrlllr}\n\\hline\n";
        os << "$n$ & $k$ & $\\lambda$ & $y$ & variant & verdict \\\\\n\\hline\n";
        for (const auto& res : r.results) {
          os << res.point.n << " & " << res.point.k << " & " << detail::latex_escape(res.point.mode.key()) << " & "
             << detail::latex_escape(detail::y_text(res.point)) << " & " << detail::latex_escape(res.variant)
             << " & " << verdict_name(res.verdict) << " \\\\\n";
        }
        os << "\\hline\n\\multicolumn{6}{l}{" << r.summary.pass << " pass, " << r.summary.fail
           << " fail; validity: " << detail::latex_escape(r.summary.validity_domain) << "} \\\\\n";
        os << "\\end{tabular}\n";
      }
      break;
    case ReportFormat::Csv:
      os << "identity,n,k,lambda,y,verdict,variant\n";
      for (const auto& r : reports) {
        for (const auto& res : r.results) {
          os << identity_name(r.id) << "," << res.point.n << "," << res.point.k << "," << res.point.mode.key() << ","
             << (res.point.y ? res.point.y->str() : "") << "," << verdict_name(res.verdict) << "," << res.variant
             << "\n";
        }
      }
      break;
  }
  return os.str();
}

/// Verdict pattern keyed by (identity, variant, point).
using VerdictKey = std::tuple<std::string, std::string, std::string>;
using VerdictMap = std::map<VerdictKey, Verdict>;

inline VerdictMap verdict_map(const nlohmann::ordered_json& reports) {
  VerdictMap out;
  for (const auto& r : reports) {
    const std::string id = r.at("identity").get<std::string>();
    for (const auto& res : r.at("results")) {
      out[{id, res.at("variant").get<std::string>(), res.at("point").dump()}] =
          parse_verdict(res.at("verdict").get<std::string>());
    }
  }
  return out;
}

/**
 * Compare observed verdicts with an expectation file. Points listed in the
 * expectation must reproduce their verdict; points it does not list must
 * pass. Returns one line per discrepancy (empty when the run matches).
 */
inline std::vector<std::string> match_expectations(const std::vector<IdentityReport>& reports,
                                                   const nlohmann::ordered_json& expectation) {
  const VerdictMap expected = verdict_map(expectation);
  const VerdictMap observed = verdict_map(reports_json(reports, false));
  std::vector<std::string> mismatches;
  for (const auto& [key, verdict] : observed) {
    auto it = expected.find(key);
    const auto& [id, variant, point] = key;
    if (it == expected.end()) {
      if (verdict == Verdict::Fail) mismatches.push_back(id + " [" + variant + "] " + point + ": unexpected fail");
    } else if (it->second != verdict) {
      mismatches.push_back(id + " [" + variant + "] " + point + ": expected " + verdict_name(it->second) +
                           ", observed " + verdict_name(verdict));
    }
  }
  return mismatches;
}

}  // namespace apostol
