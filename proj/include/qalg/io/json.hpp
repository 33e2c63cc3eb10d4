#ifndef QALG_IO_JSON_HPP
#define QALG_IO_JSON_HPP

// JSON bindings; needs nlohmann/json (vendor/json.hpp) on the include path.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qalg/core/error.hpp"
#include "qalg/core/rational.hpp"
#include "qalg/harness.hpp"
#include "qalg/moebius.hpp"
#include "qalg/recognizer.hpp"
#include "qalg/report.hpp"

namespace qalg::io {

using json = nlohmann::ordered_json;

inline json to_json(const IdentityReport& r) {
  return json{{"id", r.id},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"abs_difference", r.abs_difference},
              {"tolerance", r.tolerance},
              {"verdict", to_string(r.verdict)},
              {"wall_time_ms", r.wall_time_ms},
              {"note", r.note}};
}

inline IdentityReport report_from_json(const json& j) {
  IdentityReport r;
  r.id = j.at("id").get<std::string>();
  r.lhs = j.at("lhs").get<std::string>();
  r.rhs = j.at("rhs").get<std::string>();
  r.abs_difference = j.at("abs_difference").get<std::string>();
  r.tolerance = j.at("tolerance").get<std::string>();
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.wall_time_ms = j.at("wall_time_ms").get<long>();
  r.note = j.value("note", std::string{});
  return r;
}

struct ReportDocument {
  std::string suite;
  int digits = 0;
  std::vector<IdentityReport> checks;
};

inline json report_document(const std::string& suite, int digits, const std::vector<IdentityReport>& reports) {
  json checks = json::array();
  for (const auto& r : reports) checks.push_back(to_json(r));
  SuiteSummary s = summarize(reports);
  return json{{"suite", suite},
              {"digits", digits},
              {"checks", std::move(checks)},
              {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"recorded", s.recorded}}}};
}

inline ReportDocument parse_report_document(const json& j) {
  ReportDocument doc;
  doc.suite = j.at("suite").get<std::string>();
  doc.digits = j.at("digits").get<int>();
  for (const auto& c : j.at("checks")) doc.checks.push_back(report_from_json(c));
  return doc;
}

/// Report in the requested format ("json" or "text").
inline std::string emit_report(const std::string& suite, int digits, const std::vector<IdentityReport>& reports,
                               const std::string& format) {
  if (format == "json") return report_document(suite, digits, reports).dump(2) + "\n";
  if (format == "text") return emit_text(suite, digits, reports);
  throw DomainError("unknown report format '" + format + "'");
}

inline Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw DomainError("coefficients must be integers or \"n/d\" strings");
}

/// {"coeffs": [c_1, c_2, ...]} with integers or "n/d" strings.
inline TaylorInput taylor_input_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
    throw DomainError("Taylor input needs a \"coeffs\" array");
  }
  TaylorInput in;
  for (const auto& v : j.at("coeffs")) in.coeffs.push_back(rational_from_json(v));
  return in;
}

inline TaylorInput read_taylor_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw DomainError("'" + path + "' is not valid JSON: " + e.what());
  }
  return taylor_input_from_json(j);
}

inline json taylor_input_to_json(const TaylorInput& in) {
  json coeffs = json::array();
  for (const auto& c : in.coeffs) coeffs.push_back(to_string(c));
  return json{{"coeffs", std::move(coeffs)}};
}

inline json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline json to_json(const PeriodicCoeffs& pc) {
  json j{{"period", pc.period}, {"values", rationals(pc.values)}, {"catoptric", pc.catoptric}};
  if (pc.catoptric) j["A"] = to_string(pc.A);
  if (!pc.finite_factors.empty()) {
    json ff = json::array();
    for (const auto& [n, e] : pc.finite_factors) ff.push_back({{"n", n}, {"exponent", to_string(e)}});
    j["finite_factors"] = std::move(ff);
  }
  return j;
}

inline json to_json(const ProductRepresentation& rep) {
  json agiles = json::array();
  for (const auto& [spec, e] : rep.agiles) {
    agiles.push_back({{"a", to_string(spec.a())}, {"p", to_string(spec.p())}, {"exponent", to_string(e)}});
  }
  json mono = json::array();
  for (const auto& [n, e] : rep.monomials) mono.push_back({{"n", n}, {"exponent", to_string(e)}});
  return json{{"agiles", std::move(agiles)}, {"monomials", std::move(mono)}};
}

inline json to_json(const ThetaRepresentation& rep) {
  json factors = json::array();
  for (const auto& [spec, e] : rep.factors) {
    factors.push_back({{"a", to_string(spec.a())}, {"b", to_string(spec.b())}, {"exponent", to_string(e)}});
  }
  json mono = json::array();
  for (const auto& [n, e] : rep.monomials) mono.push_back({{"n", n}, {"exponent", to_string(e)}});
  return json{{"period", rep.period},
              {"eta_exponent", to_string(rep.eta_exponent)},
              {"factors", std::move(factors)},
              {"monomials", std::move(mono)}};
}

inline json to_json(const RecognitionResult& r) {
  json j{{"status", to_string(r.status)},
         {"provenance", r.provenance},
         {"max_degree", r.max_degree},
         {"height_digits", r.height_digits},
         {"digits_used", r.digits_used},
         {"verify_digits", r.verify_digits}};
  if (r.poly) {
    json coeffs = json::array();
    for (const auto& c : r.poly->coeffs()) coeffs.push_back(c.get_str());
    j["polynomial"] = r.poly->to_string();
    j["coefficients"] = std::move(coeffs);
    j["residual"] = r.residual.to_string(6);
    j["verified_residual"] = r.verified_residual.to_string(6);
  } else {
    j["polynomial"] = nullptr;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace qalg::io

#endif  // QALG_IO_JSON_HPP
