#include "schlicht/report.hpp"

#include <cmath>
#include <json.hpp>
#include <stdexcept>

#include "schlicht/complex.hpp"

namespace schlicht {

using ojson = nlohmann::ordered_json;

double InequalityReport::param(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  throw Error(ErrorKind::DomainError, "report has no parameter '" + key + "'");
}

InequalityReport make_report(std::string name, std::string map, double lhs, double rhs,
                             bool lhs_le_rhs, double tol, bool advisory) {
  InequalityReport r;
  r.name = std::move(name);
  r.map = std::move(map);
  r.lhs = lhs;
  r.rhs = rhs;
  if (std::isinf(rhs) && lhs_le_rhs && rhs > 0)
    r.margin = rhs;
  else
    r.margin = lhs_le_rhs ? rhs - lhs : lhs - rhs;
  r.pass = r.margin >= -tol;
  r.advisory = advisory;
  return r;
}

SuiteSummary summarize(const std::vector<InequalityReport>& reports, int skipped) {
  SuiteSummary s;
  s.total = int(reports.size());
  s.skipped = skipped;
  for (const auto& r : reports) {
    if (r.advisory) {
      ++s.passed;
      if (!r.pass) ++s.advisory_flagged;
    } else if (r.pass) {
      ++s.passed;
    } else {
      ++s.failed;
    }
  }
  return s;
}

namespace {

// JSON has no infinities; non-finite values travel as strings
ojson number(double x) {
  if (std::isfinite(x)) return x;
  return format_real(x);
}

double number(const ojson& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    if (s == "nan") return NAN;
    throw Error(ErrorKind::ParseError, "bad number '" + s + "'");
  }
  return j.get<double>();
}

ojson to_ojson(const InequalityReport& r) {
  ojson params = ojson::object();
  for (const auto& [k, v] : r.params) params[k] = number(v);
  return ojson{{"name", r.name},         {"map", r.map},     {"params", params},
               {"lhs", number(r.lhs)},   {"rhs", number(r.rhs)},
               {"margin", number(r.margin)}, {"pass", r.pass}, {"advisory", r.advisory}};
}

InequalityReport from_ojson(const ojson& j) {
  InequalityReport r;
  r.name = j.at("name").get<std::string>();
  r.map = j.at("map").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, number(v));
  r.lhs = number(j.at("lhs"));
  r.rhs = number(j.at("rhs"));
  r.margin = number(j.at("margin"));
  r.pass = j.at("pass").get<bool>();
  r.advisory = j.at("advisory").get<bool>();
  return r;
}

}  // namespace

std::string report_to_json(const InequalityReport& r) { return to_ojson(r).dump(); }

InequalityReport report_from_json(const std::string& text) {
  try {
    return from_ojson(ojson::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string reports_to_json(const std::vector<InequalityReport>& reports,
                            const SuiteSummary& s) {
  ojson arr = ojson::array();
  for (const auto& r : reports) arr.push_back(to_ojson(r));
  ojson doc{{"reports", arr},
            {"summary",
             {{"total", s.total},
              {"passed", s.passed},
              {"failed", s.failed},
              {"skipped", s.skipped},
              {"advisory_flagged", s.advisory_flagged}}}};
  return doc.dump(1) + "\n";
}

void reports_from_json(const std::string& text, std::vector<InequalityReport>* reports,
                       SuiteSummary* summary) {
  try {
    ojson doc = ojson::parse(text);
    reports->clear();
    for (const auto& j : doc.at("reports")) reports->push_back(from_ojson(j));
    const auto& s = doc.at("summary");
    summary->total = s.at("total").get<int>();
    summary->passed = s.at("passed").get<int>();
    summary->failed = s.at("failed").get<int>();
    summary->skipped = s.at("skipped").get<int>();
    summary->advisory_flagged = s.at("advisory_flagged").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace schlicht
