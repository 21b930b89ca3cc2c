#pragma once

#include <string>
#include <utility>
#include <vector>

namespace schlicht {

inline constexpr double kClosedTol = 1e-9;
inline constexpr double kNumericTol = 1e-6;

struct InequalityReport {
  std::string name;
  std::string map;
  std::vector<std::pair<std::string, double>> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool pass = true;
  bool advisory = false;

  double param(const std::string& key) const;
  bool operator==(const InequalityReport&) const = default;
};

// margin = rhs - lhs for "lhs <= rhs", lhs - rhs for "lhs >= rhs".
InequalityReport make_report(std::string name, std::string map, double lhs, double rhs,
                             bool lhs_le_rhs, double tol = kClosedTol, bool advisory = false);

struct SuiteSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int advisory_flagged = 0;
  bool operator==(const SuiteSummary&) const = default;
};

SuiteSummary summarize(const std::vector<InequalityReport>& reports, int skipped);

std::string reports_to_json(const std::vector<InequalityReport>& reports,
                            const SuiteSummary& summary);
std::string report_to_json(const InequalityReport& r);
InequalityReport report_from_json(const std::string& text);
void reports_from_json(const std::string& text, std::vector<InequalityReport>* reports,
                       SuiteSummary* summary);

}  // namespace schlicht
