#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qspecial/inequality.hpp"

namespace qspecial {

inline constexpr const char* kReportHeader = "q,a,x,f,lower,upper,lower_margin,upper_margin";

/// Shortest-round-trip-safe text for a double: 17 significant digits.
std::string format_real(double v);

/// Header, one row per point, then `#` comment lines:
///   # incomplete: <reason>          (only when !report.complete)
///   # factorial_min_margin=<v>      (only for classical integer-a reports)
///   # pass=<bool> min_lower_margin=<v> min_upper_margin=<v> seed=<s>
void write_report_csv(std::ostream& out, const InequalityReport& report);

struct ReportFooter {
  bool pass = false;
  double min_lower_margin = 0.0;
  double min_upper_margin = 0.0;
  std::uint64_t seed = 0;
};

struct ParsedReport {
  std::vector<InequalityPoint> rows;
  std::optional<ReportFooter> footer;
  bool incomplete = false;
};

/// Reads what write_report_csv wrote. Throws std::runtime_error on a
/// malformed header or row.
ParsedReport parse_report_csv(std::istream& in);

}  // namespace qspecial
