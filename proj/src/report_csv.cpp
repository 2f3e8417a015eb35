#include "qspecial/report_csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qspecial {

namespace {

double parse_real(const std::string& text) {
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) {
    throw std::runtime_error("report csv: bad number '" + text + "'");
  }
  return v;
}

// "key=value" tokens of a footer line.
std::string footer_value(const std::string& line, const std::string& key) {
  std::istringstream tokens(line);
  std::string token;
  while (tokens >> token) {
    if (token.rfind(key + "=", 0) == 0) return token.substr(key.size() + 1);
  }
  throw std::runtime_error("report csv: footer lacks " + key);
}

}  // namespace

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_report_csv(std::ostream& out, const InequalityReport& report) {
  out << kReportHeader << '\n';
  for (const InequalityPoint& p : report.points) {
    out << format_real(p.q) << ',' << format_real(p.a) << ',' << format_real(p.x) << ','
        << format_real(p.f) << ',' << format_real(p.lower) << ',' << format_real(p.upper) << ','
        << format_real(p.lower_margin) << ',' << format_real(p.upper_margin) << '\n';
  }
  if (!report.complete) {
    out << "# incomplete: " << report.failure << '\n';
  }
  if (report.min_factorial_margin) {
    out << "# factorial_min_margin=" << format_real(*report.min_factorial_margin) << '\n';
  }
  out << "# pass=" << (report.pass ? "true" : "false")
      << " min_lower_margin=" << format_real(report.min_lower_margin)
      << " min_upper_margin=" << format_real(report.min_upper_margin) << " seed=" << report.seed
      << '\n';
}

ParsedReport parse_report_csv(std::istream& in) {
  ParsedReport parsed;
  std::string line;
  if (!std::getline(in, line) || line != kReportHeader) {
    throw std::runtime_error("report csv: missing header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# incomplete", 0) == 0) {
        parsed.incomplete = true;
      } else if (line.rfind("# pass=", 0) == 0) {
        ReportFooter footer;
        footer.pass = footer_value(line, "pass") == "true";
        footer.min_lower_margin = parse_real(footer_value(line, "min_lower_margin"));
        footer.min_upper_margin = parse_real(footer_value(line, "min_upper_margin"));
        footer.seed = std::stoull(footer_value(line, "seed"));
        parsed.footer = footer;
      }
      continue;
    }
    std::istringstream fields(line);
    std::string cell;
    std::vector<double> values;
    while (std::getline(fields, cell, ',')) values.push_back(parse_real(cell));
    if (values.size() != 8) {
      throw std::runtime_error("report csv: expected 8 columns in '" + line + "'");
    }
    parsed.rows.push_back(InequalityPoint{values[0], values[1], values[2], values[3],
                                          values[4], values[5], values[6], values[7]});
  }
  return parsed;
}

}  // namespace qspecial
