#include "hilbert/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace hilbert {

namespace {

double parse_real(std::string_view field, std::size_t line) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), x);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ArgumentError("report csv line " + std::to_string(line) + ": bad number '" +
                        std::string(field) + "'");
  }
  return x;
}

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_report_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kReportHeader << '\n';
  for (const auto& r : rows) {
    out << format_real(r.t) << ',' << format_real(r.sphere_area) << ','
        << format_real(r.ball_volume) << ',' << format_real(r.ratio) << ','
        << format_real(r.ln_area_over_t) << '\n';
  }
}

void write_scalars_csv(std::ostream& out,
                       const std::vector<std::pair<std::string, double>>& values) {
  out << kScalarHeader << '\n';
  for (const auto& [name, value] : values) out << name << ',' << format_real(value) << '\n';
}

std::vector<ExperimentRow> parse_report_csv(std::string_view text) {
  std::vector<ExperimentRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (line_no == 1) {
      if (line != kReportHeader) throw ArgumentError("report csv: unexpected header");
      continue;
    }
    if (line.empty()) continue;
    double f[5];
    std::size_t start = 0;
    for (int k = 0; k < 5; ++k) {
      const std::size_t comma = k < 4 ? line.find(',', start) : line.size();
      if (comma == std::string_view::npos) {
        throw ArgumentError("report csv line " + std::to_string(line_no) + ": expected 5 fields");
      }
      f[k] = parse_real(line.substr(start, comma - start), line_no);
      start = comma + 1;
    }
    rows.push_back({f[0], f[1], f[2], f[3], f[4]});
  }
  if (line_no == 0) throw ArgumentError("report csv: empty input");
  return rows;
}

}  // namespace hilbert
