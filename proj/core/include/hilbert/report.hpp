#pragma once

#include "hilbert/asymptotics.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hilbert {

inline constexpr std::string_view kReportHeader = "t,sphere_area,ball_volume,ratio,ln_area_over_t";
inline constexpr std::string_view kScalarHeader = "quantity,value";

/// 17 significant digits, enough to read back the same double.
std::string format_real(double x);

void write_report_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
void write_scalars_csv(std::ostream& out,
                       const std::vector<std::pair<std::string, double>>& values);

/// Parses the output of write_report_csv. Throws ArgumentError on a bad
/// header or malformed row.
std::vector<ExperimentRow> parse_report_csv(std::string_view text);

}  // namespace hilbert
