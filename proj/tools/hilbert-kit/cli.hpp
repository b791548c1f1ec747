#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hilbert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitBadSpec = 65;

/// Runs one hilbert-kit invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Linear t grid from t_min to t_max with `steps` points; requires
/// t_min < t_max <= 8 and steps >= 2.
std::vector<double> make_t_grid(double t_min, double t_max, int steps);

}  // namespace hilbert::cli
