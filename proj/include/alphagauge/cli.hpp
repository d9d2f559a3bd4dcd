// cli.hpp — CLI verb implementations; exit codes:
//   0 success, 2 config error, 3 convergence failure, 4 I/O error.

#pragma once

#include <string>

namespace alphagauge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitConvergence = 3;
inline constexpr int kExitIo = 4;

int run_sweep_verb(const std::string& config_path);
int run_plot_verb(const std::string& csv_path, const std::string& spec_path);
int run_converge_verb(const std::string& config_path);
int run_oracle_verb(const std::string& point_path);

} // namespace alphagauge::cli
