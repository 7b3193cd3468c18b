#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "qdiff/cli/config.hpp"

namespace qdiff::cli {

// exit codes shared by all subcommands
inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 1;
inline constexpr int exit_numerical_error = 2;
inline constexpr int exit_claim_failure = 3;

struct DcoefOptions {
  double beta_u = 0.0;
  double theta = 0.0;
  // when both are set the table is printed in SI units
  std::optional<double> friction;
  std::optional<double> temperature;
  std::string csv_path;  // empty: stdout only
};

struct ClosureOptions {
  bool reduced = false;  // m = b = hbar = 1
  std::optional<std::string> particle;
  std::optional<double> mass;
  std::optional<double> friction;
  std::optional<double> u_ev;
  std::optional<double> u_j;
  double t_min = 0.0;  // 0: auto (t_max * 1e-6)
  double t_max = 0.0;
  std::size_t points = 64;
  std::string csv_path;
};

int cmd_dcoef(const DcoefOptions& options, std::ostream& out);
int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_closure(const ClosureOptions& options, std::ostream& out);
int cmd_check_paper(std::ostream& out);
int cmd_sweep(const SweepConfig& config, std::ostream& out);

}  // namespace qdiff::cli
