#pragma once

#include <optional>
#include <string>

#include "qdiff/field.hpp"
#include "qdiff/model.hpp"
#include "qdiff/pde_solver.hpp"

namespace qdiff::cli {

inline constexpr const char* tool_version = "qdiff 0.1.0";

enum class Mode { semiclassical, quantum_temp, bohm, fourth_order };

const char* to_string(Mode m);
Mode mode_from_string(const std::string& s);

// Dimensionless problem statement: beta_u/theta for the thermal mode,
// lambda_param (or free_particle) for the zero-temperature modes.
struct DimensionlessInput {
  std::optional<double> beta_u;
  std::optional<double> theta;
  std::optional<double> lambda_param;
  bool free_particle = false;
};

// A fully resolved run request. Exactly one of `physical` / `dimensionless`
// is set; grid and solver settings are in SI units for physical runs and in
// reduced units otherwise.
struct RunConfig {
  Mode mode = Mode::semiclassical;
  std::optional<ModelParams> physical;
  std::optional<DimensionlessInput> dimensionless;

  std::size_t periods = 64;
  std::size_t cells_per_period = 64;
  std::optional<std::size_t> cells;          // explicit-grid alternative
  std::optional<double> domain_length;       // used together with `cells`
  Boundary boundary = Boundary::periodic;

  SolverConfig solver;
  std::string output_csv;
  std::string output_summary;

  DimensionlessGroups groups_echo;  // derived (physical) or synthesized

  bool is_physical() const { return physical.has_value(); }
};

// Parses and validates the JSON run configuration; unknown keys are errors.
RunConfig parse_config(const std::string& text);

// Grid implied by the configuration (SI for physical runs, reduced otherwise).
Grid build_grid(const RunConfig& config);

struct SweepConfig {
  std::vector<double> beta_u;   // either beta_u or lambda_param is given
  std::vector<double> lambda_param;
  std::vector<double> theta;
  std::size_t workers = 0;  // 0 = hardware default
  std::string output_csv;
};

SweepConfig parse_sweep_config(const std::string& text);

}  // namespace qdiff::cli
