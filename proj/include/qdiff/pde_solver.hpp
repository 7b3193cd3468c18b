#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "qdiff/field.hpp"
#include "qdiff/model.hpp"
#include "qdiff/timeseries.hpp"

namespace qdiff {

enum class Adaptivity { fixed, halving };

// All lengths/times in the units of the grid handed to the run. The SI entry
// points convert to the internal reduced units at the boundary and scale the
// output back.
struct SolverConfig {
  double dt_initial = 0.0;
  double t_max = 0.0;
  std::size_t output_stride = 50;
  Adaptivity adaptivity = Adaptivity::fixed;
  double sigma0 = 0.0;  // initial Gaussian packet width, >= 2 cell widths
  double boundary_mass_tolerance = 1e-6;
  bool include_nonlinear = false;
  bool uniform_initial = false;  // replace the Gaussian packet by 1/L

  void validate(const Grid& grid) const;
};

struct RunDiagnostics {
  std::size_t steps = 0;
  std::size_t rejected_steps = 0;
  std::size_t clamped_cells = 0;  // roundoff negatives zeroed after a solve
  std::size_t floored_cells = 0;  // Bohm operator density-floor substitutions
  double final_dt = 0.0;
  bool aborted = false;
  std::string note;
};

struct RunResult {
  TimeSeries series;
  RunDiagnostics diagnostics;
  DensityField final_state;
};

struct Observables {
  double mass = 0.0;
  double mean = 0.0;
  double dispersion = 0.0;
  double min_density = 0.0;
};

// Midpoint-rule moments in raw grid coordinates.
Observables observables(const DensityField& rho);

// Moments in the coordinate unwrapped around `center` into (-L/2, L/2]; the
// reported mean is mapped back to center + offset. Only meaningful on
// periodic grids while the packet has not wrapped.
Observables observables_unwrapped(const DensityField& rho, double center);

// One implicit (backward Euler) step of
//   d_t rho = d_x (beta rho d_x W + d_x rho) / (beta b)
// in conservative form with exponentially-fitted face fluxes. potential is W
// sampled at cell centers (J); inv_temperature is beta (1/J). Throws
// NumericalError if the solve fails or produces a materially negative cell.
DensityField step_drift_diffusion(const DensityField& rho,
                                  std::span<const double> potential,
                                  double inv_temperature, double friction,
                                  double dt);

// --- reduced-unit engines -------------------------------------------------
// Thermal runs: x = q x_SI, t = t_SI q^2 / (beta b) (unit Einstein
// coefficient, potential beta W). Zero-temperature runs: x = q x_SI,
// t = t_SI hbar^2 q^4 / (4 m b); the cosine drift enters through
// drift_amplitude = V / E0 = 1 / (2 Lambda), 0 for a free particle.

RunResult run_semiclassical_reduced(double beta_u, double theta, const Grid& grid,
                                    const SolverConfig& config);
RunResult run_quantum_temperature_reduced(double drift_amplitude, const Grid& grid,
                                          const SolverConfig& config);
RunResult run_bohm_reduced(double drift_amplitude, const Grid& grid,
                           const SolverConfig& config);
RunResult run_fourth_order_reduced(const Grid& grid, const SolverConfig& config);

// Fourth-order evolution from an arbitrary initial field (reduced units);
// the spectral integrator is exact per mode, so only output times matter.
RunResult run_fourth_order_field(const DensityField& initial, const SolverConfig& config);

// --- SI entry points -------------------------------------------------------
// Grid and config are in SI units; series rows come back in SI units.

RunResult run_semiclassical(const ModelParams& params, const DimensionlessGroups& groups,
                            const Grid& grid, const SolverConfig& config);
RunResult run_quantum_temperature(const ModelParams& params, const Grid& grid,
                                  const SolverConfig& config);
RunResult run_bohm_zero_temperature(const ModelParams& params, const Grid& grid,
                                    const SolverConfig& config);
RunResult run_fourth_order(const ModelParams& params, const Grid& grid,
                           const SolverConfig& config);

}  // namespace qdiff
