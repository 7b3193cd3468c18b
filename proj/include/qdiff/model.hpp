#pragma once

#include <optional>

namespace qdiff {

// Physical inputs of the overdamped lattice-diffusion model. temperature == 0
// selects the zero-temperature (purely quantum) mode.
struct ModelParams {
  double mass = 0.0;               // kg
  double friction = 0.0;           // kg / s
  double temperature = 0.0;        // K, 0 allowed
  double barrier_amplitude = 0.0;  // J, amplitude U of V = U cos(q x)
  double wavenumber = 0.0;         // 1/m, q = 2 pi / lattice constant

  // Throws ConfigError on non-finite or out-of-range values.
  void validate() const;

  bool zero_temperature() const { return temperature == 0.0; }
};

// Derived dimensionless numbers. Thermal fields are absent at T = 0; the
// barrier-scale fields are absent at U = 0.
struct DimensionlessGroups {
  std::optional<double> beta;            // 1/J, 1/(k_B T)
  std::optional<double> lambda_thermal;  // m, hbar / (2 sqrt(m k_B T))
  std::optional<double> theta;           // lambda_T^2 q^2 / 2
  std::optional<double> beta_u;          // beta * U
  std::optional<double> lambda_param;    // hbar^2 q^2 / (8 m U)
  std::optional<double> omega_u;         // 1/s, 4 U / hbar
};

enum class Applicability { semiclassical, marginal, quantum };

const char* to_string(Applicability a);

DimensionlessGroups derive_groups(const ModelParams& params);

// Inverts theta(T) = lambda_T^2 q^2 / 2 for the temperature.
double temperature_for_theta(double target_theta, double mass, double wavenumber);

// theta < 0.5 semiclassical, theta in [0.5, 1) marginal, theta >= 1 quantum.
// Zero-temperature input (theta absent) is quantum by definition.
Applicability semiclassical_applicability(const DimensionlessGroups& groups);

}  // namespace qdiff
