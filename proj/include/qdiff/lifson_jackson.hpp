#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "qdiff/model.hpp"

namespace qdiff {

enum class DiffusionMethod { quadrature, closed_form, arrhenius, msd_fit };

const char* to_string(DiffusionMethod m);

// A diffusion coefficient with provenance. `value` is exp(log_value) and may
// underflow to zero for very deep barriers; log_value is always usable.
struct DiffusionEstimate {
  double value = 0.0;      // m^2/s (or D * beta * b when built from reduced inputs)
  double log_value = 0.0;  // ln of value
  DiffusionMethod method = DiffusionMethod::quadrature;
  DimensionlessGroups params_echo;

  // diagnostics
  std::size_t quadrature_nodes = 0;          // quadrature only
  std::optional<double> activation_energy;   // arrhenius only, J
  std::optional<double> prefactor;           // arrhenius only, m^2/s
  std::optional<double> fit_r_squared;       // msd_fit only
  bool regime_ok = true;
  std::string note;
};

// Effective diffusion coefficient 1/D = beta b <e^{beta W}><e^{-beta W}> with
// the averages taken over one period of W. Composite trapezoid with node
// doubling from 64 until successive log-averages agree to 1e-12 relative;
// both averages are max-shifted and the product is formed in log space.
DiffusionEstimate dcoef_quadrature(const std::function<double(double)>& potential,
                                   double period, double beta, double friction);

// Closed form 1/D = beta b I_0^2((1 - theta) beta U) for the simplified
// effective potential.
DiffusionEstimate dcoef_closed_form(const DimensionlessGroups& groups,
                                    double friction);

// Deep-barrier asymptote D = pi (2 - lambda_T^2 q^2) (U / b)
//   * exp[-beta (2 - lambda_T^2 q^2) U].
// Outside the asymptotic regime ((1-theta) beta U <= 1) the estimate is
// still returned with regime_ok = false.
DiffusionEstimate dcoef_arrhenius(const DimensionlessGroups& groups,
                                  double friction);

}  // namespace qdiff
