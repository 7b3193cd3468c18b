#include "qdiff/model.hpp"

#include <cmath>
#include <string>

#include "qdiff/constants.hpp"
#include "qdiff/errors.hpp"

namespace qdiff {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw ConfigError(std::string(name) + " must be finite");
  }
}

}  // namespace

void ModelParams::validate() const {
  require_finite(mass, "mass");
  require_finite(friction, "friction");
  require_finite(temperature, "temperature");
  require_finite(barrier_amplitude, "barrier_amplitude");
  require_finite(wavenumber, "wavenumber");
  if (mass <= 0.0) throw ConfigError("mass must be > 0");
  if (friction <= 0.0) throw ConfigError("friction must be > 0");
  if (temperature < 0.0) throw ConfigError("temperature must be >= 0");
  if (barrier_amplitude < 0.0) throw ConfigError("barrier_amplitude must be >= 0");
  if (wavenumber <= 0.0) throw ConfigError("wavenumber must be > 0");
}

const char* to_string(Applicability a) {
  switch (a) {
    case Applicability::semiclassical: return "semiclassical";
    case Applicability::marginal: return "marginal";
    case Applicability::quantum: return "quantum";
  }
  return "unknown";
}

DimensionlessGroups derive_groups(const ModelParams& params) {
  params.validate();
  namespace c = constants;

  DimensionlessGroups g;
  const double q2 = params.wavenumber * params.wavenumber;
  if (params.temperature > 0.0) {
    const double kt = c::k_boltzmann * params.temperature;
    g.beta = 1.0 / kt;
    const double lt = c::hbar / (2.0 * std::sqrt(params.mass * kt));
    g.lambda_thermal = lt;
    g.theta = lt * lt * q2 / 2.0;
    g.beta_u = params.barrier_amplitude / kt;
  }
  if (params.barrier_amplitude > 0.0) {
    g.lambda_param =
        c::hbar * c::hbar * q2 / (8.0 * params.mass * params.barrier_amplitude);
    g.omega_u = 4.0 * params.barrier_amplitude / c::hbar;
  }
  return g;
}

double temperature_for_theta(double target_theta, double mass, double wavenumber) {
  require_finite(target_theta, "target_theta");
  require_finite(mass, "mass");
  require_finite(wavenumber, "wavenumber");
  if (target_theta <= 0.0 || mass <= 0.0 || wavenumber <= 0.0) {
    throw ConfigError("temperature_for_theta requires positive arguments");
  }
  namespace c = constants;
  return c::hbar * c::hbar * wavenumber * wavenumber /
         (8.0 * target_theta * mass * c::k_boltzmann);
}

Applicability semiclassical_applicability(const DimensionlessGroups& groups) {
  if (!groups.theta) return Applicability::quantum;  // zero temperature
  const double theta = *groups.theta;
  if (theta < 0.5) return Applicability::semiclassical;
  if (theta < 1.0) return Applicability::marginal;
  return Applicability::quantum;
}

}  // namespace qdiff
