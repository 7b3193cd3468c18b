#include "qdiff/potentials.hpp"

#include <cmath>
#include <numbers>

#include "qdiff/constants.hpp"
#include "qdiff/errors.hpp"
#include "qdiff/kernels.hpp"

namespace qdiff {

double CosinePotential::period() const { return 2.0 * std::numbers::pi / wavenumber; }

double evaluate_potential(const CosinePotential& p, double x) {
  return p.amplitude * std::cos(p.wavenumber * x);
}

double evaluate_force(const CosinePotential& p, double x) {
  return p.amplitude * p.wavenumber * std::sin(p.wavenumber * x);
}

double evaluate_potential(const HarmonicPotential& p, double x) {
  return 0.5 * p.mass * p.omega0 * p.omega0 * x * x;
}

double evaluate_force(const HarmonicPotential& p, double x) {
  return -p.mass * p.omega0 * p.omega0 * x;
}

double quasi_equilibrium_quantum_potential(const CosinePotential& p,
                                           const DimensionlessGroups& groups,
                                           double x) {
  if (!groups.beta || !groups.lambda_thermal) {
    throw RegimeError("quasi-equilibrium quantum potential needs T > 0");
  }
  const double beta = *groups.beta;
  const double lt2 = *groups.lambda_thermal * *groups.lambda_thermal;
  const double q = p.wavenumber;
  const double u = p.amplitude;
  const double v = evaluate_potential(p, x);

  // general derivative form: lambda_T^2 [V'' - beta V'^2 / 2]
  const double v_xx = -q * q * v;
  const double v_x = -evaluate_force(p, x);
  const double general = lt2 * (v_xx - beta * v_x * v_x / 2.0);

  // cosine closed form
  const double closed = -lt2 * q * q * (v + beta * (u * u - v * v) / 2.0);

  const double scale = lt2 * q * q * (u > 0.0 ? u * (1.0 + beta * u) : 1.0);
  if (std::abs(general - closed) > 1e-12 * scale) {
    throw NumericalError("quantum potential closed form deviates from general form");
  }
  return closed;
}

double effective_potential(const EffectivePotentialSpec& spec, double x) {
  const double v = evaluate_potential(spec.base, x);
  double w = (1.0 - spec.theta) * v;
  if (spec.include_nonlinear) {
    w += spec.theta * spec.beta / 3.0 * v * v;
  }
  return w;
}

HarmonicDispersion harmonic_effective_dispersion(const HarmonicPotential& p,
                                                 double beta) {
  if (!(p.mass > 0.0) || !(p.omega0 > 0.0) || !(beta > 0.0)) {
    throw ConfigError("harmonic dispersion needs positive mass, omega0 and beta");
  }
  const double bho = beta * constants::hbar * p.omega0;
  if (bho >= std::sqrt(3.0)) {
    throw RegimeError("semiclassical harmonic dispersion needs beta hbar omega0 < sqrt(3)");
  }
  const double e = bho / 2.0;
  const double denom_factor = 1.0 - e * e / 3.0;
  HarmonicDispersion out;
  const double classical = 1.0 / (beta * p.mass * p.omega0 * p.omega0);
  out.semiclassical = classical / denom_factor;
  out.exact = constants::hbar / (2.0 * p.mass * p.omega0) / std::tanh(e);
  return out;
}

BohmField bohm_quantum_potential(const DensityField& rho, double mass) {
  if (!(mass > 0.0)) throw ConfigError("bohm potential needs mass > 0");
  BohmField out;
  out.values.resize(rho.values.size());
  const double floor_value =
      bohm_density_floor_fraction * kernels::max_value(rho.values);
  const double coeff = constants::hbar * constants::hbar / (2.0 * mass);
  out.floored_cells = kernels::bohm_field(
      rho.values, coeff, rho.grid.cell_width(),
      rho.grid.boundary == Boundary::periodic, floor_value, out.values);
  return out;
}

DensityField equilibrium_density(const std::function<double(double)>& potential,
                                 double beta, const Grid& grid) {
  grid.validate();
  DensityField field;
  field.grid = grid;
  field.values.resize(grid.cell_count);
  std::vector<double> neg_bw(grid.cell_count);
  const auto n = static_cast<std::ptrdiff_t>(grid.cell_count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    neg_bw[static_cast<std::size_t>(i)] =
        -beta * potential(grid.center(static_cast<std::size_t>(i)));
  }
  const double shift = kernels::max_value(neg_bw);
  for (std::size_t i = 0; i < grid.cell_count; ++i) {
    field.values[i] = std::exp(neg_bw[i] - shift);
  }
  const double total = kernels::sum(field.values) * grid.cell_width();
  for (auto& v : field.values) v /= total;
  return field;
}

}  // namespace qdiff
