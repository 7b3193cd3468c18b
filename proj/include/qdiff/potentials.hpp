#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qdiff/field.hpp"
#include "qdiff/model.hpp"

namespace qdiff {

// V(x) = U cos(q x)
struct CosinePotential {
  double amplitude = 0.0;   // J
  double wavenumber = 0.0;  // 1/m

  double period() const;
};

// V(x) = m omega0^2 x^2 / 2
struct HarmonicPotential {
  double mass = 0.0;    // kg
  double omega0 = 0.0;  // 1/s
};

// Effective potential of the semiclassical evolution equation:
//   simplified          W = (1 - theta) V
//   with nonlinear term W = (1 - theta) V + (theta beta / 3) V^2
struct EffectivePotentialSpec {
  CosinePotential base;
  double theta = 0.0;
  double beta = 0.0;  // 1/J, needed only for the nonlinear term
  bool include_nonlinear = false;
};

double evaluate_potential(const CosinePotential& p, double x);
double evaluate_force(const CosinePotential& p, double x);
double evaluate_potential(const HarmonicPotential& p, double x);
double evaluate_force(const HarmonicPotential& p, double x);

// Quasi-equilibrium quantum potential for the cosine lattice at T > 0.
// Evaluates both the general derivative form lambda_T^2 [V'' - beta V'^2 / 2]
// and the cosine closed form -lambda_T^2 q^2 [V + beta (U^2 - V^2)/2] and
// checks them against each other to 1e-12 of the local scale.
double quasi_equilibrium_quantum_potential(const CosinePotential& p,
                                           const DimensionlessGroups& groups,
                                           double x);

double effective_potential(const EffectivePotentialSpec& spec, double x);

struct HarmonicDispersion {
  double semiclassical;  // m^2, 1 / (beta m omega0^2 [1 - (beta hbar omega0 / 2)^2 / 3])
  double exact;          // m^2, (hbar / 2 m omega0) coth(beta hbar omega0 / 2)
};

// Requires beta hbar omega0 < sqrt(3); throws RegimeError otherwise.
HarmonicDispersion harmonic_effective_dispersion(const HarmonicPotential& p,
                                                 double beta);

struct BohmField {
  std::vector<double> values;  // J per cell
  std::size_t floored_cells = 0;
};

// Discrete Bohm quantum potential -hbar^2 D2(sqrt(rho)) / (2 m sqrt(rho)).
// Cells below 1e-14 * max(rho) are evaluated at that floor and counted.
BohmField bohm_quantum_potential(const DensityField& rho, double mass);

// rho_i proportional to exp(-beta W(x_i)), normalized to unit mass by the
// midpoint rule. Insensitive to additive constants in W.
DensityField equilibrium_density(const std::function<double(double)>& potential,
                                 double beta, const Grid& grid);

// Relative density floor used by the Bohm operator.
inline constexpr double bohm_density_floor_fraction = 1e-14;

}  // namespace qdiff
