#pragma once

#include <span>
#include <vector>

#include "qdiff/constants.hpp"

namespace qdiff {

// Parameters of the zero-temperature dispersion laws.
struct ClosureParams {
  double mass = 0.0;               // kg
  double friction = 0.0;           // kg/s
  double barrier_amplitude = 0.0;  // J, 0 selects the free laws
  double hbar = constants::hbar;   // J s
};

struct ClosurePoint {
  double t = 0.0;           // s
  double dispersion = 0.0;  // m^2
  double beta_q_u = 0.0;    // beta_Q U at that time (0 when U = 0)
};

// Left-hand side of the implicit dispersion relation:
//   x^2 [I_0^2(x) - I_1^2(x)],
// computed from scaled Bessel values; strictly increasing with derivative
// 2 x I_0^2(x).
double closure_lhs(double x);

// ln of closure_lhs, usable far beyond the linear overflow point.
double log_closure_lhs(double x);

// Solves closure_lhs(beta_Q U) = 16 m U^2 t / (hbar^2 b) and returns the
// dispersion hbar^2 beta_Q / (4 m). Requires U > 0 and t >= 0.
double dispersion_at_time(double t, const ClosureParams& params);

// Integrates d sigma^2 / dt = 2 / (beta_Q b I_0^2(beta_Q U)) with
// beta_Q = 4 m sigma^2 / hbar^2 from sigma0, sampled at the given increasing
// times (adaptive embedded Runge-Kutta, relative step control 1e-10).
std::vector<ClosurePoint> integrate_closure_ode(const ClosureParams& params,
                                                std::span<const double> times,
                                                double sigma0);

// Convenience overload over `points` log-spaced times in [1e-6 t_max, t_max]
// (plus t = 0 when sigma0 > 0).
std::vector<ClosurePoint> integrate_closure_ode(const ClosureParams& params,
                                                double t_max, double sigma0,
                                                std::size_t points = 64);

// Logarithmic deep-barrier asymptote (hbar^2 / 8 m U) ln(32 pi m U^2 t / hbar^2 b).
// Throws RegimeError when the logarithm argument is <= 1.
double asymptotic_dispersion(double t, const ClosureParams& params);

// Length and time scales quoted alongside the log law.
struct ClosureScales {
  double lambda_u_squared;  // m^2, hbar^2 / (8 m U)
  double relaxation_time;   // s, b / (m omega_U^2), omega_U = 4 U / hbar
  double log_unit_time;     // s, hbar^2 b / (32 pi m U^2)
};
ClosureScales closure_scales(const ClosureParams& params);

// sigma^2 = hbar sqrt(t / (m b)), the structureless-environment law.
double free_dispersion(double t, double mass, double friction,
                       double hbar = constants::hbar);

}  // namespace qdiff
