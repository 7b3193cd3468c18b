#include "qdiff/gaussian_closure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qdiff/errors.hpp"
#include "qdiff/special_functions.hpp"

namespace qdiff {

namespace {

void validate_params(const ClosureParams& p, bool need_barrier) {
  if (!(p.mass > 0.0) || !(p.friction > 0.0) || !(p.hbar > 0.0)) {
    throw ConfigError("closure params need positive mass, friction and hbar");
  }
  if (p.barrier_amplitude < 0.0 || !std::isfinite(p.barrier_amplitude)) {
    throw ConfigError("closure barrier_amplitude must be >= 0");
  }
  if (need_barrier && p.barrier_amplitude == 0.0) {
    throw RegimeError("this dispersion law needs barrier_amplitude > 0");
  }
}

// reduced time of the implicit relation
double reduced_time(double t, const ClosureParams& p) {
  return 16.0 * p.mass * p.barrier_amplitude * p.barrier_amplitude * t /
         (p.hbar * p.hbar * p.friction);
}

// derivative of closure_lhs
double closure_lhs_derivative(double x) {
  return std::exp(std::log(2.0 * x) + 2.0 * log_i0(x));
}

// right-hand side of dy/dR = 1 / (2 y I_0^2(y)), overflow-safe; NaN outside
// the domain so a rejected trial step is seen by the error control
double closure_ode_rhs(double y) {
  if (!(y > 0.0) || !std::isfinite(y)) return std::numeric_limits<double>::quiet_NaN();
  return std::exp(-std::log(2.0 * y) - 2.0 * log_i0(y));
}

// small-argument inversion of closure_lhs(y) = R, good to O(R^2)
double small_root(double r) { return std::sqrt(r) * (1.0 - r / 8.0); }

// Cash-Karp embedded Runge-Kutta 4(5) step for the scalar closure ODE.
// Returns the 5th-order solution and the embedded error estimate.
struct RkStep {
  double y;
  double error;
};

RkStep cash_karp_step(double y, double h) {
  const double k1 = closure_ode_rhs(y);
  const double k2 = closure_ode_rhs(y + h * (k1 / 5.0));
  const double k3 = closure_ode_rhs(y + h * (3.0 * k1 + 9.0 * k2) / 40.0);
  const double k4 = closure_ode_rhs(y + h * (0.3 * k1 - 0.9 * k2 + 1.2 * k3));
  const double k5 = closure_ode_rhs(
      y + h * (-11.0 / 54.0 * k1 + 2.5 * k2 - 70.0 / 27.0 * k3 + 35.0 / 27.0 * k4));
  const double k6 = closure_ode_rhs(
      y + h * (1631.0 / 55296.0 * k1 + 175.0 / 512.0 * k2 + 575.0 / 13824.0 * k3 +
               44275.0 / 110592.0 * k4 + 253.0 / 4096.0 * k5));
  const double y5 = y + h * (37.0 / 378.0 * k1 + 250.0 / 621.0 * k3 +
                             125.0 / 594.0 * k4 + 512.0 / 1771.0 * k6);
  const double y4 = y + h * (2825.0 / 27648.0 * k1 + 18575.0 / 48384.0 * k3 +
                             13525.0 / 55296.0 * k4 + 277.0 / 14336.0 * k5 +
                             0.25 * k6);
  return {y5, std::abs(y5 - y4)};
}

// Adaptive integration of the closure ODE from (r0, y0) to r1.
double advance_closure_ode(double y, double r0, double r1) {
  constexpr double rel_tol = 1e-10;
  double r = r0;
  // keep the first trial step well inside the solution scale
  double h = std::min((r1 - r0) * 1e-3, 0.25 * y / closure_ode_rhs(y));
  int steps = 0;
  while (r < r1) {
    if (++steps > 2000000) {
      throw NumericalError("closure ODE step control failed to reach target time");
    }
    h = std::min(h, r1 - r);
    const RkStep s = cash_karp_step(y, h);
    const bool unusable = !std::isfinite(s.y) || s.y <= 0.0 || !std::isfinite(s.error);
    const double scale = rel_tol * std::max(std::abs(y), std::abs(s.y));
    if (unusable || s.error > scale) {
      if (!(r + h > r)) {
        throw NumericalError("closure ODE step control collapsed below the time resolution");
      }
      h *= unusable ? 0.2 : std::max(0.2, 0.9 * std::pow(scale / s.error, 0.25));
      continue;
    }
    y = s.y;
    r += h;
    if (s.error > 0.0) {
      h *= std::min(5.0, 0.9 * std::pow(scale / s.error, 0.2));
    } else {
      h *= 5.0;
    }
  }
  return y;
}

}  // namespace

double closure_lhs(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw NumericalError("closure_lhs argument must be finite and >= 0");
  }
  if (x == 0.0) return 0.0;
  const BesselEval i0 = bessel_i0(x);
  const BesselEval i1 = bessel_i1(x);
  const double scaled_diff =
      (i0.scaled - i1.scaled) * (i0.scaled + i1.scaled);  // e^{-2x}(I0^2 - I1^2)
  return x * x * scaled_diff * std::exp(2.0 * x);
}

double log_closure_lhs(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw NumericalError("log_closure_lhs argument must be finite and > 0");
  }
  const BesselEval i0 = bessel_i0(x);
  const BesselEval i1 = bessel_i1(x);
  const double scaled_diff = (i0.scaled - i1.scaled) * (i0.scaled + i1.scaled);
  return 2.0 * std::log(x) + std::log(scaled_diff) + 2.0 * x;
}

double dispersion_at_time(double t, const ClosureParams& params) {
  validate_params(params, /*need_barrier=*/true);
  if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("time must be >= 0");
  if (t == 0.0) return 0.0;

  const double r = reduced_time(t, params);
  const double log_r = std::log(r);

  // Bracket: closure_lhs(x) >= x^2, so the free-law seed sqrt(R) bounds the
  // root from above; the log-law seed is also an upper bound once it exceeds 1
  // (closure_lhs(x) >= e^{2x}/2pi holds for x >= 0.86) and is far tighter at
  // large R. The root finder walks down from the tighter of the two.
  double hi = std::sqrt(r) * (1.0 + 1e-12) + 1e-300;
  const double log_two_pi_r = std::log(2.0 * std::numbers::pi) + log_r;
  if (log_two_pi_r >= 2.0) {
    hi = std::min(hi, 0.5 * log_two_pi_r * (1.0 + 1e-12));
  }
  double lo = 0.0;

  // Newton iteration on log(closure_lhs) with bisection fallback.
  double x = std::min(hi, std::max(small_root(std::min(r, 1.0)), hi * 0.5));
  for (int iter = 0; iter < 200; ++iter) {
    const double g = log_closure_lhs(x) - log_r;
    if (g > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    const double slope = closure_lhs_derivative(x) / std::exp(log_closure_lhs(x));
    double next = x - g / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double change = std::abs(next - x);
    x = next;
    if (change <= 1e-12 * x) {
      return params.hbar * params.hbar * x / (4.0 * params.mass * params.barrier_amplitude);
    }
  }
  throw NumericalError("closure root finding did not converge");
}

std::vector<ClosurePoint> integrate_closure_ode(const ClosureParams& params,
                                                std::span<const double> times,
                                                double sigma0) {
  validate_params(params, /*need_barrier=*/false);
  if (sigma0 < 0.0 || times.empty()) {
    throw ConfigError("closure ODE needs sigma0 >= 0 and a nonempty time grid");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0) || (i > 0 && times[i] <= times[i - 1])) {
      throw ConfigError("closure ODE times must be positive and increasing");
    }
  }

  const std::size_t points = times.size();
  std::vector<ClosurePoint> out;
  out.reserve(points + 1);
  if (sigma0 > 0.0) {
    out.push_back({0.0, sigma0 * sigma0, 0.0});
  }

  const double u = params.barrier_amplitude;
  if (u == 0.0) {
    // separable free case: sigma^4 = sigma0^4 + hbar^2 t / (m b)
    for (double t : times) {
      const double s4 = std::pow(sigma0, 4) +
                        params.hbar * params.hbar * t / (params.mass * params.friction);
      out.push_back({t, std::sqrt(s4), 0.0});
    }
    return out;
  }

  const double y_of_sigma2 = 4.0 * params.mass * u / (params.hbar * params.hbar);
  double y = sigma0 * sigma0 * y_of_sigma2;
  double r = 0.0;
  constexpr double kSeriesLimit = 9e-6;  // y ~ 3e-3, inversion error O(R^2) ~ 1e-11
  for (double t : times) {
    const double r_target = reduced_time(t, params);
    if (y == 0.0 && r_target <= kSeriesLimit) {
      out.push_back({t, small_root(r_target) / y_of_sigma2, small_root(r_target)});
      continue;
    }
    if (y == 0.0) {
      r = kSeriesLimit;
      y = small_root(r);
    }
    y = advance_closure_ode(y, r, r_target);
    r = r_target;
    out.push_back({t, y / y_of_sigma2, y});
  }
  return out;
}

std::vector<ClosurePoint> integrate_closure_ode(const ClosureParams& params,
                                                double t_max, double sigma0,
                                                std::size_t points) {
  if (!(t_max > 0.0) || points < 2) {
    throw ConfigError("closure ODE needs t_max > 0 and points >= 2");
  }
  std::vector<double> times(points);
  const double t_min = t_max * 1e-6;
  for (std::size_t i = 0; i < points; ++i) {
    times[i] = t_min * std::pow(t_max / t_min, static_cast<double>(i) /
                                                   static_cast<double>(points - 1));
  }
  return integrate_closure_ode(params, times, sigma0);
}

double asymptotic_dispersion(double t, const ClosureParams& params) {
  validate_params(params, /*need_barrier=*/true);
  const double argument = 32.0 * std::numbers::pi * params.mass *
                          params.barrier_amplitude * params.barrier_amplitude * t /
                          (params.hbar * params.hbar * params.friction);
  if (!(argument > 1.0)) {
    throw RegimeError("log-law argument 32 pi m U^2 t / (hbar^2 b) must exceed 1");
  }
  return params.hbar * params.hbar /
         (8.0 * params.mass * params.barrier_amplitude) * std::log(argument);
}

ClosureScales closure_scales(const ClosureParams& params) {
  validate_params(params, /*need_barrier=*/true);
  ClosureScales s;
  s.lambda_u_squared =
      params.hbar * params.hbar / (8.0 * params.mass * params.barrier_amplitude);
  const double omega_u = 4.0 * params.barrier_amplitude / params.hbar;
  s.relaxation_time = params.friction / (params.mass * omega_u * omega_u);
  s.log_unit_time = params.hbar * params.hbar * params.friction /
                    (32.0 * std::numbers::pi * params.mass * params.barrier_amplitude *
                     params.barrier_amplitude);
  return s;
}

double free_dispersion(double t, double mass, double friction, double hbar) {
  if (!(mass > 0.0) || !(friction > 0.0) || !(hbar > 0.0)) {
    throw ConfigError("free dispersion needs positive mass, friction and hbar");
  }
  if (!(t >= 0.0)) throw ConfigError("time must be >= 0");
  return hbar * std::sqrt(t / (mass * friction));
}

}  // namespace qdiff
