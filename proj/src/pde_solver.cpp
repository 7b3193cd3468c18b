#include "qdiff/pde_solver.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

#include "qdiff/constants.hpp"
#include "qdiff/errors.hpp"
#include "qdiff/fft.hpp"
#include "qdiff/kernels.hpp"
#include "qdiff/tridiag.hpp"

namespace qdiff {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// negatives below this fraction of the peak reject the step; smaller ones are
// solver roundoff in empty cells and are zeroed (counted, not silent)
constexpr double kNegativityTol = 1e-13;
constexpr double kMassGuard = 1e-9;
constexpr double kDispersionDropTol = 1e-12;
constexpr std::size_t kRegrowAfterAccepts = 200;

std::size_t usable_rows(const TimeSeries& ts) {
  std::size_t n = 0;
  for (const auto& row : ts.rows) {
    if (row.t <= ts.usable_until) ++n;
  }
  return n;
}

double wrap_offset(double u, double length) {
  return u - length * std::round(u / length);
}

struct Moments {
  double mass, mean_offset, dispersion, min_density;
};

// two-pass midpoint moments against the precomputed (possibly unwrapped)
// coordinate array
Moments moments(std::span<const double> rho, std::span<const double> u, double h) {
  Moments m;
  const double raw_sum = kernels::sum(rho);
  m.mass = raw_sum * h;
  m.mean_offset = kernels::dot(rho, u) / raw_sum;
  m.dispersion = kernels::central_second_moment(rho, u, m.mean_offset) / raw_sum;
  m.min_density = kernels::min_value(rho);
  return m;
}

// rho_i ~ exp(-(x_i - center)^2 / 2 sigma^2), normalized to unit mass
std::vector<double> gaussian_profile(const Grid& grid, double center, double sigma) {
  std::vector<double> rho(grid.cell_count);
  const bool periodic = grid.boundary == Boundary::periodic;
  for (std::size_t i = 0; i < grid.cell_count; ++i) {
    double u = grid.center(i) - center;
    if (periodic) u = wrap_offset(u, grid.domain_length);
    rho[i] = std::exp(-u * u / (2.0 * sigma * sigma));
  }
  const double total = kernels::sum(rho) * grid.cell_width();
  for (auto& v : rho) v /= total;
  return rho;
}

std::vector<double> uniform_profile(const Grid& grid) {
  return std::vector<double>(grid.cell_count, 1.0 / grid.domain_length);
}

// Implicit backward-Euler step of the exponentially fitted finite-volume
// discretization. The matrix rows are
//   rho_i [1 + alpha (B(z_i) + B(-z_{i-1}))]
//     - alpha B(-z_i) rho_{i+1} - alpha B(z_{i-1}) rho_{i-1} = rho_i^n
// with z_f = w[f+1] - w[f] across face f. Column sums are exactly one, so the
// step conserves mass; the matrix is an M-matrix, so the solution stays
// nonnegative for nonnegative input.
class ImplicitSgStepper {
 public:
  explicit ImplicitSgStepper(const Grid& grid)
      : grid_(grid),
        periodic_(grid.boundary == Boundary::periodic),
        faces_(periodic_ ? grid.cell_count : grid.cell_count - 1),
        weight_left_(faces_),
        weight_right_(faces_) {}

  void rebuild(std::span<const double> w, double alpha) {
    const std::size_t n = grid_.cell_count;
    kernels::sg_face_weights(w, periodic_, weight_left_, weight_right_);
    std::vector<double> diag(n, 1.0), lower(n, 0.0), upper(n, 0.0);
    for (std::size_t f = 0; f < faces_; ++f) {
      const std::size_t left = f;
      const std::size_t right = (f + 1 == n) ? 0 : f + 1;
      diag[left] += alpha * weight_left_[f];
      diag[right] += alpha * weight_right_[f];
      upper[left] = -alpha * weight_right_[f];
      lower[right] = -alpha * weight_left_[f];
    }
    system_.emplace(std::move(diag), std::move(lower), std::move(upper), periodic_);
  }

  void solve(std::span<const double> rho, std::span<double> out) const {
    system_->solve(rho, out);
  }

 private:
  Grid grid_;
  bool periodic_;
  std::size_t faces_;
  std::vector<double> weight_left_, weight_right_;
  std::optional<TridiagonalSystem> system_;
};

// Per-step state update hook for the parabolic modes. Fills `w` with the
// dimensionless potential (potential / local temperature) and returns the
// diffusion coefficient; `beta_q_inv` is the traced quantum temperature.
struct StepPlan {
  double diffusion = 1.0;
  std::optional<double> beta_q_inv;
};
using PrepareFn = std::function<StepPlan(std::span<const double> rho,
                                         const Moments& current, std::vector<double>& w)>;

struct DriverSpec {
  bool static_system = false;   // w and diffusion never change (semiclassical)
  bool guard_dispersion = false;  // treat a dispersion drop as instability
  // reject steps growing the dispersion faster than growth_cap * D * dt; the
  // quasi-equilibrium rate is 2 D, so excursions past this factor mean the
  // lagged force has gone unstable (0 disables the guard)
  double growth_cap = 0.0;
  const char* mode_name = "run";
};

RunResult drive_parabolic(const Grid& grid, const SolverConfig& config, double center,
                          std::vector<double> rho, const PrepareFn& prepare,
                          const DriverSpec& spec) {
  const std::size_t n = grid.cell_count;
  const double h = grid.cell_width();
  const bool periodic = grid.boundary == Boundary::periodic;

  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = grid.center(i) - center;
    if (periodic) u[i] = wrap_offset(u[i], grid.domain_length);
  }
  // cells within two widths of the unwrap seam, for the contamination guard
  std::vector<std::size_t> seam_cells;
  if (periodic) {
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(u[i]) >= grid.domain_length / 2.0 - 2.0 * h) seam_cells.push_back(i);
    }
  }

  RunResult result;
  result.final_state.grid = grid;
  TimeSeries& series = result.series;
  RunDiagnostics& diag = result.diagnostics;

  std::vector<double> w(n), next(n);
  ImplicitSgStepper stepper(grid);

  double t = 0.0;
  double dt = config.dt_initial;
  const double dt_min = config.dt_initial * 0x1p-40;
  bool system_stale = true;
  double built_dt = -1.0;
  Moments mom = moments(rho, u, h);
  StepPlan plan;

  const auto record = [&](std::optional<double> beta_q_inv) {
    series.rows.push_back({t, mom.mass, center + mom.mean_offset, mom.dispersion,
                           mom.min_density, beta_q_inv});
    if (!periodic || series.contaminated) return;
    double seam_mass = 0.0;
    for (std::size_t i : seam_cells) seam_mass += rho[i] * h;
    if (seam_mass > config.boundary_mass_tolerance) {
      series.contaminated = true;
      series.usable_until =
          series.rows.size() >= 2 ? series.rows[series.rows.size() - 2].t : 0.0;
    }
  };

  plan = prepare(rho, mom, w);
  record(plan.beta_q_inv);

  std::size_t accepts_since_halving = 0;
  std::size_t steps_since_output = 0;
  while (t < config.t_max * (1.0 - 1e-12) && !series.contaminated) {
    dt = std::min(dt, config.t_max - t);
    if (!spec.static_system) {
      plan = prepare(rho, mom, w);
      system_stale = true;
    }
    if (system_stale || dt != built_dt) {
      stepper.rebuild(w, plan.diffusion * dt / (h * h));
      system_stale = false;
      built_dt = dt;
    }
    stepper.solve(rho, next);

    const double peak = kernels::max_value(next);
    const double low = kernels::min_value(next);
    Moments next_mom = moments(next, u, h);
    bool ok = low >= -kNegativityTol * peak && std::isfinite(peak);
    ok = ok && std::abs(next_mom.mass - mom.mass) <= kMassGuard;
    if (ok && spec.guard_dispersion) {
      ok = next_mom.dispersion >= mom.dispersion * (1.0 - kDispersionDropTol);
    }
    if (ok && spec.growth_cap > 0.0) {
      ok = next_mom.dispersion - mom.dispersion <=
           spec.growth_cap * plan.diffusion * dt;
    }
    if (!ok) {
      ++diag.rejected_steps;
      if (config.adaptivity != Adaptivity::halving) {
        diag.aborted = true;
        diag.note = std::string(spec.mode_name) + ": step failed at fixed dt";
        break;
      }
      dt *= 0.5;
      accepts_since_halving = 0;
      system_stale = true;
      if (dt < dt_min) {
        diag.aborted = true;
        diag.note = std::string(spec.mode_name) + ": dt collapsed below dt_initial * 2^-40";
        break;
      }
      continue;
    }

    if (low < 0.0) {
      for (auto& v : next) {
        if (v < 0.0) {
          v = 0.0;
          ++diag.clamped_cells;
        }
      }
      next_mom = moments(next, u, h);
    }
    rho.swap(next);
    mom = next_mom;
    t += dt;
    ++diag.steps;
    if (config.adaptivity == Adaptivity::halving &&
        ++accepts_since_halving >= kRegrowAfterAccepts && dt < config.dt_initial) {
      dt = std::min(2.0 * dt, config.dt_initial);
      accepts_since_halving = 0;
      system_stale = true;
    }
    if (++steps_since_output >= config.output_stride ||
        t >= config.t_max * (1.0 - 1e-12)) {
      steps_since_output = 0;
      record(plan.beta_q_inv);
    }
  }

  diag.final_dt = dt;
  result.final_state.values = std::move(rho);
  return result;
}

double minimum_site(const Grid& grid, double drift_amplitude) {
  const double mid = grid.origin + grid.domain_length / 2.0;
  if (drift_amplitude == 0.0) return mid;
  // cosine minima sit at odd multiples of pi
  return kTwoPi * std::round((mid - std::numbers::pi) / kTwoPi) + std::numbers::pi;
}

void check_periodic_periods(const Grid& grid) {
  if (grid.boundary != Boundary::periodic) return;
  const double periods = grid.domain_length / kTwoPi;
  if (std::abs(periods - std::round(periods)) > 1e-9 * periods) {
    throw ConfigError("periodic domain must span an integer number of potential periods");
  }
}

std::vector<double> initial_profile(const Grid& grid, const SolverConfig& config,
                                    double center) {
  return config.uniform_initial ? uniform_profile(grid)
                                : gaussian_profile(grid, center, config.sigma0);
}

void require_periodic(const Grid& grid, const char* mode) {
  if (grid.boundary != Boundary::periodic) {
    throw ConfigError(std::string(mode) + " needs a periodic grid");
  }
}

}  // namespace

std::size_t TimeSeries::usable_row_count() const { return usable_rows(*this); }

void SolverConfig::validate(const Grid& grid) const {
  grid.validate();
  if (!(dt_initial > 0.0) || !(t_max > 0.0) || !(boundary_mass_tolerance > 0.0)) {
    throw ConfigError("solver config needs positive dt_initial, t_max and mass tolerance");
  }
  if (output_stride == 0) throw ConfigError("output_stride must be >= 1");
  if (!uniform_initial && !(sigma0 >= 2.0 * grid.cell_width())) {
    throw ConfigError("sigma0 must be at least two cell widths");
  }
}

Observables observables(const DensityField& rho) {
  const std::size_t n = rho.grid.cell_count;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rho.grid.center(i);
  const Moments m = moments(rho.values, x, rho.grid.cell_width());
  return {m.mass, m.mean_offset, m.dispersion, m.min_density};
}

Observables observables_unwrapped(const DensityField& rho, double center) {
  const std::size_t n = rho.grid.cell_count;
  std::vector<double> u(n);
  const bool periodic = rho.grid.boundary == Boundary::periodic;
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = rho.grid.center(i) - center;
    if (periodic) u[i] = wrap_offset(u[i], rho.grid.domain_length);
  }
  const Moments m = moments(rho.values, u, rho.grid.cell_width());
  return {m.mass, center + m.mean_offset, m.dispersion, m.min_density};
}

DensityField step_drift_diffusion(const DensityField& rho,
                                  std::span<const double> potential,
                                  double inv_temperature, double friction, double dt) {
  rho.grid.validate();
  if (potential.size() != rho.grid.cell_count) {
    throw ConfigError("potential field does not match the grid");
  }
  if (!(inv_temperature > 0.0) || !(friction > 0.0) || !(dt > 0.0)) {
    throw ConfigError("step needs positive inv_temperature, friction and dt");
  }
  const std::size_t n = rho.grid.cell_count;
  const double h = rho.grid.cell_width();
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = inv_temperature * potential[i];

  ImplicitSgStepper stepper(rho.grid);
  const double diffusion = 1.0 / (inv_temperature * friction);
  stepper.rebuild(w, diffusion * dt / (h * h));

  DensityField out;
  out.grid = rho.grid;
  out.values.resize(n);
  stepper.solve(rho.values, out.values);
  const double peak = kernels::max_value(out.values);
  const double low = kernels::min_value(out.values);
  if (!(low >= -kNegativityTol * peak) || !std::isfinite(peak)) {
    throw NumericalError("implicit step produced a negative cell");
  }
  for (auto& v : out.values) v = std::max(v, 0.0);
  return out;
}

RunResult run_semiclassical_reduced(double beta_u, double theta, const Grid& grid,
                                    const SolverConfig& config) {
  config.validate(grid);
  require_periodic(grid, "semiclassical run");
  if (beta_u < 0.0) throw ConfigError("beta_u must be >= 0");
  if (beta_u > 0.0) check_periodic_periods(grid);

  const std::size_t n = grid.cell_count;
  const double center = minimum_site(grid, beta_u);
  std::vector<double> w_static(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = beta_u * std::cos(grid.center(i));  // beta V
    w_static[i] = (1.0 - theta) * v;
    if (config.include_nonlinear) w_static[i] += theta / 3.0 * v * v;
  }

  PrepareFn prepare = [&w_static](std::span<const double>, const Moments&,
                                  std::vector<double>& w) {
    std::copy(w_static.begin(), w_static.end(), w.begin());
    return StepPlan{1.0, std::nullopt};
  };
  DriverSpec spec;
  spec.static_system = true;
  spec.mode_name = "semiclassical";
  return drive_parabolic(grid, config, center, initial_profile(grid, config, center),
                         prepare, spec);
}

RunResult run_quantum_temperature_reduced(double drift_amplitude, const Grid& grid,
                                          const SolverConfig& config) {
  config.validate(grid);
  if (config.uniform_initial && grid.boundary != Boundary::periodic) {
    throw ConfigError("uniform start needs a periodic grid");
  }
  if (!config.uniform_initial && !(config.sigma0 > 0.0)) {
    throw ConfigError("quantum temperature run needs sigma0 > 0");
  }
  if (drift_amplitude > 0.0) check_periodic_periods(grid);
  const std::size_t n = grid.cell_count;
  const double center = minimum_site(grid, drift_amplitude);
  std::vector<double> cosx(n);
  for (std::size_t i = 0; i < n; ++i) cosx[i] = std::cos(grid.center(i));

  PrepareFn prepare = [&cosx, drift_amplitude](std::span<const double>,
                                               const Moments& current,
                                               std::vector<double>& w) {
    // beta_Q lagged one step: the current dispersion sets the step diffusion
    const double beta_q = current.dispersion;  // reduced beta_Q = sigma^2
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] = beta_q * drift_amplitude * cosx[i];
    }
    return StepPlan{1.0 / beta_q, 1.0 / beta_q};
  };
  DriverSpec spec;
  spec.mode_name = "quantum-temperature";
  return drive_parabolic(grid, config, center, initial_profile(grid, config, center),
                         prepare, spec);
}

RunResult run_bohm_reduced(double drift_amplitude, const Grid& grid,
                           const SolverConfig& config) {
  config.validate(grid);
  if (config.adaptivity != Adaptivity::halving) {
    throw ConfigError("the Bohm run requires halving adaptivity");
  }
  if (!config.uniform_initial && !(config.sigma0 > 0.0)) {
    throw ConfigError("Bohm run needs sigma0 > 0");
  }
  if (drift_amplitude > 0.0) check_periodic_periods(grid);
  const std::size_t n = grid.cell_count;
  const double h = grid.cell_width();
  const bool periodic = grid.boundary == Boundary::periodic;
  const double center = minimum_site(grid, drift_amplitude);
  std::vector<double> cosx(n), qpot(n);
  for (std::size_t i = 0; i < n; ++i) cosx[i] = std::cos(grid.center(i));

  // The lagged quantum force is fourth-order stiff: the linearized mode
  // k_max = pi/h survives explicit treatment only for dt <~ h^4/8. Seed the
  // step at that bound; the halving controller handles the rest.
  const double dt_cap = h * h * h * h / 6.0;
  SolverConfig capped = config;
  const bool was_capped = config.dt_initial > dt_cap;
  if (was_capped) capped.dt_initial = dt_cap;

  std::size_t floored_total = 0;
  PrepareFn prepare = [&, drift_amplitude](std::span<const double> rho,
                                           const Moments& current,
                                           std::vector<double>& w) {
    // Split the Bohm flux into an implicit diffusion at the closure
    // temperature plus an explicit residual potential:
    //   rho d_x(V + Q) = rho d_x(V + Q - d ln rho) + d d_x rho,  d = 1/sigma^2.
    // For a Gaussian the residual Q - d ln rho is constant, so the lagged
    // part is small whenever the density is near the closure shape.
    const double d = 1.0 / current.dispersion;
    const double floor_value = 1e-14 * kernels::max_value(rho);
    floored_total += kernels::bohm_field(rho, 2.0, h, periodic, floor_value, qpot);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double phi = drift_amplitude * cosx[i] + qpot[i] -
                         d * std::log(std::max(rho[i], floor_value));
      w[i] = phi / d;
    }
    return StepPlan{d, d};
  };
  DriverSpec spec;
  spec.guard_dispersion = true;
  spec.growth_cap = 4.0;
  spec.mode_name = "bohm";
  RunResult result = drive_parabolic(grid, capped, center,
                                     initial_profile(grid, capped, center), prepare, spec);
  result.diagnostics.floored_cells = floored_total;
  if (was_capped && result.diagnostics.note.empty()) {
    result.diagnostics.note = "dt_initial reduced to the h^4 stability bound";
  }
  return result;
}

RunResult run_fourth_order_reduced(const Grid& grid, const SolverConfig& config) {
  config.validate(grid);
  const double center = grid.origin + grid.domain_length / 2.0;
  DensityField initial{grid, initial_profile(grid, config, center)};
  return run_fourth_order_field(initial, config);
}

RunResult run_fourth_order_field(const DensityField& initial, const SolverConfig& config) {
  const Grid& grid = initial.grid;
  grid.validate();
  require_periodic(grid, "fourth-order run");
  if (initial.values.size() != grid.cell_count) {
    throw ConfigError("initial field does not match the grid");
  }
  if (!(config.dt_initial > 0.0) || !(config.t_max > 0.0) || config.output_stride == 0) {
    throw ConfigError("fourth-order run needs positive dt_initial, t_max and stride");
  }
  const std::size_t n = grid.cell_count;
  const double h = grid.cell_width();
  const double center = grid.origin + grid.domain_length / 2.0;

  std::vector<std::complex<double>> spectrum(initial.values.begin(),
                                             initial.values.end());
  fft_radix2(spectrum, false);

  std::vector<double> k4(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double m = (i <= n / 2) ? static_cast<double>(i)
                                  : static_cast<double>(i) - static_cast<double>(n);
    const double k = kTwoPi * m / grid.domain_length;
    k4[i] = k * k * k * k;
  }

  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = wrap_offset(grid.center(i) - center, grid.domain_length);
  }

  RunResult result;
  result.final_state.grid = grid;
  std::vector<double> rho(n);
  std::vector<std::complex<double>> work(n);

  const auto emit = [&](double t) {
    const auto ni = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < ni; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      work[idx] = spectrum[idx] * std::exp(-k4[idx] * t);
    }
    fft_radix2(work, true);
    for (std::size_t i = 0; i < n; ++i) rho[i] = work[i].real();
    const Moments m = moments(rho, u, h);
    result.series.rows.push_back(
        {t, m.mass, center + m.mean_offset, m.dispersion, m.min_density, std::nullopt});
  };

  emit(0.0);
  const double out_dt = config.dt_initial * static_cast<double>(config.output_stride);
  double t = 0.0;
  while (t < config.t_max * (1.0 - 1e-12)) {
    t = std::min(t + out_dt, config.t_max);
    emit(t);
    ++result.diagnostics.steps;
  }
  result.diagnostics.final_dt = config.dt_initial;
  result.final_state.values = std::move(rho);
  return result;
}

namespace {

// reduced -> SI conversion of a finished run
RunResult scale_result(RunResult r, double length, double time, double energy) {
  for (auto& row : r.series.rows) {
    row.t *= time;
    row.mean *= length;
    row.dispersion *= length * length;
    row.min_density /= length;
    if (row.beta_q_inv) row.beta_q_inv = *row.beta_q_inv * energy;
  }
  if (std::isfinite(r.series.usable_until)) r.series.usable_until *= time;
  r.diagnostics.final_dt *= time;
  r.final_state.grid.domain_length *= length;
  r.final_state.grid.origin *= length;
  for (auto& v : r.final_state.values) v /= length;
  return r;
}

Grid reduce_grid(const Grid& grid, double length) {
  Grid g = grid;
  g.domain_length = grid.domain_length / length;
  g.origin = grid.origin / length;
  return g;
}

SolverConfig reduce_config(const SolverConfig& config, double length, double time) {
  SolverConfig c = config;
  c.dt_initial = config.dt_initial / time;
  c.t_max = config.t_max / time;
  c.sigma0 = config.sigma0 / length;
  return c;
}

double zero_t_time_scale(const ModelParams& p) {
  const double q2 = p.wavenumber * p.wavenumber;
  return 4.0 * p.mass * p.friction / (constants::hbar * constants::hbar * q2 * q2);
}

double zero_t_energy_scale(const ModelParams& p) {
  return constants::hbar * constants::hbar * p.wavenumber * p.wavenumber /
         (4.0 * p.mass);
}

double zero_t_drift_amplitude(const ModelParams& p) {
  return p.barrier_amplitude / zero_t_energy_scale(p);  // = 1 / (2 Lambda)
}

}  // namespace

RunResult run_semiclassical(const ModelParams& params, const DimensionlessGroups& groups,
                            const Grid& grid, const SolverConfig& config) {
  params.validate();
  if (!groups.beta || !groups.theta || !groups.beta_u) {
    throw RegimeError("semiclassical run needs a finite temperature");
  }
  const double length = 1.0 / params.wavenumber;
  const double time = *groups.beta * params.friction * length * length;
  RunResult r = run_semiclassical_reduced(*groups.beta_u, *groups.theta,
                                          reduce_grid(grid, length),
                                          reduce_config(config, length, time));
  return scale_result(std::move(r), length, time, 0.0);
}

RunResult run_quantum_temperature(const ModelParams& params, const Grid& grid,
                                  const SolverConfig& config) {
  params.validate();
  if (!params.zero_temperature()) {
    throw ConfigError("quantum temperature mode runs at T = 0");
  }
  const double length = 1.0 / params.wavenumber;
  const double time = zero_t_time_scale(params);
  RunResult r = run_quantum_temperature_reduced(zero_t_drift_amplitude(params),
                                                reduce_grid(grid, length),
                                                reduce_config(config, length, time));
  return scale_result(std::move(r), length, time, zero_t_energy_scale(params));
}

RunResult run_bohm_zero_temperature(const ModelParams& params, const Grid& grid,
                                    const SolverConfig& config) {
  params.validate();
  if (!params.zero_temperature()) {
    throw ConfigError("the Bohm mode runs at T = 0");
  }
  const double length = 1.0 / params.wavenumber;
  const double time = zero_t_time_scale(params);
  RunResult r = run_bohm_reduced(zero_t_drift_amplitude(params),
                                 reduce_grid(grid, length),
                                 reduce_config(config, length, time));
  return scale_result(std::move(r), length, time, zero_t_energy_scale(params));
}

RunResult run_fourth_order(const ModelParams& params, const Grid& grid,
                           const SolverConfig& config) {
  params.validate();
  const double length = 1.0 / params.wavenumber;
  const double time = zero_t_time_scale(params);
  RunResult r = run_fourth_order_reduced(reduce_grid(grid, length),
                                         reduce_config(config, length, time));
  return scale_result(std::move(r), length, time, zero_t_energy_scale(params));
}

}  // namespace qdiff
