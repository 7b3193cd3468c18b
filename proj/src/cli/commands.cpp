#include "qdiff/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "qdiff/analysis.hpp"
#include "qdiff/cli/csv.hpp"
#include "qdiff/constants.hpp"
#include "qdiff/errors.hpp"
#include "qdiff/gaussian_closure.hpp"
#include "qdiff/lifson_jackson.hpp"
#include "qdiff/pde_solver.hpp"
#include "qdiff/special_functions.hpp"

namespace qdiff::cli {

using nlohmann::json;

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw ConfigError("cannot open output file '" + path + "'");
  return file;
}

DimensionlessGroups reduced_thermal_groups(double beta_u, double theta) {
  DimensionlessGroups g;
  g.beta = 1.0;
  g.beta_u = beta_u;
  g.theta = theta;
  if (beta_u > 0.0) g.lambda_param = theta / beta_u;
  return g;
}

struct DcoefTriple {
  DiffusionEstimate quadrature, closed, arrhenius;
};

// All three estimates for the simplified effective potential W = (1-theta) V.
DcoefTriple dcoef_triple(double beta_u, double theta, double beta, double friction) {
  const double u = beta_u / beta;
  const auto w = [=](double x) { return (1.0 - theta) * u * std::cos(x); };
  DimensionlessGroups groups = reduced_thermal_groups(beta_u, theta);
  groups.beta = beta;
  DcoefTriple t;
  t.quadrature = dcoef_quadrature(w, 2.0 * std::numbers::pi, beta, friction);
  t.closed = dcoef_closed_form(groups, friction);
  t.arrhenius = dcoef_arrhenius(groups, friction);
  return t;
}

void write_dcoef_table(std::ostream& out, const DcoefTriple& t, double beta_u,
                       double theta, bool si_units) {
  out << "# " << tool_version << " dcoef units=" << (si_units ? "SI" : "reduced")
      << " beta_u=" << format_double(beta_u) << " theta=" << format_double(theta)
      << "\n";
  out << "method,value,log_value,E_a_over_U,prefactor\n";
  const auto row = [&](const DiffusionEstimate& e) {
    out << to_string(e.method) << ',' << format_double(e.value) << ','
        << format_double(e.log_value) << ',';
    if (e.activation_energy) {
      out << format_double(2.0 - 2.0 * theta) << ',' << format_double(*e.prefactor);
    } else {
      out << ',';
    }
    out << '\n';
  };
  row(t.quadrature);
  row(t.closed);
  row(t.arrhenius);
  if (!t.arrhenius.regime_ok) {
    out << "# warning: " << t.arrhenius.note << "\n";
  }
}

json groups_to_json(const DimensionlessGroups& g) {
  json j = json::object();
  const auto set = [&](const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
  };
  set("beta", g.beta);
  set("lambda_T", g.lambda_thermal);
  set("theta", g.theta);
  set("beta_u", g.beta_u);
  set("lambda_param", g.lambda_param);
  set("omega_U", g.omega_u);
  return j;
}

struct ClaimRow {
  std::string name;
  double computed;
  std::string expectation;
  bool pass;
};

}  // namespace

int cmd_dcoef(const DcoefOptions& options, std::ostream& out) {
  if (options.beta_u < 0.0 || options.theta < 0.0) {
    throw ConfigError("--beta-u and --theta must be >= 0");
  }
  const bool si_units = options.friction.has_value() || options.temperature.has_value();
  double beta = 1.0, friction = 1.0;
  if (si_units) {
    if (!options.friction || !options.temperature) {
      throw ConfigError("SI output needs both --friction and --temperature-k");
    }
    if (!(*options.friction > 0.0) || !(*options.temperature > 0.0)) {
      throw ConfigError("--friction and --temperature-k must be > 0");
    }
    beta = 1.0 / (constants::k_boltzmann * *options.temperature);
    friction = *options.friction;
  }

  const DcoefTriple t = dcoef_triple(options.beta_u, options.theta, beta, friction);
  write_dcoef_table(out, t, options.beta_u, options.theta, si_units);
  if (!options.csv_path.empty()) {
    auto file = open_output(options.csv_path);
    write_dcoef_table(file, t, options.beta_u, options.theta, si_units);
  }
  return exit_ok;
}

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Grid grid = build_grid(config);

  RunResult result;
  if (config.is_physical()) {
    const ModelParams& p = *config.physical;
    switch (config.mode) {
      case Mode::semiclassical:
        result = run_semiclassical(p, config.groups_echo, grid, config.solver);
        break;
      case Mode::quantum_temp:
        result = run_quantum_temperature(p, grid, config.solver);
        break;
      case Mode::bohm:
        result = run_bohm_zero_temperature(p, grid, config.solver);
        break;
      case Mode::fourth_order:
        result = run_fourth_order(p, grid, config.solver);
        break;
    }
  } else {
    const DimensionlessInput& d = *config.dimensionless;
    const double drift =
        d.lambda_param ? 1.0 / (2.0 * *d.lambda_param) : 0.0;
    switch (config.mode) {
      case Mode::semiclassical:
        result = run_semiclassical_reduced(*d.beta_u, *d.theta, grid, config.solver);
        break;
      case Mode::quantum_temp:
        result = run_quantum_temperature_reduced(drift, grid, config.solver);
        break;
      case Mode::bohm:
        result = run_bohm_reduced(drift, grid, config.solver);
        break;
      case Mode::fourth_order:
        result = run_fourth_order_reduced(grid, config.solver);
        break;
    }
  }

  CsvHeader header;
  header.mode = to_string(config.mode);
  header.units = config.is_physical() ? "SI" : "reduced";
  header.groups = config.groups_echo;
  if (config.output_csv.empty()) {
    write_timeseries_csv(out, result.series, header);
  } else {
    auto file = open_output(config.output_csv);
    write_timeseries_csv(file, result.series, header);
  }

  const int status =
      result.diagnostics.aborted ? exit_numerical_error : exit_ok;
  json summary;
  summary["tool"] = tool_version;
  summary["mode"] = to_string(config.mode);
  summary["units"] = header.units;
  summary["groups"] = groups_to_json(config.groups_echo);
  summary["grid"] = {{"cells", grid.cell_count},
                     {"domain_length", grid.domain_length},
                     {"boundary", grid.boundary == Boundary::periodic ? "periodic" : "no_flux"}};
  summary["time"] = {{"dt_initial", config.solver.dt_initial},
                     {"t_max", config.solver.t_max},
                     {"output_stride", config.solver.output_stride}};
  summary["contaminated"] = result.series.contaminated;
  if (result.series.contaminated) {
    summary["usable_until"] = result.series.usable_until;
  }
  summary["aborted"] = result.diagnostics.aborted;
  if (!result.diagnostics.note.empty()) summary["note"] = result.diagnostics.note;
  summary["diagnostics"] = {{"steps", result.diagnostics.steps},
                            {"rejected_steps", result.diagnostics.rejected_steps},
                            {"clamped_cells", result.diagnostics.clamped_cells},
                            {"floored_cells", result.diagnostics.floored_cells},
                            {"final_dt", result.diagnostics.final_dt}};
  if (!result.series.rows.empty()) {
    const auto& last = result.series.rows.back();
    summary["final"] = {{"t", last.t},
                        {"mass", last.mass},
                        {"mean", last.mean},
                        {"sigma2", last.dispersion},
                        {"min_rho", last.min_density}};
  }
  summary["exit_status"] = status;

  if (config.output_summary.empty()) {
    err << summary.dump(2) << "\n";
  } else {
    auto file = open_output(config.output_summary);
    file << summary.dump(2) << "\n";
  }
  return status;
}

int cmd_closure(const ClosureOptions& options, std::ostream& out) {
  ClosureParams params;
  if (options.reduced) {
    params.mass = 1.0;
    params.friction = 1.0;
    params.hbar = 1.0;
    params.barrier_amplitude = options.u_j.value_or(0.0);
  } else {
    if (options.particle) {
      if (*options.particle == "proton") {
        params.mass = constants::proton_mass;
      } else if (*options.particle == "electron") {
        params.mass = constants::electron_mass;
      } else {
        throw ConfigError("unknown particle preset '" + *options.particle + "'");
      }
    } else if (options.mass) {
      params.mass = *options.mass;
    } else {
      throw ConfigError("closure needs --particle or --mass-kg (or --reduced)");
    }
    if (!options.friction) throw ConfigError("closure needs --friction");
    params.friction = *options.friction;
    if (options.u_ev && options.u_j) {
      throw ConfigError("--u-ev and --u-j are mutually exclusive");
    }
    params.barrier_amplitude = options.u_ev
                                   ? *options.u_ev * constants::electron_volt
                                   : options.u_j.value_or(0.0);
  }
  if (!(options.t_max > 0.0) || options.points < 2) {
    throw ConfigError("closure needs --t-max > 0 and --points >= 2");
  }
  const double t_min =
      options.t_min > 0.0 ? options.t_min : options.t_max * 1e-6;
  if (!(t_min < options.t_max)) throw ConfigError("--t-min must be below --t-max");

  std::vector<double> times(options.points);
  for (std::size_t i = 0; i < options.points; ++i) {
    times[i] = t_min * std::pow(options.t_max / t_min,
                                static_cast<double>(i) /
                                    static_cast<double>(options.points - 1));
  }
  const auto ode = integrate_closure_ode(params, times, 0.0);

  std::ostringstream csv;
  csv << "# " << tool_version << " closure units="
      << (options.reduced ? "reduced" : "SI")
      << " U=" << format_double(params.barrier_amplitude)
      << " mass=" << format_double(params.mass)
      << " friction=" << format_double(params.friction) << "\n";
  csv << "t,sigma2_ode,sigma2_implicit,sigma2_asymptote,beta_q_u\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    double implicit_value;
    if (params.barrier_amplitude > 0.0) {
      implicit_value = dispersion_at_time(t, params);
    } else {
      implicit_value = free_dispersion(t, params.mass, params.friction, params.hbar);
    }
    std::string asymptote;
    if (params.barrier_amplitude > 0.0) {
      try {
        asymptote = format_double(asymptotic_dispersion(t, params));
      } catch (const RegimeError&) {
        asymptote.clear();  // argument of the log law not yet above 1
      }
    }
    csv << format_double(t) << ',' << format_double(ode[i].dispersion) << ','
        << format_double(implicit_value) << ',' << asymptote << ','
        << format_double(ode[i].beta_q_u) << '\n';
  }

  out << csv.str();
  if (!options.csv_path.empty()) {
    auto file = open_output(options.csv_path);
    file << csv.str();
  }
  return exit_ok;
}

int cmd_check_paper(std::ostream& out) {
  namespace c = constants;
  std::vector<ClaimRow> rows;
  const double q = 2.0 * std::numbers::pi / (3.0 * c::angstrom);

  ModelParams proton{c::proton_mass, 1.0, c::room_temperature, 0.0, q};
  ModelParams electron{c::electron_mass, 1.0, c::room_temperature, 0.0, q};
  const auto pg = derive_groups(proton);
  const auto eg = derive_groups(electron);

  const double lt_p = *pg.lambda_thermal / c::angstrom;
  rows.push_back({"lambda_T(proton, 298.15 K) [A]", lt_p, "0.2 +- 5%",
                  std::abs(lt_p / 0.2 - 1.0) <= 0.05});

  rows.push_back({"theta(proton, 3 A lattice)", *pg.theta, "[0.08, 0.11]",
                  *pg.theta >= 0.08 && *pg.theta <= 0.11});

  const double t_free = temperature_for_theta(1.0, c::proton_mass, q);
  rows.push_back({"T(theta = 1, proton, 3 A) [K]", t_free, "[24, 27]",
                  t_free >= 24.0 && t_free <= 27.0});

  const double lt_e = *eg.lambda_thermal / c::angstrom;
  rows.push_back({"lambda_T(electron, 298.15 K) [A]", lt_e, "8.6 +- 2%",
                  std::abs(lt_e / 8.6 - 1.0) <= 0.02});

  rows.push_back({"theta(electron, 3 A lattice)", *eg.theta, "162 +- 2",
                  std::abs(*eg.theta - 162.0) <= 2.0});

  // activation energy reduction is exact: E_a = 2 (1 - theta) U
  {
    DimensionlessGroups g = reduced_thermal_groups(10.0, 0.1);
    const auto arr = dcoef_arrhenius(g, 1.0);
    const double ea_over_u = *arr.activation_energy / 10.0;  // U = beta_u / beta
    rows.push_back({"E_a / U at theta = 0.1", ea_over_u, "1.8 exactly",
                    std::abs(ea_over_u - 1.8) <= 1e-12});
  }

  // free diffusion recovers the Einstein coefficient exactly
  {
    DimensionlessGroups g = reduced_thermal_groups(0.0, 0.0);
    const auto closed = dcoef_closed_form(g, 1.0);
    const auto quad =
        dcoef_quadrature([](double) { return 0.0; }, 2.0 * std::numbers::pi, 1.0, 1.0);
    const bool pass = std::abs(closed.value - 1.0) <= 1e-12 &&
                      std::abs(quad.value - 1.0) <= 1e-12;
    rows.push_back({"D(U = 0) * beta * b", closed.value, "1 exactly", pass});
  }

  // small-time closure dispersion approaches the free quantum law
  {
    ClosureParams params{1.0, 1.0, 1.0, 1.0};
    const double t = 1e-8;  // beta_Q U = 4e-4: free-law regime
    const double ratio = dispersion_at_time(t, params) / free_dispersion(t, 1.0, 1.0, 1.0);
    rows.push_back({"closure / free law at beta_Q U = 4e-4", ratio, "1 +- 1e-6",
                    std::abs(ratio - 1.0) <= 1e-6});
  }

  out << "# " << tool_version << " paper-claims check\n";
  bool all_pass = true;
  for (const auto& row : rows) {
    all_pass = all_pass && row.pass;
    out << (row.pass ? "PASS" : "FAIL") << "  " << row.name << " = "
        << format_double(row.computed) << "  (expected " << row.expectation << ")\n";
  }
  out << (all_pass ? "all claims reproduced\n" : "claim check FAILED\n");
  return all_pass ? exit_ok : exit_claim_failure;
}

int cmd_sweep(const SweepConfig& config, std::ostream& out) {
  struct Point {
    double beta_u = 0.0, theta = 0.0;
    bool valid = true;
    std::string error;
    DcoefTriple triple;
  };

  const bool lambda_axis = !config.lambda_param.empty();
  const auto& axis = lambda_axis ? config.lambda_param : config.beta_u;
  std::vector<Point> points;
  points.reserve(axis.size() * config.theta.size());
  for (double a : axis) {
    for (double theta : config.theta) {
      Point p;
      p.theta = theta;
      if (lambda_axis) {
        // lambda = theta / (beta U) links the zero-T and thermal groups
        if (theta > 0.0 && a > 0.0) {
          p.beta_u = theta / a;
        } else {
          p.valid = false;
          p.error = "lambda_param grid needs theta > 0 and lambda > 0";
        }
      } else {
        p.beta_u = a;
        if (a < 0.0 || theta < 0.0) {
          p.valid = false;
          p.error = "beta_u and theta must be >= 0";
        }
      }
      points.push_back(std::move(p));
    }
  }

#ifdef _OPENMP
  const int workers = config.workers > 0 ? static_cast<int>(config.workers)
                                         : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(points.size()); ++i) {
    Point& p = points[static_cast<std::size_t>(i)];
    if (!p.valid) continue;
    try {
      p.triple = dcoef_triple(p.beta_u, p.theta, 1.0, 1.0);
    } catch (const std::exception& e) {
      p.valid = false;
      p.error = e.what();
    }
  }

  std::ostringstream csv;
  csv << "# " << tool_version << " sweep units=reduced (D in 1/(beta b), E_a in k_B T)\n";
  csv << "index,beta_u,theta,lambda_param,D_quadrature,D_closed,D_arrhenius,"
         "log_D_closed,E_a,error\n";
  std::size_t succeeded = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    csv << i << ',' << format_double(p.beta_u) << ',' << format_double(p.theta) << ',';
    if (p.beta_u > 0.0) csv << format_double(p.theta / p.beta_u);
    csv << ',';
    if (p.valid) {
      ++succeeded;
      csv << format_double(p.triple.quadrature.value) << ','
          << format_double(p.triple.closed.value) << ','
          << format_double(p.triple.arrhenius.value) << ','
          << format_double(p.triple.closed.log_value) << ','
          << format_double(*p.triple.arrhenius.activation_energy) << ',';
    } else {
      csv << ",,,,," << p.error;
    }
    csv << '\n';
  }

  out << csv.str();
  if (!config.output_csv.empty()) {
    auto file = open_output(config.output_csv);
    file << csv.str();
  }
  return succeeded > 0 ? exit_ok : exit_numerical_error;
}

}  // namespace qdiff::cli
