#include "qdiff/cli/config.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include <json.hpp>

#include "qdiff/constants.hpp"
#include "qdiff/errors.hpp"

namespace qdiff::cli {

using nlohmann::json;

const char* to_string(Mode m) {
  switch (m) {
    case Mode::semiclassical: return "semiclassical";
    case Mode::quantum_temp: return "quantum-temp";
    case Mode::bohm: return "bohm";
    case Mode::fourth_order: return "fourth-order";
  }
  return "unknown";
}

Mode mode_from_string(const std::string& s) {
  if (s == "semiclassical") return Mode::semiclassical;
  if (s == "quantum-temp") return Mode::quantum_temp;
  if (s == "bohm") return Mode::bohm;
  if (s == "fourth-order") return Mode::fourth_order;
  throw ConfigError("unknown mode '" + s + "'");
}

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& where) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      throw ConfigError("unknown key '" + item.key() + "' in " + where);
    }
  }
}

double number_at(const json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw ConfigError("'" + key + "' must be a number");
  return v.get<double>();
}

std::optional<double> optional_number(const json& j, const std::string& key) {
  if (!j.contains(key)) return std::nullopt;
  return number_at(j, key);
}

// exactly one of the listed keys may be present
std::optional<std::string> at_most_one(const json& j,
                                       std::initializer_list<const char*> keys,
                                       const std::string& where) {
  std::optional<std::string> found;
  for (const char* k : keys) {
    if (j.contains(k)) {
      if (found) {
        throw ConfigError("keys '" + *found + "' and '" + k + "' are mutually exclusive in " +
                          where);
      }
      found = k;
    }
  }
  return found;
}

ModelParams parse_physical(const json& j, Mode mode) {
  check_keys(j,
             {"particle", "mass_kg", "temperature_K", "U_eV", "U_J", "lattice_A",
              "lattice_m", "wavenumber_per_m", "friction_kg_per_s"},
             "physical");
  ModelParams p;

  const auto mass_key = at_most_one(j, {"particle", "mass_kg"}, "physical");
  if (!mass_key) throw ConfigError("physical needs 'particle' or 'mass_kg'");
  if (*mass_key == "particle") {
    const std::string name = j.at("particle").get<std::string>();
    if (name == "proton") {
      p.mass = constants::proton_mass;
    } else if (name == "electron") {
      p.mass = constants::electron_mass;
    } else {
      throw ConfigError("unknown particle preset '" + name + "'");
    }
  } else {
    p.mass = number_at(j, "mass_kg");
  }

  const auto u_key = at_most_one(j, {"U_eV", "U_J"}, "physical");
  if (u_key) {
    p.barrier_amplitude = (*u_key == "U_eV")
                              ? number_at(j, "U_eV") * constants::electron_volt
                              : number_at(j, "U_J");
  }

  const auto q_key =
      at_most_one(j, {"lattice_A", "lattice_m", "wavenumber_per_m"}, "physical");
  if (!q_key) throw ConfigError("physical needs a lattice constant or wavenumber");
  if (*q_key == "wavenumber_per_m") {
    p.wavenumber = number_at(j, "wavenumber_per_m");
  } else {
    const double a = (*q_key == "lattice_A")
                         ? number_at(j, "lattice_A") * constants::angstrom
                         : number_at(j, "lattice_m");
    if (!(a > 0.0)) throw ConfigError("lattice constant must be > 0");
    p.wavenumber = 2.0 * std::numbers::pi / a;
  }

  p.temperature = optional_number(j, "temperature_K")
                      .value_or(mode == Mode::semiclassical ? constants::room_temperature : 0.0);
  if (!j.contains("friction_kg_per_s")) {
    throw ConfigError("physical needs 'friction_kg_per_s'");
  }
  p.friction = number_at(j, "friction_kg_per_s");
  p.validate();
  return p;
}

DimensionlessInput parse_dimensionless(const json& j, Mode mode) {
  check_keys(j, {"beta_u", "theta", "lambda_param", "free"}, "dimensionless");
  DimensionlessInput d;
  d.beta_u = optional_number(j, "beta_u");
  d.theta = optional_number(j, "theta");
  d.lambda_param = optional_number(j, "lambda_param");
  if (j.contains("free")) d.free_particle = j.at("free").get<bool>();

  if (mode == Mode::semiclassical) {
    if (!d.beta_u || !d.theta) {
      throw ConfigError("semiclassical dimensionless input needs beta_u and theta");
    }
    if (d.lambda_param || d.free_particle) {
      throw ConfigError("lambda_param/free do not apply to the semiclassical mode");
    }
    if (*d.beta_u < 0.0 || *d.theta < 0.0) {
      throw ConfigError("beta_u and theta must be >= 0");
    }
  } else {
    if (d.beta_u || d.theta) {
      throw ConfigError("beta_u/theta apply only to the semiclassical mode");
    }
    if (mode != Mode::fourth_order && !d.free_particle && !d.lambda_param) {
      throw ConfigError("zero-temperature input needs lambda_param or free=true");
    }
    if (d.free_particle && d.lambda_param) {
      throw ConfigError("'lambda_param' and 'free' are mutually exclusive");
    }
    if (d.lambda_param && !(*d.lambda_param > 0.0)) {
      throw ConfigError("lambda_param must be > 0");
    }
  }
  return d;
}

struct TimeDefaults {
  double dt, t_max;
  std::size_t stride;
  Adaptivity adaptivity;
};

TimeDefaults reduced_defaults(Mode mode) {
  switch (mode) {
    case Mode::semiclassical: return {0.02, 2000.0, 100, Adaptivity::fixed};
    case Mode::quantum_temp: return {5e-4, 100.0, 200, Adaptivity::fixed};
    case Mode::bohm: return {1e-3, 200.0, 100, Adaptivity::halving};
    case Mode::fourth_order: return {0.002, 10.0, 500, Adaptivity::fixed};
  }
  return {0.01, 100.0, 100, Adaptivity::fixed};
}

// natural time unit of the mode, used to scale the reduced defaults for
// physical (SI) configurations
double si_time_scale(Mode mode, const ModelParams& p) {
  const double q2 = p.wavenumber * p.wavenumber;
  if (mode == Mode::semiclassical) {
    const double kt = constants::k_boltzmann * p.temperature;
    return p.friction / (kt * q2);
  }
  return 4.0 * p.mass * p.friction / (constants::hbar * constants::hbar * q2 * q2);
}

DimensionlessGroups synthesize_groups(Mode mode, const DimensionlessInput& d) {
  DimensionlessGroups g;
  if (mode == Mode::semiclassical) {
    g.beta = 1.0;
    g.beta_u = d.beta_u;
    g.theta = d.theta;
    if (*d.beta_u > 0.0) g.lambda_param = *d.theta / *d.beta_u;
  } else if (d.lambda_param) {
    g.lambda_param = d.lambda_param;
  }
  return g;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  check_keys(j,
             {"mode", "physical", "dimensionless", "grid", "time", "sigma0",
              "include_nonlinear", "initial", "output_csv", "output_summary"},
             "config");

  RunConfig c;
  if (!j.contains("mode")) throw ConfigError("config needs 'mode'");
  c.mode = mode_from_string(j.at("mode").get<std::string>());

  const bool has_physical = j.contains("physical");
  const bool has_dimensionless = j.contains("dimensionless");
  if (has_physical == has_dimensionless && c.mode != Mode::fourth_order) {
    throw ConfigError("config needs exactly one of 'physical' / 'dimensionless'");
  }
  if (has_physical && has_dimensionless) {
    throw ConfigError("'physical' and 'dimensionless' are mutually exclusive");
  }
  if (has_physical) {
    c.physical = parse_physical(j.at("physical"), c.mode);
    if (c.mode == Mode::semiclassical && c.physical->temperature == 0.0) {
      throw ConfigError("semiclassical mode needs temperature > 0");
    }
    if ((c.mode == Mode::quantum_temp || c.mode == Mode::bohm) &&
        c.physical->temperature != 0.0) {
      throw ConfigError(std::string(to_string(c.mode)) + " mode runs at T = 0");
    }
    c.groups_echo = derive_groups(*c.physical);
  } else {
    DimensionlessInput d;
    if (has_dimensionless) {
      d = parse_dimensionless(j.at("dimensionless"), c.mode);
    } else {
      d.free_particle = true;  // fourth-order needs no parameters
    }
    c.dimensionless = d;
    c.groups_echo = synthesize_groups(c.mode, d);
  }

  if (j.contains("grid")) {
    const json& g = j.at("grid");
    check_keys(g, {"periods", "cells_per_period", "cells", "domain_length", "boundary"},
               "grid");
    const bool explicit_grid = g.contains("cells") || g.contains("domain_length");
    const bool period_grid = g.contains("periods") || g.contains("cells_per_period");
    if (explicit_grid && period_grid) {
      throw ConfigError("grid takes either periods/cells_per_period or cells/domain_length");
    }
    if (explicit_grid) {
      if (!g.contains("cells") || !g.contains("domain_length")) {
        throw ConfigError("explicit grid needs both 'cells' and 'domain_length'");
      }
      c.cells = g.at("cells").get<std::size_t>();
      c.domain_length = number_at(g, "domain_length");
    } else {
      if (g.contains("periods")) c.periods = g.at("periods").get<std::size_t>();
      if (g.contains("cells_per_period")) {
        c.cells_per_period = g.at("cells_per_period").get<std::size_t>();
      }
    }
    if (g.contains("boundary")) {
      const std::string b = g.at("boundary").get<std::string>();
      if (b == "periodic") {
        c.boundary = Boundary::periodic;
      } else if (b == "no_flux") {
        c.boundary = Boundary::no_flux;
      } else {
        throw ConfigError("boundary must be 'periodic' or 'no_flux'");
      }
    }
  }

  const TimeDefaults defaults = reduced_defaults(c.mode);
  const double time_scale =
      c.is_physical() ? si_time_scale(c.mode, *c.physical) : 1.0;
  c.solver.dt_initial = defaults.dt * time_scale;
  c.solver.t_max = defaults.t_max * time_scale;
  c.solver.output_stride = defaults.stride;
  c.solver.adaptivity = defaults.adaptivity;
  if (j.contains("time")) {
    const json& t = j.at("time");
    check_keys(t, {"t_max", "dt_initial", "output_stride", "adaptivity"}, "time");
    if (t.contains("t_max")) c.solver.t_max = number_at(t, "t_max");
    if (t.contains("dt_initial")) c.solver.dt_initial = number_at(t, "dt_initial");
    if (t.contains("output_stride")) {
      c.solver.output_stride = t.at("output_stride").get<std::size_t>();
    }
    if (t.contains("adaptivity")) {
      const std::string a = t.at("adaptivity").get<std::string>();
      if (a == "fixed") {
        c.solver.adaptivity = Adaptivity::fixed;
      } else if (a == "halving") {
        c.solver.adaptivity = Adaptivity::halving;
      } else {
        throw ConfigError("adaptivity must be 'fixed' or 'halving'");
      }
    }
  }
  if (c.mode == Mode::bohm) c.solver.adaptivity = Adaptivity::halving;

  double sigma0_reduced = 0.5;
  if (j.contains("sigma0")) sigma0_reduced = number_at(j, "sigma0");
  if (!(sigma0_reduced > 0.0)) throw ConfigError("sigma0 must be > 0");
  const double length_scale =
      c.is_physical() ? 1.0 / c.physical->wavenumber : 1.0;
  c.solver.sigma0 = sigma0_reduced * length_scale;

  if (j.contains("include_nonlinear")) {
    c.solver.include_nonlinear = j.at("include_nonlinear").get<bool>();
    if (c.mode != Mode::semiclassical && c.solver.include_nonlinear) {
      throw ConfigError("include_nonlinear applies only to the semiclassical mode");
    }
  }
  if (j.contains("initial")) {
    const std::string init = j.at("initial").get<std::string>();
    if (init == "uniform") {
      c.solver.uniform_initial = true;
    } else if (init != "gaussian") {
      throw ConfigError("initial must be 'gaussian' or 'uniform'");
    }
  }
  if (j.contains("output_csv")) c.output_csv = j.at("output_csv").get<std::string>();
  if (j.contains("output_summary")) {
    c.output_summary = j.at("output_summary").get<std::string>();
  }
  return c;
}

Grid build_grid(const RunConfig& c) {
  Grid grid;
  grid.boundary = c.boundary;
  const double period_length =
      c.is_physical() ? 2.0 * std::numbers::pi / c.physical->wavenumber
                      : 2.0 * std::numbers::pi;
  if (c.cells) {
    grid.cell_count = *c.cells;
    grid.domain_length = *c.domain_length;
  } else {
    grid.cell_count = c.periods * c.cells_per_period;
    grid.domain_length = static_cast<double>(c.periods) * period_length;
  }
  grid.validate();
  return grid;
}

SweepConfig parse_sweep_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("sweep config is not valid JSON: ") + e.what());
  }
  check_keys(j, {"beta_u", "lambda_param", "theta", "workers", "output_csv"}, "sweep");

  SweepConfig s;
  const auto read_list = [&](const char* key) {
    std::vector<double> out;
    for (const auto& v : j.at(key)) {
      if (!v.is_number()) throw ConfigError(std::string(key) + " must hold numbers");
      out.push_back(v.get<double>());
    }
    if (out.empty()) throw ConfigError(std::string(key) + " must not be empty");
    return out;
  };

  const auto axis = at_most_one(j, {"beta_u", "lambda_param"}, "sweep");
  if (!axis) throw ConfigError("sweep needs 'beta_u' or 'lambda_param'");
  if (*axis == "beta_u") {
    s.beta_u = read_list("beta_u");
  } else {
    s.lambda_param = read_list("lambda_param");
  }
  if (!j.contains("theta")) throw ConfigError("sweep needs 'theta'");
  s.theta = read_list("theta");
  if (j.contains("workers")) s.workers = j.at("workers").get<std::size_t>();
  if (j.contains("output_csv")) s.output_csv = j.at("output_csv").get<std::string>();
  return s;
}

}  // namespace qdiff::cli
