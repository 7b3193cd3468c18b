#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qdiff/cli/commands.hpp"
#include "qdiff/cli/config.hpp"
#include "qdiff/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw qdiff::ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qdiff::cli;

  CLI::App app{"Quantum-corrected diffusion in periodic potentials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version));

  DcoefOptions dcoef;
  double dcoef_friction = 0.0, dcoef_temperature = 0.0;
  auto* cmd_d = app.add_subcommand("dcoef", "effective diffusion coefficient estimates");
  cmd_d->add_option("--beta-u", dcoef.beta_u, "barrier height in units of k_B T")
      ->required();
  cmd_d->add_option("--theta", dcoef.theta, "tunneling parameter lambda_T^2 q^2 / 2");
  auto* fopt = cmd_d->add_option("--friction", dcoef_friction, "friction b [kg/s]");
  auto* topt =
      cmd_d->add_option("--temperature-k", dcoef_temperature, "temperature [K]");
  cmd_d->add_option("--csv", dcoef.csv_path, "also write the table to this file");

  std::string simulate_config;
  auto* cmd_s = app.add_subcommand("simulate", "time-integrate an evolution equation");
  cmd_s->add_option("--config", simulate_config, "JSON run configuration")->required();

  ClosureOptions closure;
  std::string closure_particle;
  double closure_mass = 0.0, closure_friction = 0.0, closure_uev = 0.0,
         closure_uj = 0.0;
  auto* cmd_c = app.add_subcommand("closure", "Gaussian-closure dispersion laws");
  cmd_c->add_flag("--reduced", closure.reduced, "natural units m = b = hbar = 1");
  auto* copt_p = cmd_c->add_option("--particle", closure_particle, "proton | electron");
  auto* copt_m = cmd_c->add_option("--mass-kg", closure_mass, "mass [kg]");
  auto* copt_b = cmd_c->add_option("--friction", closure_friction, "friction [kg/s]");
  auto* copt_uev = cmd_c->add_option("--u-ev", closure_uev, "barrier amplitude [eV]");
  auto* copt_uj = cmd_c->add_option("--u-j", closure_uj, "barrier amplitude [J]");
  cmd_c->add_option("--t-min", closure.t_min, "first output time [s]");
  cmd_c->add_option("--t-max", closure.t_max, "last output time [s]")->required();
  cmd_c->add_option("--points", closure.points, "number of log-spaced times");
  cmd_c->add_option("--csv", closure.csv_path, "also write the table to this file");

  auto* cmd_p =
      app.add_subcommand("check-paper", "verify the quantitative claims, exit 3 on failure");
  (void)cmd_p;

  std::string sweep_config;
  auto* cmd_w = app.add_subcommand("sweep", "concurrent parameter sweep");
  cmd_w->add_option("--config", sweep_config, "JSON sweep configuration")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_d->parsed()) {
      if (*fopt) dcoef.friction = dcoef_friction;
      if (*topt) dcoef.temperature = dcoef_temperature;
      return cmd_dcoef(dcoef, std::cout);
    }
    if (cmd_s->parsed()) {
      const RunConfig config = parse_config(read_file(simulate_config));
      return cmd_simulate(config, std::cout, std::cerr);
    }
    if (cmd_c->parsed()) {
      if (*copt_p) closure.particle = closure_particle;
      if (*copt_m) closure.mass = closure_mass;
      if (*copt_b) closure.friction = closure_friction;
      if (*copt_uev) closure.u_ev = closure_uev;
      if (*copt_uj) closure.u_j = closure_uj;
      return cmd_closure(closure, std::cout);
    }
    if (cmd_p->parsed()) {
      return cmd_check_paper(std::cout);
    }
    if (cmd_w->parsed()) {
      return cmd_sweep(parse_sweep_config(read_file(sweep_config)), std::cout);
    }
  } catch (const qdiff::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const qdiff::RegimeError& e) {
    std::cerr << "regime error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const qdiff::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return exit_numerical_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_numerical_error;
  }
  return exit_config_error;
}
