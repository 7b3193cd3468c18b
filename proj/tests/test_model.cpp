#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qdiff/constants.hpp"
#include "qdiff/errors.hpp"
#include "qdiff/model.hpp"

using namespace qdiff;
namespace c = qdiff::constants;

namespace {

constexpr double kLatticeWavenumber = 2.0 * std::numbers::pi / 3e-10;  // 3 A lattice

ModelParams proton_at(double temperature, double barrier = 0.0) {
  return {c::proton_mass, 1.0, temperature, barrier, kLatticeWavenumber};
}

double rel_err(double got, double want) { return std::abs(got / want - 1.0); }

}  // namespace

TEST_CASE("proton groups at room temperature") {
  const auto g = derive_groups(proton_at(298.0));
  REQUIRE(g.lambda_thermal.has_value());
  // direct evaluation of hbar / (2 sqrt(m k_B T))
  CHECK(rel_err(*g.lambda_thermal, 0.201000667e-10) < 1e-8);
  CHECK(*g.theta == doctest::Approx(0.0886099).epsilon(1e-5));
  CHECK(*g.beta == doctest::Approx(1.0 / (c::k_boltzmann * 298.0)).epsilon(1e-14));
}

TEST_CASE("electron groups at room temperature") {
  ModelParams electron{c::electron_mass, 1.0, 298.0, 0.0, kLatticeWavenumber};
  const auto g = derive_groups(electron);
  CHECK(rel_err(*g.lambda_thermal, 8.6129494e-10) < 1e-7);
  CHECK(*g.theta == doctest::Approx(162.7013).epsilon(1e-5));
}

TEST_CASE("barrier-scale groups") {
  const double u = 0.2 * c::electron_volt;
  const auto g = derive_groups(proton_at(298.0, u));
  REQUIRE(g.lambda_param.has_value());
  // Lambda = lambda_U^2 q^2 with lambda_U = hbar / (2 sqrt(2 m U))
  const double lambda_u = c::hbar / (2.0 * std::sqrt(2.0 * c::proton_mass * u));
  CHECK(rel_err(*g.lambda_param, lambda_u * lambda_u * kLatticeWavenumber * kLatticeWavenumber) <
        1e-13);
  CHECK(rel_err(*g.omega_u, 4.0 * u / c::hbar) < 1e-14);
  CHECK(rel_err(*g.beta_u, u / (c::k_boltzmann * 298.0)) < 1e-14);
}

TEST_CASE("absent fields") {
  const auto zero_t = derive_groups(proton_at(0.0, 1e-20));
  CHECK(!zero_t.beta);
  CHECK(!zero_t.lambda_thermal);
  CHECK(!zero_t.theta);
  CHECK(!zero_t.beta_u);
  CHECK(zero_t.lambda_param);
  CHECK(zero_t.omega_u);

  const auto no_barrier = derive_groups(proton_at(298.0));
  CHECK(!no_barrier.lambda_param);
  CHECK(!no_barrier.omega_u);
  CHECK(no_barrier.beta_u == 0.0);
}

TEST_CASE("theta scales inversely with temperature") {
  const auto g1 = derive_groups(proton_at(298.0));
  const auto g2 = derive_groups(proton_at(4.0 * 298.0));
  CHECK(rel_err(*g1.theta, 4.0 * *g2.theta) < 1e-12);
}

TEST_CASE("temperature_for_theta") {
  const double t1 = temperature_for_theta(1.0, c::proton_mass, kLatticeWavenumber);
  CHECK(t1 == doctest::Approx(26.4057).epsilon(1e-4));
  CHECK(t1 >= 24.0);
  CHECK(t1 <= 27.0);

  // round trip through derive_groups
  for (double target : {0.0886099, 1.0, 10.0}) {
    const double t = temperature_for_theta(target, c::proton_mass, kLatticeWavenumber);
    const auto g = derive_groups(proton_at(t));
    CHECK(rel_err(*g.theta, target) < 1e-12);
  }

  // T is inversely proportional to the mass at fixed theta and q
  const double t_half = temperature_for_theta(1.0, 2.0 * c::proton_mass, kLatticeWavenumber);
  CHECK(rel_err(t_half, t1 / 2.0) < 1e-12);

  CHECK_THROWS_AS(temperature_for_theta(0.0, 1.0, 1.0), ConfigError);
  CHECK_THROWS_AS(temperature_for_theta(1.0, -1.0, 1.0), ConfigError);
}

TEST_CASE("applicability classification") {
  const auto proton_g = derive_groups(proton_at(298.0));
  CHECK(semiclassical_applicability(proton_g) == Applicability::semiclassical);

  ModelParams electron{c::electron_mass, 1.0, 298.0, 0.0, kLatticeWavenumber};
  CHECK(semiclassical_applicability(derive_groups(electron)) == Applicability::quantum);

  DimensionlessGroups g;
  g.theta = 0.0;
  CHECK(semiclassical_applicability(g) == Applicability::semiclassical);
  g.theta = 0.7;
  CHECK(semiclassical_applicability(g) == Applicability::marginal);
  g.theta.reset();  // zero temperature
  CHECK(semiclassical_applicability(g) == Applicability::quantum);
}

TEST_CASE("unit-system consistency for lambda_T") {
  // SI evaluation converted to Angstrom vs direct Angstrom-based evaluation
  const auto g = derive_groups(proton_at(298.0));
  const double si_in_angstrom = *g.lambda_thermal / c::angstrom;
  const double hbar_angstrom = c::hbar / c::angstrom;  // J s per Angstrom-based length
  const double direct = hbar_angstrom / (2.0 * std::sqrt(c::proton_mass * c::k_boltzmann * 298.0));
  CHECK(rel_err(si_in_angstrom, direct) < 1e-12);
}

TEST_CASE("electron to proton wavelength ratio") {
  const auto gp = derive_groups(proton_at(298.0));
  ModelParams electron{c::electron_mass, 1.0, 298.0, 0.0, kLatticeWavenumber};
  const auto ge = derive_groups(electron);
  const double want = std::sqrt(c::proton_mass / c::electron_mass);
  CHECK(rel_err(*ge.lambda_thermal / *gp.lambda_thermal, want) < 1e-10);
}

TEST_CASE("validation rejects bad parameters") {
  CHECK_THROWS_AS(derive_groups({-1.0, 1.0, 1.0, 0.0, 1.0}), ConfigError);
  CHECK_THROWS_AS(derive_groups({1.0, 0.0, 1.0, 0.0, 1.0}), ConfigError);
  CHECK_THROWS_AS(derive_groups({1.0, 1.0, -2.0, 0.0, 1.0}), ConfigError);
  CHECK_THROWS_AS(derive_groups({1.0, 1.0, 1.0, -1e-22, 1.0}), ConfigError);
  CHECK_THROWS_AS(derive_groups({1.0, 1.0, 1.0, 0.0, 0.0}), ConfigError);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(derive_groups({inf, 1.0, 1.0, 0.0, 1.0}), ConfigError);
}
