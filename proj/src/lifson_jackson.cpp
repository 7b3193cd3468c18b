#include "qdiff/lifson_jackson.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qdiff/errors.hpp"
#include "qdiff/kernels.hpp"
#include "qdiff/special_functions.hpp"

namespace qdiff {

const char* to_string(DiffusionMethod m) {
  switch (m) {
    case DiffusionMethod::quadrature: return "quadrature";
    case DiffusionMethod::closed_form: return "closed_form";
    case DiffusionMethod::arrhenius: return "arrhenius";
    case DiffusionMethod::msd_fit: return "msd_fit";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kInitialNodes = 64;
constexpr std::size_t kMaxNodes = std::size_t{1} << 20;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string(name) + " must be positive and finite");
  }
}

double require_thermal(const DimensionlessGroups& groups, const char* what) {
  if (!groups.beta || !groups.beta_u || !groups.theta) {
    throw RegimeError(std::string(what) + " needs a finite temperature");
  }
  return *groups.beta;
}

}  // namespace

DiffusionEstimate dcoef_quadrature(const std::function<double(double)>& potential,
                                   double period, double beta, double friction) {
  require_positive(period, "period");
  require_positive(beta, "beta");
  require_positive(friction, "friction");

  // Uniform periodic sampling; the trapezoid rule converges spectrally on
  // smooth periodic integrands, so node doubling is a cheap error monitor.
  double log_avg_pos = 0.0, log_avg_neg = 0.0;
  double prev_pos = 0.0, prev_neg = 0.0;
  bool converged = false;
  std::size_t nodes = kInitialNodes;
  std::vector<double> bw;
  for (; nodes <= kMaxNodes; nodes *= 2) {
    bw.resize(nodes);
    const double h = period / static_cast<double>(nodes);
    const auto n = static_cast<std::ptrdiff_t>(nodes);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      bw[static_cast<std::size_t>(i)] =
          beta * potential((static_cast<double>(i) + 0.5) * h);
    }
    std::vector<double> neg(bw.size());
    for (std::size_t i = 0; i < bw.size(); ++i) neg[i] = -bw[i];
    log_avg_pos = kernels::log_mean_exp(bw);
    log_avg_neg = kernels::log_mean_exp(neg);
    if (nodes > kInitialNodes) {
      const double d = std::abs(log_avg_pos - prev_pos) + std::abs(log_avg_neg - prev_neg);
      if (d < 1e-12 * (1.0 + std::abs(log_avg_pos) + std::abs(log_avg_neg))) {
        converged = true;
        break;
      }
    }
    prev_pos = log_avg_pos;
    prev_neg = log_avg_neg;
  }
  if (!converged) {
    throw NumericalError("period quadrature did not converge below 1e-12 by " +
                         std::to_string(kMaxNodes) + " nodes");
  }

  DiffusionEstimate out;
  out.method = DiffusionMethod::quadrature;
  out.log_value = -(std::log(beta * friction) + log_avg_pos + log_avg_neg);
  out.value = std::exp(out.log_value);
  out.quadrature_nodes = nodes;
  return out;
}

DiffusionEstimate dcoef_closed_form(const DimensionlessGroups& groups,
                                    double friction) {
  require_positive(friction, "friction");
  const double beta = require_thermal(groups, "closed-form diffusion coefficient");
  const double argument = (1.0 - *groups.theta) * *groups.beta_u;

  DiffusionEstimate out;
  out.method = DiffusionMethod::closed_form;
  out.params_echo = groups;
  // theta > 1 flips the sign of the effective barrier; I_0 is even, so the
  // closed form only sees |argument|.
  out.log_value = -(std::log(beta * friction) + 2.0 * log_i0(std::abs(argument)));
  out.value = std::exp(out.log_value);
  return out;
}

DiffusionEstimate dcoef_arrhenius(const DimensionlessGroups& groups,
                                  double friction) {
  require_positive(friction, "friction");
  const double beta = require_thermal(groups, "Arrhenius diffusion coefficient");
  const double theta = *groups.theta;
  const double beta_u = *groups.beta_u;
  const double u = beta_u / beta;
  const double reduction = 2.0 - 2.0 * theta;  // 2 - lambda_T^2 q^2

  DiffusionEstimate out;
  out.method = DiffusionMethod::arrhenius;
  out.params_echo = groups;
  out.activation_energy = reduction * u;
  out.prefactor = std::numbers::pi * reduction * u / friction;
  out.log_value = std::log(*out.prefactor) - beta * *out.activation_energy;
  out.value = std::exp(out.log_value);
  if ((1.0 - theta) * beta_u <= 1.0) {
    out.regime_ok = false;
    out.note = "outside asymptotic regime: (1 - theta) beta U <= 1";
  }
  return out;
}

}  // namespace qdiff
