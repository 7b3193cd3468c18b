#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qdiff/analysis.hpp"
#include "qdiff/errors.hpp"

using namespace qdiff;

namespace {

TimeSeries synthetic_series(std::size_t n, double t_max,
                            const std::function<double(double)>& sigma2) {
  TimeSeries ts;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = t_max * static_cast<double>(i + 1) / static_cast<double>(n);
    ts.rows.push_back({t, 1.0, 0.0, sigma2(t), 0.0, std::nullopt});
  }
  return ts;
}

}  // namespace

TEST_CASE("msd fit recovers an exact line") {
  const double d0 = 0.37;
  const auto ts = synthetic_series(64, 100.0, [&](double t) { return 2.0 * d0 * t; });
  const auto [fit, estimate] = fit_msd_slope(ts, 0.5);
  CHECK(std::abs(fit.slope - 2.0 * d0) < 1e-12);
  CHECK(std::abs(fit.r_squared - 1.0) < 1e-12);
  CHECK(std::abs(estimate.value - d0) < 1e-12);
  CHECK(estimate.method == DiffusionMethod::msd_fit);
  CHECK(fit.n_points >= 8);
}

TEST_CASE("msd fit tolerates a small periodic ripple") {
  const double d0 = 1.0;
  const auto ts = synthetic_series(256, 100.0, [&](double t) {
    return 2.0 * d0 * t * (1.0 + 0.01 * std::sin(25.0 * t));
  });
  const auto [fit, estimate] = fit_msd_slope(ts, 0.5);
  CHECK(std::abs(estimate.value / d0 - 1.0) < 0.01);
}

TEST_CASE("log-law fit recovers exact coefficients and discriminates") {
  const double a = 0.125, b = 0.3;
  const auto log_series =
      synthetic_series(128, 1000.0, [&](double t) { return a * std::log(t) + b; });
  const auto fit = fit_log_law(log_series, 0.5);
  CHECK(std::abs(fit.slope - a) < 1e-12);
  CHECK(std::abs(fit.intercept - b) < 1e-12);
  CHECK(std::abs(fit.r_squared - 1.0) < 1e-12);

  // a sqrt(t) series fits the log model materially worse over several decades
  TimeSeries sqrt_series;
  for (int i = 0; i < 128; ++i) {
    const double t = std::pow(10.0, -2.0 + 5.0 * i / 127.0);
    sqrt_series.rows.push_back({t, 1.0, 0.0, std::sqrt(t), 0.0, std::nullopt});
  }
  const auto sqrt_fit = fit_log_law(sqrt_series, 1.0);
  CHECK(sqrt_fit.r_squared < fit.r_squared - 0.01);
}

TEST_CASE("fits are affine equivariant") {
  const auto base = synthetic_series(64, 10.0, [](double t) { return 3.0 * t + 1.0; });
  auto scaled = base;
  for (auto& row : scaled.rows) row.dispersion *= 7.0;
  const auto f1 = fit_msd_slope(base, 0.75).first;
  const auto f2 = fit_msd_slope(scaled, 0.75).first;
  CHECK(std::abs(f2.slope - 7.0 * f1.slope) < 1e-12);
}

TEST_CASE("window excludes contaminated samples") {
  auto ts = synthetic_series(64, 100.0, [](double t) { return 2.0 * t; });
  // corrupt the tail and mark it unusable
  for (auto& row : ts.rows) {
    if (row.t > 50.0) row.dispersion = 1e6;
  }
  ts.contaminated = true;
  ts.usable_until = 50.0;
  const auto [fit, estimate] = fit_msd_slope(ts, 1.0);
  CHECK(fit.window_end <= 50.0);
  CHECK(std::abs(estimate.value - 1.0) < 1e-12);
}

TEST_CASE("too few points is an error") {
  const auto ts = synthetic_series(6, 10.0, [](double t) { return t; });
  CHECK_THROWS_AS(fit_msd_slope(ts, 1.0), NumericalError);
  CHECK_THROWS_AS(fit_msd_slope(synthetic_series(64, 1.0, [](double t) { return t; }), 0.0),
                  ConfigError);
}

TEST_CASE("comparison report") {
  DiffusionEstimate quad;
  quad.method = DiffusionMethod::quadrature;
  quad.value = 0.192436878;
  quad.log_value = std::log(quad.value);

  SUBCASE("single estimate echoes with zero deviation") {
    const auto report = compare_report({quad});
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].deviation_from_reference == 0.0);
    CHECK(report.reference_method == DiffusionMethod::quadrature);
  }

  SUBCASE("pair deviation") {
    DiffusionEstimate closed = quad;
    closed.method = DiffusionMethod::closed_form;
    closed.value = quad.value * (1.0 + 3e-11);
    closed.log_value = std::log(closed.value);
    const auto report = compare_report({closed, quad});
    REQUIRE(report.rows.size() == 2);
    CHECK(report.reference_method == DiffusionMethod::quadrature);
    CHECK(std::abs(report.rows[0].deviation_from_reference - 3e-11) < 1e-12);
  }

  SUBCASE("arrhenius deviation at effective argument 10") {
    DiffusionEstimate arr = quad;
    arr.method = DiffusionMethod::arrhenius;
    arr.value = quad.value * 1.0267580618531835;
    arr.log_value = std::log(arr.value);
    const auto report = compare_report({quad, arr});
    CHECK(std::abs(report.rows[1].deviation_from_reference - 0.02675806) < 1e-6);
  }

  SUBCASE("empty input is rejected") {
    CHECK_THROWS_AS(compare_report({}), ConfigError);
  }
}
