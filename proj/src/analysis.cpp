#include "qdiff/analysis.hpp"

#include <cmath>
#include <vector>

#include "qdiff/errors.hpp"

namespace qdiff {

namespace {

struct Samples {
  std::vector<double> x, y;
  double t_start, t_end;
};

// trailing window of the usable rows, abscissa optionally ln t
Samples window_samples(const TimeSeries& series, double window_fraction, bool log_time) {
  if (!(window_fraction > 0.0) || window_fraction > 1.0) {
    throw ConfigError("window_fraction must be in (0, 1]");
  }
  const std::size_t usable = series.usable_row_count();
  if (usable == 0) throw NumericalError("series has no usable rows");
  const double t_end = series.rows[usable - 1].t;
  const double t_first = series.rows.front().t;
  const double t_start = t_end - window_fraction * (t_end - t_first);

  Samples s;
  s.t_start = t_start;
  s.t_end = t_end;
  for (std::size_t i = 0; i < usable; ++i) {
    const auto& row = series.rows[i];
    if (row.t < t_start) continue;
    if (log_time && !(row.t > 0.0)) continue;
    s.x.push_back(log_time ? std::log(row.t) : row.t);
    s.y.push_back(row.dispersion);
  }
  if (s.x.size() < 8) {
    throw NumericalError("fit window holds fewer than 8 points");
  }
  return s;
}

FitResult least_squares(const Samples& s) {
  const auto n = static_cast<double>(s.x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    sx += s.x[i];
    sy += s.y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    const double dx = s.x[i] - mx;
    const double dy = s.y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw NumericalError("degenerate fit window: constant abscissa");

  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = (syy == 0.0) ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.window_start = s.t_start;
  fit.window_end = s.t_end;
  fit.n_points = s.x.size();
  return fit;
}

}  // namespace

std::pair<FitResult, DiffusionEstimate> fit_msd_slope(const TimeSeries& series,
                                                      double window_fraction) {
  const FitResult fit = least_squares(window_samples(series, window_fraction, false));
  DiffusionEstimate est;
  est.method = DiffusionMethod::msd_fit;
  est.value = fit.slope / 2.0;
  est.log_value = std::log(est.value);
  est.fit_r_squared = fit.r_squared;
  return {fit, est};
}

FitResult fit_log_law(const TimeSeries& series, double window_fraction) {
  return least_squares(window_samples(series, window_fraction, true));
}

ComparisonReport compare_report(const std::vector<DiffusionEstimate>& estimates,
                                const std::vector<FitResult>& fits) {
  if (estimates.empty()) throw ConfigError("compare_report needs at least one estimate");

  const DiffusionEstimate* reference = &estimates.front();
  for (const auto& e : estimates) {
    if (e.method == DiffusionMethod::quadrature) {
      reference = &e;
      break;
    }
  }

  ComparisonReport report;
  report.reference_method = reference->method;
  report.fits = fits;
  for (const auto& e : estimates) {
    ComparisonRow row;
    row.method = e.method;
    row.value = e.value;
    row.log_value = e.log_value;
    row.deviation_from_reference = std::expm1(e.log_value - reference->log_value);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace qdiff
