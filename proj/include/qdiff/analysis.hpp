#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qdiff/lifson_jackson.hpp"
#include "qdiff/timeseries.hpp"

namespace qdiff {

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double window_start = 0.0;  // time range actually used
  double window_end = 0.0;
  std::size_t n_points = 0;
};

// Ordinary least squares of sigma^2 against t over the trailing
// window_fraction of the series' uncontaminated range; D = slope / 2.
// Throws NumericalError when fewer than 8 usable points remain.
std::pair<FitResult, DiffusionEstimate> fit_msd_slope(const TimeSeries& series,
                                                      double window_fraction = 0.5);

// Ordinary least squares of sigma^2 against ln t over the same kind of
// window; the slope is the log-law coefficient.
FitResult fit_log_law(const TimeSeries& series, double window_fraction = 0.5);

struct ComparisonRow {
  DiffusionMethod method;
  double value = 0.0;
  double log_value = 0.0;
  double deviation_from_reference = 0.0;  // value / reference - 1
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  DiffusionMethod reference_method = DiffusionMethod::quadrature;
  std::vector<FitResult> fits;
};

// Tabulates estimates against the quadrature reference (first estimate if no
// quadrature entry is present).
ComparisonReport compare_report(const std::vector<DiffusionEstimate>& estimates,
                                const std::vector<FitResult>& fits = {});

}  // namespace qdiff
