#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace qdiff {

// One output row of a solver run. Times are strictly increasing; beta_q_inv
// is present only in the zero-temperature quantum modes.
struct TimeSeriesRow {
  double t = 0.0;
  double mass = 0.0;
  double mean = 0.0;
  double dispersion = 0.0;
  double min_density = 0.0;
  std::optional<double> beta_q_inv;
};

struct TimeSeries {
  std::vector<TimeSeriesRow> rows;

  // On periodic grids the unwrapped moments are valid only until the packet
  // reaches the wrap seam; rows after usable_until are flagged, not dropped.
  bool contaminated = false;
  double usable_until = std::numeric_limits<double>::infinity();

  std::size_t usable_row_count() const;
};

}  // namespace qdiff
