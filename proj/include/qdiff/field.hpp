#pragma once

#include <cstddef>
#include <vector>

namespace qdiff {

enum class Boundary { periodic, no_flux };

// Uniform 1D cell-centered grid over [origin, origin + domain_length).
struct Grid {
  std::size_t cell_count = 0;
  double domain_length = 0.0;
  Boundary boundary = Boundary::periodic;
  double origin = 0.0;

  double cell_width() const { return domain_length / static_cast<double>(cell_count); }
  double center(std::size_t i) const {
    return origin + (static_cast<double>(i) + 0.5) * cell_width();
  }

  // cell_count must be a power of two >= 16 (the spectral path requires it).
  void validate() const;

  bool operator==(const Grid&) const = default;
};

// Probability density sampled at cell centers, units 1/length.
struct DensityField {
  Grid grid;
  std::vector<double> values;

  double mass() const;  // sum of values * cell_width
};

}  // namespace qdiff
