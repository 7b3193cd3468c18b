#include "qdiff/field.hpp"

#include <cmath>

#include "qdiff/errors.hpp"
#include "qdiff/fft.hpp"
#include "qdiff/kernels.hpp"

namespace qdiff {

void Grid::validate() const {
  if (cell_count < 16 || !is_power_of_two(cell_count)) {
    throw ConfigError("grid cell_count must be a power of two >= 16");
  }
  if (!(domain_length > 0.0) || !std::isfinite(domain_length)) {
    throw ConfigError("grid domain_length must be positive and finite");
  }
  if (!std::isfinite(origin)) {
    throw ConfigError("grid origin must be finite");
  }
}

double DensityField::mass() const {
  return kernels::sum(values) * grid.cell_width();
}

}  // namespace qdiff
