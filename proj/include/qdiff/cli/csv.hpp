#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "qdiff/model.hpp"
#include "qdiff/timeseries.hpp"

namespace qdiff::cli {

// Locale-independent shortest-exact rendering with 17 significant digits.
std::string format_double(double v);
std::string format_optional(const std::optional<double>& v);

// '#'-prefixed header comment block carried by every CSV.
struct CsvHeader {
  std::string mode;
  std::string units;  // "SI" or "reduced"
  DimensionlessGroups groups;
};

void write_csv_header(std::ostream& out, const CsvHeader& header);

// columns: t,mass,mean,sigma2,min_rho,beta_q_inv
void write_timeseries_csv(std::ostream& out, const TimeSeries& series,
                          const CsvHeader& header);

}  // namespace qdiff::cli
