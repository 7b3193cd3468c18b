#include "qdiff/cli/csv.hpp"

#include <charconv>
#include <cmath>

#include "qdiff/cli/config.hpp"

namespace qdiff::cli {

std::string format_double(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

void write_csv_header(std::ostream& out, const CsvHeader& header) {
  out << "# " << tool_version << " mode=" << header.mode << " units=" << header.units
      << "\n";
  out << "# groups:";
  const auto field = [&](const char* name, const std::optional<double>& v) {
    if (v) out << ' ' << name << '=' << format_double(*v);
  };
  field("beta", header.groups.beta);
  field("lambda_T", header.groups.lambda_thermal);
  field("theta", header.groups.theta);
  field("beta_u", header.groups.beta_u);
  field("lambda_param", header.groups.lambda_param);
  field("omega_U", header.groups.omega_u);
  out << "\n";
}

void write_timeseries_csv(std::ostream& out, const TimeSeries& series,
                          const CsvHeader& header) {
  write_csv_header(out, header);
  if (series.contaminated) {
    out << "# usable_until=" << format_double(series.usable_until)
        << " (unwrapped moments contaminated beyond this time)\n";
  }
  out << "t,mass,mean,sigma2,min_rho,beta_q_inv\n";
  for (const auto& row : series.rows) {
    out << format_double(row.t) << ',' << format_double(row.mass) << ','
        << format_double(row.mean) << ',' << format_double(row.dispersion) << ','
        << format_double(row.min_density) << ',' << format_optional(row.beta_q_inv)
        << '\n';
  }
}

}  // namespace qdiff::cli
