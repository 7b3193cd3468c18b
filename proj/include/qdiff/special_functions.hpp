#pragma once

namespace qdiff {

// One evaluation of a modified Bessel function I_n. `value` may overflow to
// inf for x beyond ~709; `scaled` and `log_value` stay finite for all
// supported arguments (x up to 1e8).
struct BesselEval {
  double value;      // I_n(x)
  double scaled;     // e^{-x} I_n(x)
  double log_value;  // ln I_n(x)
};

// Modified Bessel function of the first kind, order 0. Requires finite x >= 0.
BesselEval bessel_i0(double x);

// Modified Bessel function of the first kind, order 1. Requires finite x >= 0.
BesselEval bessel_i1(double x);

// ln I_0(x), overflow-safe for large arguments.
double log_i0(double x);

}  // namespace qdiff
