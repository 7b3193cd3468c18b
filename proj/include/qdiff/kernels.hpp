#pragma once

#include <cstddef>
#include <span>

// Data-parallel inner loops shared by the quadrature, solver and observable
// code. The OpenMP implementations reduce over fixed-size chunks and combine
// the partials in index order, so results are bitwise independent of the
// thread count. qdiff::kernels::ref holds plain serial implementations kept
// as the test reference; tools/bench_kernels compares the two.
namespace qdiff::kernels {

inline constexpr std::size_t chunk = 4096;

double max_value(std::span<const double> v);
double min_value(std::span<const double> v);
double sum(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);

// sum of w_i * (x_i - c)^2
double central_second_moment(std::span<const double> w, std::span<const double> x,
                             double c);

// ln( (1/n) sum_i exp(a_i) ), evaluated with a max shift so it never
// overflows.
double log_mean_exp(std::span<const double> a);

// Bohm quantum potential on a uniform grid:
//   q_i = -coeff * D2(sqrt(rho))_i / sqrt(rho_i),
// where D2 is the 3-point second difference with spacing h (periodic wrap, or
// a shifted stencil at no-flux walls). Cells below floor_value are evaluated
// at the floor; the return value counts them.
std::size_t bohm_field(std::span<const double> rho, double coeff, double h,
                       bool periodic, double floor_value, std::span<double> q_out);

// Bernoulli function z / (e^z - 1), the exponential-fitting face weight.
double bernoulli(double z);

// Scharfetter-Gummel face weights for the dimensionless potential w (pinned
// to the local temperature): z_f = w[right] - w[left] across face f,
//   weight_left[f]  = B(z_f)   (multiplies the cell left of the face)
//   weight_right[f] = B(-z_f)  (multiplies the cell right of the face)
// Periodic grids have n faces (face i between cells i and i+1 mod n);
// no-flux grids have n-1 interior faces.
void sg_face_weights(std::span<const double> w, bool periodic,
                     std::span<double> weight_left, std::span<double> weight_right);

namespace ref {

double max_value(std::span<const double> v);
double min_value(std::span<const double> v);
double sum(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);
double central_second_moment(std::span<const double> w, std::span<const double> x,
                             double c);
double log_mean_exp(std::span<const double> a);
std::size_t bohm_field(std::span<const double> rho, double coeff, double h,
                       bool periodic, double floor_value, std::span<double> q_out);
void sg_face_weights(std::span<const double> w, bool periodic,
                     std::span<double> weight_left, std::span<double> weight_right);

}  // namespace ref

}  // namespace qdiff::kernels
