#include "qdiff/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <vector>

namespace qdiff::kernels {

namespace {

inline std::size_t chunk_count(std::size_t n) { return (n + chunk - 1) / chunk; }

template <typename Partial>
std::vector<double> map_chunks(std::size_t n, Partial partial) {
  const std::size_t m = chunk_count(n);
  std::vector<double> parts(m);
  const auto mi = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < mi; ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * chunk;
    const std::size_t hi = std::min(lo + chunk, n);
    parts[static_cast<std::size_t>(c)] = partial(lo, hi);
  }
  return parts;
}

inline double combine_sum(const std::vector<double>& parts) {
  double s = 0.0;
  for (double p : parts) s += p;
  return s;
}

inline double sqrt_floored(std::span<const double> rho, std::size_t i,
                           double floor_value) {
  return std::sqrt(std::max(rho[i], floor_value));
}

}  // namespace

double max_value(std::span<const double> v) {
  assert(!v.empty());
  auto parts = map_chunks(v.size(), [&](std::size_t lo, std::size_t hi) {
    double m = v[lo];
    for (std::size_t i = lo + 1; i < hi; ++i) m = std::max(m, v[i]);
    return m;
  });
  return *std::max_element(parts.begin(), parts.end());
}

double min_value(std::span<const double> v) {
  assert(!v.empty());
  auto parts = map_chunks(v.size(), [&](std::size_t lo, std::size_t hi) {
    double m = v[lo];
    for (std::size_t i = lo + 1; i < hi; ++i) m = std::min(m, v[i]);
    return m;
  });
  return *std::min_element(parts.begin(), parts.end());
}

double sum(std::span<const double> v) {
  return combine_sum(map_chunks(v.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }));
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return combine_sum(map_chunks(a.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
    return s;
  }));
}

double central_second_moment(std::span<const double> w, std::span<const double> x,
                             double c) {
  assert(w.size() == x.size());
  return combine_sum(map_chunks(w.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      const double d = x[i] - c;
      s += w[i] * d * d;
    }
    return s;
  }));
}

double log_mean_exp(std::span<const double> a) {
  assert(!a.empty());
  const double shift = max_value(a);
  const double s = combine_sum(map_chunks(a.size(), [&](std::size_t lo, std::size_t hi) {
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += std::exp(a[i] - shift);
    return acc;
  }));
  return shift + std::log(s / static_cast<double>(a.size()));
}

std::size_t bohm_field(std::span<const double> rho, double coeff, double h,
                       bool periodic, double floor_value, std::span<double> q_out) {
  const std::size_t n = rho.size();
  assert(q_out.size() == n && n >= 3);
  const double inv_h2 = 1.0 / (h * h);

  const std::size_t m = chunk_count(n);
  std::vector<std::size_t> clamped(m, 0);
  const auto mi = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < mi; ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * chunk;
    const std::size_t hi = std::min(lo + chunk, n);
    std::size_t cl = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      if (rho[i] < floor_value) ++cl;
      std::size_t im, ic = i, ip;
      if (periodic) {
        im = (i + n - 1) % n;
        ip = (i + 1) % n;
      } else if (i == 0) {
        im = 0; ic = 1; ip = 2;  // shifted stencil at the wall
      } else if (i == n - 1) {
        im = n - 3; ic = n - 2; ip = n - 1;
      } else {
        im = i - 1;
        ip = i + 1;
      }
      const double s_m = sqrt_floored(rho, im, floor_value);
      const double s_c = sqrt_floored(rho, ic, floor_value);
      const double s_p = sqrt_floored(rho, ip, floor_value);
      const double s_i = sqrt_floored(rho, i, floor_value);
      q_out[i] = -coeff * (s_p - 2.0 * s_c + s_m) * inv_h2 / s_i;
    }
    clamped[static_cast<std::size_t>(c)] = cl;
  }
  std::size_t clamped_total = 0;
  for (std::size_t cl : clamped) clamped_total += cl;
  return clamped_total;
}

double bernoulli(double z) {
  if (std::abs(z) < 1e-12) return 1.0 - 0.5 * z;
  return z / std::expm1(z);  // overflows gracefully: z/inf = 0 for large z
}

void sg_face_weights(std::span<const double> w, bool periodic,
                     std::span<double> weight_left, std::span<double> weight_right) {
  const std::size_t n = w.size();
  const std::size_t faces = periodic ? n : n - 1;
  assert(weight_left.size() == faces && weight_right.size() == faces);
  const auto fi = static_cast<std::ptrdiff_t>(faces);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t f = 0; f < fi; ++f) {
    const std::size_t i = static_cast<std::size_t>(f);
    const std::size_t j = (i + 1 == n) ? 0 : i + 1;
    const double z = w[j] - w[i];
    weight_left[i] = bernoulli(z);
    weight_right[i] = bernoulli(-z);
  }
}

namespace ref {

double max_value(std::span<const double> v) {
  double m = v[0];
  for (double x : v) m = std::max(m, x);
  return m;
}

double min_value(std::span<const double> v) {
  double m = v[0];
  for (double x : v) m = std::min(m, x);
  return m;
}

double sum(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double central_second_moment(std::span<const double> w, std::span<const double> x,
                             double c) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double d = x[i] - c;
    s += w[i] * d * d;
  }
  return s;
}

double log_mean_exp(std::span<const double> a) {
  const double shift = max_value(a);
  double s = 0.0;
  for (double x : a) s += std::exp(x - shift);
  return shift + std::log(s / static_cast<double>(a.size()));
}

std::size_t bohm_field(std::span<const double> rho, double coeff, double h,
                       bool periodic, double floor_value, std::span<double> q_out) {
  const std::size_t n = rho.size();
  const double inv_h2 = 1.0 / (h * h);
  std::size_t clamped = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rho[i] < floor_value) ++clamped;
    std::size_t im, ic = i, ip;
    if (periodic) {
      im = (i + n - 1) % n;
      ip = (i + 1) % n;
    } else if (i == 0) {
      im = 0; ic = 1; ip = 2;
    } else if (i == n - 1) {
      im = n - 3; ic = n - 2; ip = n - 1;
    } else {
      im = i - 1;
      ip = i + 1;
    }
    const double s_m = sqrt_floored(rho, im, floor_value);
    const double s_c = sqrt_floored(rho, ic, floor_value);
    const double s_p = sqrt_floored(rho, ip, floor_value);
    const double s_i = sqrt_floored(rho, i, floor_value);
    q_out[i] = -coeff * (s_p - 2.0 * s_c + s_m) * inv_h2 / s_i;
  }
  return clamped;
}

void sg_face_weights(std::span<const double> w, bool periodic,
                     std::span<double> weight_left, std::span<double> weight_right) {
  const std::size_t n = w.size();
  const std::size_t faces = periodic ? n : n - 1;
  for (std::size_t i = 0; i < faces; ++i) {
    const std::size_t j = (i + 1 == n) ? 0 : i + 1;
    const double z = w[j] - w[i];
    weight_left[i] = bernoulli(z);
    weight_right[i] = bernoulli(-z);
  }
}

}  // namespace ref

}  // namespace qdiff::kernels
