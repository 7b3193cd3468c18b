// Timing comparison between the OpenMP kernels and their serial reference
// implementations over the sizes the solver and quadrature actually use.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qdiff/kernels.hpp"

namespace {

using clock_type = std::chrono::high_resolution_clock;

template <typename F>
double time_ms(F&& body, int repeats) {
  const auto t0 = clock_type::now();
  for (int r = 0; r < repeats; ++r) body();
  const auto t1 = clock_type::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
}

}  // namespace

int main() {
  namespace k = qdiff::kernels;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serial code\n");
#endif
  std::printf("%-18s %10s %12s %12s %8s\n", "kernel", "n", "serial[ms]", "omp[ms]",
              "speedup");

  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> uni(0.1, 2.0);

  for (std::size_t n : {std::size_t{1} << 12, std::size_t{1} << 16, std::size_t{1} << 20}) {
    std::vector<double> a(n), b(n), q(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = uni(rng);
      b[i] = uni(rng);
    }
    const int repeats = n > (1u << 18) ? 20 : 200;
    double sink = 0.0;

    const double s1 = time_ms([&] { sink += k::ref::log_mean_exp(a); }, repeats);
    const double p1 = time_ms([&] { sink += k::log_mean_exp(a); }, repeats);
    std::printf("%-18s %10zu %12.4f %12.4f %8.2f\n", "log_mean_exp", n, s1, p1, s1 / p1);

    const double s2 = time_ms([&] { sink += k::ref::dot(a, b); }, repeats);
    const double p2 = time_ms([&] { sink += k::dot(a, b); }, repeats);
    std::printf("%-18s %10zu %12.4f %12.4f %8.2f\n", "dot", n, s2, p2, s2 / p2);

    const double s3 = time_ms(
        [&] { sink += static_cast<double>(k::ref::bohm_field(a, 1.0, 0.01, true, 1e-14, q)); },
        repeats);
    const double p3 = time_ms(
        [&] { sink += static_cast<double>(k::bohm_field(a, 1.0, 0.01, true, 1e-14, q)); },
        repeats);
    std::printf("%-18s %10zu %12.4f %12.4f %8.2f\n", "bohm_field", n, s3, p3, s3 / p3);

    std::vector<double> wl(n), wr(n);
    const double s4 = time_ms([&] { k::ref::sg_face_weights(a, true, wl, wr); }, repeats);
    const double p4 = time_ms([&] { k::sg_face_weights(a, true, wl, wr); }, repeats);
    std::printf("%-18s %10zu %12.4f %12.4f %8.2f\n", "sg_face_weights", n, s4, p4,
                s4 / p4);
    if (sink == 0.5) std::printf("\n");  // keep the accumulator live
  }
  return 0;
}
