#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace qdiff {

bool is_power_of_two(std::size_t n);

// In-place iterative radix-2 transform; data.size() must be a power of two.
// The inverse includes the 1/n normalization.
void fft_radix2(std::span<std::complex<double>> data, bool inverse);

}  // namespace qdiff
