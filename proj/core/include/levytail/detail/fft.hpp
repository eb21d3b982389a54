#ifndef LEVYTAIL_DETAIL_FFT_HPP
#define LEVYTAIL_DETAIL_FFT_HPP

#include <complex>
#include <vector>

namespace levytail::detail {

/// In-place iterative radix-2 FFT. The size of `a` must be a power of two.
/// Forward transform uses the e^{-i 2 pi k/n} convention; the inverse
/// transform divides by n.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

bool is_power_of_two(std::size_t n);

}  // namespace levytail::detail

#endif
