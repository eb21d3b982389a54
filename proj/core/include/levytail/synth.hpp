#ifndef LEVYTAIL_SYNTH_HPP
#define LEVYTAIL_SYNTH_HPP

#include <cstddef>
#include <cstdint>

#include "levytail/stable.hpp"
#include "levytail/time_series.hpp"

namespace levytail {

/// Every generator is a pure function of (spec, seed): the same inputs give
/// bit-identical output on any platform. Streams come from xoshiro256++
/// seeded via splitmix64; normal variates use the inverse-CDF transform.
using Seed = std::uint64_t;

/// Fractional Brownian motion request.
struct FbmSpec {
    std::size_t n;  ///< length, power of two >= 256
    double hurst;   ///< target Hurst exponent in (0, 1)

    void validate() const;
};

/// fBm trace plus a quality flag: circulant embedding eigenvalues that came
/// out negative (they should not, for fractional Gaussian noise) are clipped
/// to zero and reported here.
struct FbmResult {
    TimeSeries series;
    bool eigenvalues_clipped;
};

/// i.i.d. standard normal samples.
TimeSeries gaussian_noise(std::size_t n, Seed seed);

/// Cumulative sum of gaussian_noise(n - 1, seed), starting at 0. Differencing
/// the walk reproduces the same-seed noise exactly.
TimeSeries gaussian_walk(std::size_t n, Seed seed);

/// Exact-covariance fBm trace by circulant embedding of the fractional
/// Gaussian noise autocovariance, cumulated from 0 and scaled to the unit
/// time span (increment scale n^-H).
FbmResult fbm(const FbmSpec& spec, Seed seed);

/// i.i.d. stable draws matching cf(p, .) exactly (Chambers-Mallows-Stuck,
/// with the skew sign flipped internally to land on this library's "+i beta"
/// CF convention).
TimeSeries stable_sample(const StableParams& p, std::size_t n, Seed seed);

}  // namespace levytail

#endif
