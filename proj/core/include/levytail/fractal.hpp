#ifndef LEVYTAIL_FRACTAL_HPP
#define LEVYTAIL_FRACTAL_HPP

#include <cstddef>
#include <vector>

#include "levytail/time_series.hpp"

namespace levytail {

/// Box side lengths for box counting, each of the form 1/2^k, strictly
/// decreasing. Both axes are normalized to [0, 1] before counting, so delta
/// is meaningful on the time axis and the value axis alike.
struct BoxGridConfig {
    std::vector<double> deltas;

    /// Default grid {2^-2, ..., 2^-k} with 2^-k >= 2/n.
    static BoxGridConfig default_for(std::size_t n);

    /// Throws ParameterError unless there are >= 4 deltas, strictly
    /// decreasing, all in (0, 1) and powers of 1/2; throws ResolutionError
    /// if any delta is below the 2/n sampling resolution.
    void validate(std::size_t n) const;
};

/// Per-delta count.
struct BoxCount {
    double delta;
    long count;
};

/// Box-counting dimension fit.
struct BoxDimEstimate {
    double d_b;                    ///< slope of log N on log(1/delta)
    std::vector<BoxCount> counts;  ///< per-delta counts behind the fit
    double r_squared;
    double v_star = 1.0;  ///< reference count for a unit-span series
    bool degenerate = false;  ///< constant series: dimension 1 by convention
};

/// Number of delta-sided grid cells intersected by the linearly interpolated
/// trace after both axes are rescaled to [0, 1]. Cells are counted per time
/// column between the column's interpolated minimum and maximum.
long box_count(const TimeSeries& series, double delta);

/// OLS fit of log N against log(1/delta). A constant series yields dimension
/// 1 with the degenerate flag set.
BoxDimEstimate box_dimension(const TimeSeries& series, const BoxGridConfig& cfg);

/// Box dimension of the graph of a function with Hurst exponent H: 2 - H.
double trace_dimension_from_hurst(double h);

/// Box dimension of a path in D_E-dimensional space whose coordinates scale
/// with Hurst exponent H: min(1/H, D_E).
double path_dimension_from_hurst(double h, int euclidean_dim);

}  // namespace levytail

#endif
