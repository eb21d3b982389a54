#ifndef LEVYTAIL_SCALING_HPP
#define LEVYTAIL_SCALING_HPP

#include <cstddef>
#include <vector>

#include "levytail/time_series.hpp"

namespace levytail {

/// Window lengths (in samples) over which the mean range is measured. The
/// stride is always one sample.
struct WindowPlan {
    std::vector<int> windows;

    /// Default plan: 20 log-spaced windows between roughly 72 and n/18
    /// (adapted downward for short series). The lower anchor stays well above
    /// the smallest windows, where the discrete range systematically
    /// overshoots the power law, and the cap keeps the largest windows
    /// populated by enough positions to average over.
    static WindowPlan default_for(std::size_t n);

    /// Throws ParameterError unless windows are strictly increasing, each in
    /// [2, n/4], and at least 4 are present.
    void validate(std::size_t n) const;
};

/// One point of the range-scaling curve.
struct ScalingPoint {
    int window;         ///< window length in samples
    double mean_range;  ///< mean of (max - min) over all window positions
};

/// Scaling curve plus the windows that were dropped because their mean range
/// was zero (their log is undefined).
struct ScalingCurve {
    std::vector<ScalingPoint> points;
    std::vector<int> excluded_windows;
};

/// Hurst exponent fit from the log-log scaling curve.
struct HurstEstimate {
    double h;             ///< slope of log<R> on log(window)
    double c;             ///< exp(intercept), the scale prefactor
    double ci95_low;      ///< 95% confidence bounds on h (Student-t on the
    double ci95_high;     ///< OLS slope standard error)
    double r_squared;
    std::vector<ScalingPoint> points;  ///< the points behind the fit
};

/// 1/H mapped into the stable-admissible range (0, 2].
struct AlphaEstimate {
    double alpha;  ///< clamped value
    double raw;    ///< 1/H before clamping
    bool clamped;  ///< true when 1/H > 2 (H < 0.5)
};

/// Mean of (max - min) over every window position (stride 1). The mean is
/// accumulated in position order, so the result is bit-reproducible.
double mean_range(const TimeSeries& series, int window);

/// One ScalingPoint per plan window; zero-range windows are excluded and
/// reported. Throws DataError when fewer than 4 points survive.
ScalingCurve scaling_curve(const TimeSeries& series, const WindowPlan& plan);

/// OLS of log(mean range) on log(window). Requires >= 4 points with positive
/// mean range. The confidence interval uses the Student-t quantile at
/// (#points - 2) degrees of freedom; window overlap makes it approximate.
HurstEstimate fit_hurst(const std::vector<ScalingPoint>& points);

/// alpha = 1/H, clamped to (0, 2] with a flag when 1/H > 2.
AlphaEstimate alpha_from_hurst(double h);

}  // namespace levytail

#endif
