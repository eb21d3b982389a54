#include "levytail/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "levytail/errors.hpp"
#include "levytail/special.hpp"

namespace levytail {

WindowPlan WindowPlan::default_for(std::size_t n) {
    if (n < 16) throw ParameterError("WindowPlan: series too short for a default plan");
    const double hi = std::min(std::max(16.0, static_cast<double>(n) / 18.0),
                               static_cast<double>(n) / 4.0);
    const double lo = std::min(72.0, std::max(4.0, hi / 4.0));

    WindowPlan plan;
    const double log_lo = std::log(lo), log_hi = std::log(hi);
    const int count = 20;
    for (int i = 0; i < count; ++i) {
        const int w = static_cast<int>(
            std::llround(std::exp(log_lo + (log_hi - log_lo) * i / (count - 1.0))));
        if (plan.windows.empty() || w > plan.windows.back()) plan.windows.push_back(w);
    }
    return plan;
}

void WindowPlan::validate(std::size_t n) const {
    if (windows.size() < 4)
        throw ParameterError("WindowPlan: need at least 4 window lengths");
    int prev = 1;
    for (int w : windows) {
        if (w <= prev)
            throw ParameterError("WindowPlan: windows must be strictly increasing");
        if (w < 2 || static_cast<std::size_t>(w) * 4 > n)
            throw ParameterError("WindowPlan: windows must lie in [2, n/4]");
        prev = w;
    }
}

double mean_range(const TimeSeries& series, int window) {
    const auto& y = series.values();
    const std::size_t n = y.size();
    if (window < 2 || static_cast<std::size_t>(window) > n)
        throw ParameterError("mean_range: window must be in [2, n]");

    // monotone deques give the sliding max/min in O(n); the mean uses
    // Neumaier-compensated summation, which keeps the result independent of
    // traversal direction (range multisets are reversal-invariant)
    std::deque<std::size_t> max_idx, min_idx;
    const std::size_t w = static_cast<std::size_t>(window);
    double sum = 0.0, compensation = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (!max_idx.empty() && y[max_idx.back()] <= y[i]) max_idx.pop_back();
        max_idx.push_back(i);
        while (!min_idx.empty() && y[min_idx.back()] >= y[i]) min_idx.pop_back();
        min_idx.push_back(i);
        if (i + 1 >= w) {
            const std::size_t lo = i + 1 - w;
            while (max_idx.front() < lo) max_idx.pop_front();
            while (min_idx.front() < lo) min_idx.pop_front();
            const double range = y[max_idx.front()] - y[min_idx.front()];
            const double updated = sum + range;
            compensation += (std::fabs(sum) >= std::fabs(range))
                                ? (sum - updated) + range
                                : (range - updated) + sum;
            sum = updated;
            ++count;
        }
    }
    return (sum + compensation) / static_cast<double>(count);
}

ScalingCurve scaling_curve(const TimeSeries& series, const WindowPlan& plan) {
    plan.validate(series.size());

    ScalingCurve curve;
    for (int w : plan.windows) {
        const double r = mean_range(series, w);
        if (r > 0.0)
            curve.points.push_back({w, r});
        else
            curve.excluded_windows.push_back(w);
    }
    if (curve.points.size() < 4)
        throw DataError("scaling_curve: fewer than 4 windows with nonzero range");
    return curve;
}

HurstEstimate fit_hurst(const std::vector<ScalingPoint>& points) {
    const std::size_t m = points.size();
    if (m < 4) throw FitError("fit_hurst: need at least 4 scaling points");

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& pt : points) {
        if (!(pt.mean_range > 0.0))
            throw FitError("fit_hurst: mean ranges must be positive");
        const double x = std::log(static_cast<double>(pt.window));
        const double y = std::log(pt.mean_range);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = m * sxx - sx * sx;
    if (!(std::fabs(denom) > 1e-12))
        throw FitError("fit_hurst: window lengths are collinear");

    const double slope = (m * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / m;

    double sse = 0.0, sst = 0.0;
    const double y_bar = sy / m;
    for (const auto& pt : points) {
        const double x = std::log(static_cast<double>(pt.window));
        const double y = std::log(pt.mean_range);
        const double resid = y - (intercept + slope * x);
        sse += resid * resid;
        sst += (y - y_bar) * (y - y_bar);
    }

    const double sxx_centered = sxx - sx * sx / m;
    const double slope_var = sse / static_cast<double>(m - 2) / sxx_centered;
    const double se = std::sqrt(std::max(0.0, slope_var));
    const double t_crit = student_t_quantile(0.975, static_cast<double>(m - 2));

    HurstEstimate est;
    est.h = slope;
    est.c = std::exp(intercept);
    est.ci95_low = slope - t_crit * se;
    est.ci95_high = slope + t_crit * se;
    est.r_squared = (sst > 0.0) ? std::max(0.0, 1.0 - sse / sst) : 1.0;
    est.points = points;
    return est;
}

AlphaEstimate alpha_from_hurst(double h) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw ParameterError("alpha_from_hurst: H must be positive");

    AlphaEstimate est;
    est.raw = 1.0 / h;
    est.clamped = est.raw > 2.0;
    est.alpha = est.clamped ? 2.0 : est.raw;
    return est;
}

}  // namespace levytail
