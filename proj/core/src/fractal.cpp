#include "levytail/fractal.hpp"

#include <algorithm>
#include <cmath>

#include "levytail/errors.hpp"

namespace levytail {

namespace {

bool is_binary_reciprocal(double delta) {
    const double inv = 1.0 / delta;
    const double rounded = std::round(inv);
    if (std::fabs(inv - rounded) > 1e-9 * inv) return false;
    const long k = static_cast<long>(rounded);
    return k > 1 && (k & (k - 1)) == 0;
}

}  // namespace

BoxGridConfig BoxGridConfig::default_for(std::size_t n) {
    if (n < 2) throw ParameterError("BoxGridConfig: series too short");
    const int k_max = static_cast<int>(std::floor(std::log2(static_cast<double>(n) / 2.0)));
    if (k_max < 5)
        throw ParameterError("BoxGridConfig: series too short for at least 4 grid levels");

    BoxGridConfig cfg;
    for (int k = 2; k <= k_max; ++k) cfg.deltas.push_back(std::pow(2.0, -k));
    return cfg;
}

void BoxGridConfig::validate(std::size_t n) const {
    if (deltas.size() < 4)
        throw ParameterError("BoxGridConfig: need at least 4 box sizes");
    double prev = 1.0;
    for (double d : deltas) {
        if (!(d > 0.0 && d < 1.0))
            throw ParameterError("BoxGridConfig: deltas must be in (0, 1)");
        if (!(d < prev))
            throw ParameterError("BoxGridConfig: deltas must be strictly decreasing");
        if (!is_binary_reciprocal(d))
            throw ParameterError("BoxGridConfig: deltas must be powers of 1/2");
        if (d * static_cast<double>(n) < 2.0)
            throw ResolutionError("BoxGridConfig: delta below sampling resolution 2/n");
        prev = d;
    }
}

long box_count(const TimeSeries& series, double delta) {
    const auto& y = series.values();
    const std::size_t n = y.size();
    if (!(delta > 0.0 && delta < 1.0))
        throw ParameterError("box_count: delta must be in (0, 1)");
    if (delta * static_cast<double>(n) < 2.0)
        throw ResolutionError("box_count: delta below sampling resolution 2/n");

    const double y_min = *std::min_element(y.begin(), y.end());
    const double y_max = *std::max_element(y.begin(), y.end());
    const double span = y_max - y_min;

    auto value_at = [&](std::size_t i) {
        return span > 0.0 ? (y[i] - y_min) / span : 0.0;
    };
    // samples sit at t_i = i/(n-1), linearly interpolated in between
    auto interp = [&](double t) {
        const double pos = t * static_cast<double>(n - 1);
        const std::size_t i = std::min(static_cast<std::size_t>(pos), n - 2);
        const double frac = pos - static_cast<double>(i);
        return value_at(i) + frac * (value_at(i + 1) - value_at(i));
    };

    // binary deltas divide the span exactly; generic deltas get a final
    // short column so the cover reaches t = 1
    const long ncols = static_cast<long>(std::ceil(1.0 / delta - 1e-9));
    const long nrows = ncols;
    const double slack = 1e-9;  // keeps exact boundary hits in one cell
    long total = 0;
    for (long col = 0; col < ncols; ++col) {
        const double t0 = static_cast<double>(col) * delta;
        const double t1 = std::min(static_cast<double>(col + 1) * delta, 1.0);
        double cmin = interp(t0), cmax = cmin;
        const double edge = interp(t1);
        cmin = std::min(cmin, edge);
        cmax = std::max(cmax, edge);

        const auto i0 = static_cast<std::size_t>(
            std::max(0.0, std::ceil(t0 * static_cast<double>(n - 1) - slack)));
        const auto i1 = static_cast<std::size_t>(
            std::max(0.0, std::floor(t1 * static_cast<double>(n - 1) + slack)));
        for (std::size_t i = i0; i <= i1 && i < n; ++i) {
            const double v = value_at(i);
            cmin = std::min(cmin, v);
            cmax = std::max(cmax, v);
        }

        long row_lo = static_cast<long>(std::floor(cmin / delta + slack));
        long row_hi = std::max(row_lo, static_cast<long>(std::ceil(cmax / delta - slack)) - 1);
        row_lo = std::clamp(row_lo, 0L, nrows - 1);
        row_hi = std::clamp(row_hi, 0L, nrows - 1);
        total += row_hi - row_lo + 1;
    }
    return total;
}

BoxDimEstimate box_dimension(const TimeSeries& series, const BoxGridConfig& cfg) {
    cfg.validate(series.size());

    const auto& y = series.values();
    const bool constant =
        *std::max_element(y.begin(), y.end()) == *std::min_element(y.begin(), y.end());

    BoxDimEstimate est;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (double d : cfg.deltas) {
        const long count = box_count(series, d);
        est.counts.push_back({d, count});
        const double x = std::log(1.0 / d);
        const double ly = std::log(static_cast<double>(count));
        sx += x;
        sy += ly;
        sxx += x * x;
        sxy += x * ly;
    }
    const double m = static_cast<double>(cfg.deltas.size());
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / m;

    double sse = 0.0, sst = 0.0;
    const double y_bar = sy / m;
    for (const auto& bc : est.counts) {
        const double x = std::log(1.0 / bc.delta);
        const double ly = std::log(static_cast<double>(bc.count));
        const double resid = ly - (intercept + slope * x);
        sse += resid * resid;
        sst += (ly - y_bar) * (ly - y_bar);
    }

    est.d_b = slope;
    est.r_squared = (sst > 0.0) ? std::max(0.0, 1.0 - sse / sst) : 1.0;
    est.degenerate = constant;
    return est;
}

double trace_dimension_from_hurst(double h) {
    if (!(h > 0.0 && h < 1.0))
        throw ParameterError("trace_dimension_from_hurst: H must be in (0, 1)");
    return 2.0 - h;
}

double path_dimension_from_hurst(double h, int euclidean_dim) {
    if (!(h > 0.0 && h < 1.0))
        throw ParameterError("path_dimension_from_hurst: H must be in (0, 1)");
    if (euclidean_dim < 1)
        throw ParameterError("path_dimension_from_hurst: dimension must be >= 1");
    return std::min(1.0 / h, static_cast<double>(euclidean_dim));
}

}  // namespace levytail
