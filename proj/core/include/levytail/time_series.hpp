#ifndef LEVYTAIL_TIME_SERIES_HPP
#define LEVYTAIL_TIME_SERIES_HPP

#include <cstddef>
#include <vector>

namespace levytail {

/// Uniformly sampled real sequence. By convention the series spans one unit
/// of time regardless of length, so estimators work in sample units and map
/// to time units only through that convention.
class TimeSeries {
public:
    /// Takes ownership of `values`. Throws ParameterError unless the series
    /// has at least two samples and every value is finite.
    explicit TimeSeries(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<double> values_;
};

}  // namespace levytail

#endif
