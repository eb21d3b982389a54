#include "levytail/time_series.hpp"

#include <cmath>
#include <utility>

#include "levytail/errors.hpp"

namespace levytail {

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2)
        throw ParameterError("TimeSeries: need at least 2 samples");
    for (double v : values_) {
        if (!std::isfinite(v))
            throw ParameterError("TimeSeries: all values must be finite");
    }
}

}  // namespace levytail
