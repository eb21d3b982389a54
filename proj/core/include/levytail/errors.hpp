#ifndef LEVYTAIL_ERRORS_HPP
#define LEVYTAIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace levytail {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument or configuration (bad distribution parameters, bad window
/// plan, out-of-domain inputs).
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

/// Input data unusable for the requested computation (constant series, too
/// few usable scaling points, non-uniform sampling).
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

/// File or stream problem.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

/// Regression could not be performed (collinear or insufficient points).
class FitError : public Error {
public:
    explicit FitError(const std::string& msg) : Error(msg) {}
};

/// Requested box side length is below the sampling resolution of the series.
class ResolutionError : public Error {
public:
    explicit ResolutionError(const std::string& msg) : Error(msg) {}
};

/// A numerical routine could not reach the requested tolerance. Carries the
/// error estimate it did achieve.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& msg, double requested, double achieved)
        : Error(msg), requested_(requested), achieved_(achieved) {}

    double requested() const { return requested_; }
    double achieved() const { return achieved_; }

private:
    double requested_;
    double achieved_;
};

}  // namespace levytail

#endif
