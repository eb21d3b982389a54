#ifndef LEVYTAIL_SPECIAL_HPP
#define LEVYTAIL_SPECIAL_HPP

// Scalar special functions used across the library. All routines are plain
// double precision and thread-safe.

namespace levytail {

/// Standard normal density.
double normal_pdf(double x);

/// Standard normal CDF, accurate in both tails (erfc based).
double normal_cdf(double x);

/// Inverse standard normal CDF for p in (0, 1). Wichura's PPND16 rational
/// approximation (algorithm AS 241), relative error below 1e-15.
double inverse_normal_cdf(double p);

/// Regularized incomplete beta function I_x(a, b) for a,b > 0, x in [0, 1].
double incomplete_beta(double a, double b, double x);

/// Quantile of Student's t distribution with df degrees of freedom,
/// p in (0, 1).
double student_t_quantile(double p, double df);

}  // namespace levytail

#endif
