#ifndef LEVYTAIL_STABLE_HPP
#define LEVYTAIL_STABLE_HPP

#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

namespace levytail {

/// Parameters of the stable characteristic function used throughout:
///
///     log cf(t) = i*sigma*t - gamma*|t|^alpha * (1 + i*beta*sign(t)*tan(alpha*pi/2))
///
/// with the tan term replaced by -(2/pi)*log|t| at alpha = 1, where tan has a
/// pole. Note the "+" in front of the skew term: this library keeps that
/// convention everywhere (samplers included). Texts that define the CF with
/// "1 - i*beta*..." describe the same family with beta negated.
///
/// alpha = 2 is Gaussian with mean sigma and variance 2*gamma (so
/// gamma = 1/2 gives the standard normal); alpha = 1, beta = 0 is Cauchy
/// with scale gamma.
struct StableParams {
    double alpha;  ///< tail exponent, in (0, 2]
    double beta;   ///< skewness, in [-1, 1]
    double gamma;  ///< scale, > 0
    double sigma;  ///< location

    /// Throws ParameterError if any field is out of range.
    void validate() const;

    /// gamma such that alpha = 2 reduces to the standard normal (1/2), and
    /// 1 otherwise.
    static double standardized_gamma(double alpha) { return alpha == 2.0 ? 0.5 : 1.0; }
};

/// Controls the numerical Fourier inversion behind pdf/cdf.
struct InversionConfig {
    /// Upper cutoff of the CF integral. Defaults to infinity, meaning the
    /// cutoff is chosen from |cf(t)| <= exp(-gamma*|t|^alpha) so that the
    /// discarded tail is below tolerance/10.
    double t_max = std::numeric_limits<double>::infinity();
    /// Budget of integrand evaluations before giving up with AccuracyError.
    std::size_t max_evaluations = 5'000'000;
    /// Absolute tolerance of the returned value.
    double tolerance = 1e-8;
    /// When the parameters reduce exactly to a Gaussian (alpha = 2) or a
    /// Cauchy (alpha = 1, beta = 0), use those closed forms instead of
    /// quadrature. Disable to exercise the numerical path.
    bool use_closed_forms = true;

    void validate() const;
};

/// Discrete semi-stable spectral measure: atoms at base^n * atom with mass
/// base^(-n*alpha), summed over n in [-truncation, truncation].
struct SemiStableSpec {
    double base;     ///< b > 1
    double alpha;    ///< in (0, 2)
    double atom;     ///< x0 != 0
    int truncation;  ///< series truncation N >= 1

    void validate() const;
};

/// CF value of a truncated semi-stable measure together with a rigorous
/// bound on the truncation remainder of the exponent series.
struct SemiStableValue {
    std::complex<double> value;
    double truncation_bound;
};

/// Outcome of a scaling-identity check cf(t)^a = cf(b*t)*exp(i*c*t).
struct StabilityReport {
    double a;                  ///< scaling factor tested
    double b_used;             ///< spatial factor a^(1/alpha)
    double c_used;             ///< translation implied by the parameters
    double max_modulus_error;  ///< max |cf^a - cf(b t) e^{ict}| over the z grid
    bool passed;
};

/// One row of a normal-vs-stable tail comparison.
struct TailRow {
    double x;
    double p_normal;  ///< standard normal CDF at x
    double p_stable;  ///< stable CDF at x
    double ratio;     ///< p_stable / p_normal, +inf if p_normal underflows
};

/// log of the characteristic function at t. Exactly 0 at t = 0.
std::complex<double> log_cf(const StableParams& p, double t);

/// Characteristic function exp(log_cf). cf(p, 0) = 1, |cf| <= 1.
std::complex<double> cf(const StableParams& p, double t);

/// Density by cosine-transform quadrature of the CF (closed forms for the
/// exact Gaussian/Cauchy reductions unless disabled in cfg). Throws
/// AccuracyError if the tolerance cannot be met within the budget.
double pdf(const StableParams& p, double x, const InversionConfig& cfg = {});

/// Distribution function by Gil-Pelaez inversion,
///     F(x) = 1/2 - (1/pi) * Int_0^inf Im[e^{-itx} cf(t)] / t dt,
/// clamped to [0, 1]. Closed forms as in pdf.
double cdf(const StableParams& p, double x, const InversionConfig& cfg = {});

/// Tail comparison rows for each x: standard normal CDF, stable CDF and
/// their ratio. Rows are ordered as xs.
std::vector<TailRow> tail_table(const StableParams& p, const std::vector<double>& xs,
                                const InversionConfig& cfg = {});

/// z grid used by check_stability and the semi-stable identity checks.
const std::vector<double>& stability_z_grid();

/// Checks the stability identity cf(z)^a = cf(b*z)*exp(i*c*z) with
/// b = a^(1/alpha) and the translation c implied by the parameters
/// (c = sigma*(a - b) for alpha != 1, with an extra -gamma*beta*(2/pi)*a*ln a
/// term at alpha = 1). Reports the max modulus error over the z grid.
StabilityReport check_stability(const StableParams& p, double a, double tol = 1e-10);

/// CF of the truncated semi-stable measure at z, with remainder bound.
SemiStableValue semistable_cf(const SemiStableSpec& s, double z);

/// Translation c in the semi-stability identity
///     semistable_cf(z)^(base^alpha) = semistable_cf(base*z) * exp(i*c*z).
/// The compensation indicator does not shift under z -> base*z, which leaves
/// exactly one atom (the one with position in [1, base)) contributing a
/// linear phase: c = base^alpha * atom * base^(m*(1-alpha)) for that index m.
double semistable_translation(const SemiStableSpec& s);

/// Smallest truncation N whose remainder bound at |z| <= z_max is below tol.
int choose_truncation(double base, double alpha, double atom, double z_max,
                      double tol = 1e-10);

}  // namespace levytail

#endif
