#include "levytail/stable.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "levytail/detail/quadrature.hpp"
#include "levytail/errors.hpp"
#include "levytail/special.hpp"

namespace levytail {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Phase of e^{-itx} cf(t) for t > 0: the integrand of both inversion
// integrals is exp(-gamma t^alpha) * {cos, sin}(phase(t)).
double inversion_phase(const StableParams& p, double x, double t) {
    if (p.beta == 0.0 || p.alpha == 2.0) return (p.sigma - x) * t;
    if (p.alpha == 1.0)
        return (p.sigma - x) * t + p.gamma * p.beta * (2.0 / kPi) * t * std::log(t);
    const double tau = std::tan(0.5 * kPi * p.alpha);
    return (p.sigma - x) * t - p.gamma * p.beta * tau * std::pow(t, p.alpha);
}

// Upper bound for the discarded CF mass Int_T^inf exp(-gamma t^alpha) dt.
double cf_tail_bound(double gamma, double alpha, double t_cut) {
    const double decay = gamma * std::pow(t_cut, alpha);
    if (alpha >= 1.0)
        return std::exp(-decay) / (alpha * gamma * std::pow(t_cut, alpha - 1.0));
    // alpha < 1: bound via u = t^alpha and a linearized exponent; valid once
    // gamma*T^alpha dominates 1/alpha - 1.
    const double s = 1.0 / alpha - 1.0;
    if (decay <= s + 1.0) return std::numeric_limits<double>::infinity();
    return (1.0 / alpha) * std::pow(t_cut, 1.0 - alpha) * std::exp(-decay) /
           (gamma - s / std::pow(t_cut, alpha));
}

// Integration cutoff: smallest T (by doubling) whose tail bound is below
// tail_tol, intersected with the user-provided cutoff.
double choose_cutoff(const StableParams& p, double user_t_max, double tail_tol,
                     double* tail_bound_out) {
    double t_cut = std::max(1.0, std::pow(std::log(1.0 / tail_tol) / p.gamma, 1.0 / p.alpha));
    for (int i = 0; i < 200 && cf_tail_bound(p.gamma, p.alpha, t_cut) > tail_tol; ++i)
        t_cut *= 1.5;
    if (std::isfinite(user_t_max) && user_t_max < t_cut) t_cut = user_t_max;
    *tail_bound_out = cf_tail_bound(p.gamma, p.alpha, t_cut);
    return t_cut;
}

enum class Inversion { Density, Distribution };

// Shared quadrature driver for pdf/cdf. Integrates over t for alpha >= 1 and
// over u = t^alpha for alpha < 1 (which removes the u^(1/alpha - 1) endpoint
// singularity of the distribution integrand).
double invert_cf(const StableParams& p, double x, const InversionConfig& cfg,
                 Inversion kind) {
    const double tail_tol = cfg.tolerance / 10.0;
    double tail_bound = 0.0;
    const double t_cut = choose_cutoff(p, cfg.t_max, tail_tol, &tail_bound);
    if (!std::isfinite(tail_bound))
        throw AccuracyError("stable inversion: no usable integration cutoff",
                            cfg.tolerance, std::numeric_limits<double>::infinity());

    // oscillation count over [0, T] decides the seed panels
    const double total_phase =
        std::fabs(p.sigma - x) * t_cut +
        (p.beta != 0.0 ? p.gamma * 2.0 * std::pow(t_cut, p.alpha) : 0.0);
    const std::size_t panels = static_cast<std::size_t>(
        std::clamp(total_phase / kPi + 8.0, 8.0, 16384.0));

    detail::QuadratureResult q;
    if (p.alpha >= 1.0) {
        auto integrand = [&](double t) {
            const double envelope = std::exp(-p.gamma * std::pow(t, p.alpha));
            const double phase = inversion_phase(p, x, t);
            return kind == Inversion::Density ? envelope * std::cos(phase)
                                              : envelope * std::sin(phase) / t;
        };
        q = detail::integrate_adaptive(integrand, 0.0, t_cut, 0.5 * cfg.tolerance,
                                       cfg.max_evaluations, panels);
    } else {
        const double inv_alpha = 1.0 / p.alpha;
        auto integrand = [&](double u) {
            const double t = std::pow(u, inv_alpha);
            const double envelope = std::exp(-p.gamma * u);
            const double phase = inversion_phase(p, x, t);
            // du = alpha * t^(alpha-1) dt  =>  dt = (1/alpha) u^(1/alpha - 1) du
            return kind == Inversion::Density
                       ? inv_alpha * envelope * std::cos(phase) * std::pow(u, inv_alpha - 1.0)
                       : inv_alpha * envelope * std::sin(phase) / u;
        };
        q = detail::integrate_adaptive(integrand, 0.0, std::pow(t_cut, p.alpha),
                                       0.5 * cfg.tolerance, cfg.max_evaluations, panels);
    }

    const double achieved = (q.error_estimate + tail_bound) / kPi;
    if (achieved > cfg.tolerance)
        throw AccuracyError("stable inversion: tolerance not met within budget",
                            cfg.tolerance, achieved);

    return kind == Inversion::Density ? q.value / kPi : 0.5 - q.value / kPi;
}

bool gaussian_reduction(const StableParams& p) { return p.alpha == 2.0; }
bool cauchy_reduction(const StableParams& p) { return p.alpha == 1.0 && p.beta == 0.0; }

}  // namespace

void StableParams::validate() const {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw ParameterError("StableParams: alpha must be in (0, 2]");
    if (!(beta >= -1.0 && beta <= 1.0))
        throw ParameterError("StableParams: beta must be in [-1, 1]");
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw ParameterError("StableParams: gamma must be positive and finite");
    if (!std::isfinite(sigma))
        throw ParameterError("StableParams: sigma must be finite");
}

void InversionConfig::validate() const {
    if (!(t_max > 0.0))
        throw ParameterError("InversionConfig: t_max must be positive");
    if (max_evaluations == 0)
        throw ParameterError("InversionConfig: evaluation budget must be positive");
    if (!(tolerance > 0.0))
        throw ParameterError("InversionConfig: tolerance must be positive");
}

void SemiStableSpec::validate() const {
    if (!(base > 1.0) || !std::isfinite(base))
        throw ParameterError("SemiStableSpec: base must be > 1");
    if (!(alpha > 0.0 && alpha < 2.0))
        throw ParameterError("SemiStableSpec: alpha must be in (0, 2)");
    if (atom == 0.0 || !std::isfinite(atom))
        throw ParameterError("SemiStableSpec: atom must be nonzero and finite");
    if (truncation < 1)
        throw ParameterError("SemiStableSpec: truncation must be >= 1");
}

std::complex<double> log_cf(const StableParams& p, double t) {
    p.validate();
    if (!std::isfinite(t)) throw ParameterError("log_cf: t must be finite");
    if (t == 0.0) return {0.0, 0.0};

    const double at = std::fabs(t);
    const double sign_t = (t > 0.0) ? 1.0 : -1.0;
    const double re = -p.gamma * std::pow(at, p.alpha);

    double skew = 0.0;
    if (p.beta != 0.0 && p.alpha != 2.0) {
        skew = (p.alpha == 1.0) ? -(2.0 / kPi) * std::log(at)
                                : std::tan(0.5 * kPi * p.alpha);
    }
    return {re, p.sigma * t + re * p.beta * sign_t * skew};
}

std::complex<double> cf(const StableParams& p, double t) {
    return std::exp(log_cf(p, t));
}

double pdf(const StableParams& p, double x, const InversionConfig& cfg) {
    p.validate();
    cfg.validate();
    if (!std::isfinite(x)) throw ParameterError("pdf: x must be finite");

    if (cfg.use_closed_forms) {
        if (gaussian_reduction(p)) {
            const double sd = std::sqrt(2.0 * p.gamma);
            return normal_pdf((x - p.sigma) / sd) / sd;
        }
        if (cauchy_reduction(p)) {
            const double d = x - p.sigma;
            return p.gamma / (kPi * (p.gamma * p.gamma + d * d));
        }
    }
    return invert_cf(p, x, cfg, Inversion::Density);
}

double cdf(const StableParams& p, double x, const InversionConfig& cfg) {
    p.validate();
    cfg.validate();
    if (!std::isfinite(x)) throw ParameterError("cdf: x must be finite");

    if (cfg.use_closed_forms) {
        if (gaussian_reduction(p))
            return normal_cdf((x - p.sigma) / std::sqrt(2.0 * p.gamma));
        if (cauchy_reduction(p))
            return 0.5 + std::atan((x - p.sigma) / p.gamma) / kPi;
    }
    return std::clamp(invert_cf(p, x, cfg, Inversion::Distribution), 0.0, 1.0);
}

std::vector<TailRow> tail_table(const StableParams& p, const std::vector<double>& xs,
                                const InversionConfig& cfg) {
    p.validate();
    std::vector<TailRow> rows;
    rows.reserve(xs.size());
    for (double x : xs) {
        if (!std::isfinite(x)) throw ParameterError("tail_table: x values must be finite");
        TailRow row;
        row.x = x;
        row.p_normal = normal_cdf(x);
        row.p_stable = cdf(p, x, cfg);
        row.ratio = (row.p_normal > 0.0) ? row.p_stable / row.p_normal
                                         : std::numeric_limits<double>::infinity();
        rows.push_back(row);
    }
    return rows;
}

const std::vector<double>& stability_z_grid() {
    static const std::vector<double> grid = {0.1, 0.5, 1.0, 2.0, 5.0};
    return grid;
}

StabilityReport check_stability(const StableParams& p, double a, double tol) {
    p.validate();
    if (!(a > 0.0) || !std::isfinite(a))
        throw ParameterError("check_stability: a must be positive and finite");
    if (!(tol > 0.0)) throw ParameterError("check_stability: tol must be positive");

    StabilityReport report;
    report.a = a;
    report.b_used = std::pow(a, 1.0 / p.alpha);
    report.c_used = p.sigma * (a - report.b_used);
    if (p.alpha == 1.0 && p.beta != 0.0)
        report.c_used += -p.gamma * p.beta * (2.0 / kPi) * a * std::log(a);

    double max_err = 0.0;
    for (double z : stability_z_grid()) {
        const std::complex<double> lhs = std::exp(a * log_cf(p, z));
        const std::complex<double> rhs =
            std::exp(log_cf(p, report.b_used * z) +
                     std::complex<double>(0.0, report.c_used * z));
        max_err = std::max(max_err, std::abs(lhs - rhs));
    }
    report.max_modulus_error = max_err;
    report.passed = max_err <= tol;
    return report;
}

namespace {

// |exp(i u) - 1 - i u 1_{|x|<1}| bound for one spectral atom at position pos
// with u = z * pos.
double semistable_term_bound(double z, double pos) {
    const double u = std::fabs(z * pos);
    return (std::fabs(pos) < 1.0) ? 0.5 * u * u : 2.0;
}

double semistable_remainder(double base, double alpha, double atom, double z, int n_trunc) {
    double bound = 0.0;
    // n > N: mass decays like base^(-n*alpha); once the compensation
    // indicator switches off the remaining tail is exactly geometric.
    for (int n = n_trunc + 1; n < n_trunc + 100000; ++n) {
        const double mass = std::pow(base, -static_cast<double>(n) * alpha);
        const double pos = std::pow(base, static_cast<double>(n)) * atom;
        if (std::fabs(pos) >= 1.0) {
            bound += 2.0 * mass / (1.0 - std::pow(base, -alpha));
            break;
        }
        bound += mass * semistable_term_bound(z, pos);
    }
    // n < -N: compensated atoms near zero, terms decay like base^(-m(2-alpha))
    for (int m = n_trunc + 1; m < n_trunc + 100000; ++m) {
        const double mass = std::pow(base, static_cast<double>(m) * alpha);
        const double pos = std::pow(base, -static_cast<double>(m)) * atom;
        const double term = mass * semistable_term_bound(z, pos);
        bound += term;
        if (term < 1e-300) break;
    }
    return bound;
}

}  // namespace

SemiStableValue semistable_cf(const SemiStableSpec& s, double z) {
    s.validate();
    if (!std::isfinite(z)) throw ParameterError("semistable_cf: z must be finite");

    std::complex<double> exponent(0.0, 0.0);
    for (int n = -s.truncation; n <= s.truncation; ++n) {
        const double mass = std::pow(s.base, -static_cast<double>(n) * s.alpha);
        const double pos = std::pow(s.base, static_cast<double>(n)) * s.atom;
        const double u = z * pos;
        std::complex<double> term(std::cos(u) - 1.0, std::sin(u));
        if (std::fabs(pos) < 1.0) term -= std::complex<double>(0.0, u);
        exponent += mass * term;
    }

    SemiStableValue out;
    out.value = std::exp(exponent);
    out.truncation_bound = semistable_remainder(s.base, s.alpha, s.atom, z, s.truncation);
    return out;
}

double semistable_translation(const SemiStableSpec& s) {
    s.validate();
    // unique m with base^m * |atom| in [1, base)
    long m = std::lround(std::ceil(-std::log(std::fabs(s.atom)) / std::log(s.base)));
    while (std::pow(s.base, static_cast<double>(m)) * std::fabs(s.atom) < 1.0) ++m;
    while (std::pow(s.base, static_cast<double>(m - 1)) * std::fabs(s.atom) >= 1.0) --m;
    return std::pow(s.base, s.alpha) * s.atom *
           std::pow(s.base, static_cast<double>(m) * (1.0 - s.alpha));
}

int choose_truncation(double base, double alpha, double atom, double z_max, double tol) {
    SemiStableSpec probe{base, alpha, atom, 1};
    probe.validate();
    if (!(z_max > 0.0)) throw ParameterError("choose_truncation: z_max must be positive");
    if (!(tol > 0.0)) throw ParameterError("choose_truncation: tol must be positive");

    for (int n = 1; n <= 10000; ++n) {
        if (semistable_remainder(base, alpha, atom, z_max, n) <= tol) return n;
    }
    throw AccuracyError("choose_truncation: bound does not reach tol within N <= 10000",
                        tol, semistable_remainder(base, alpha, atom, z_max, 10000));
}

}  // namespace levytail
