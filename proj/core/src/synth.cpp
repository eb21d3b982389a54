#include "levytail/synth.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "levytail/detail/fft.hpp"
#include "levytail/detail/rng.hpp"
#include "levytail/errors.hpp"

namespace levytail {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void FbmSpec::validate() const {
    if (n < 256 || !detail::is_power_of_two(n))
        throw ParameterError("FbmSpec: n must be a power of two >= 256");
    if (!(hurst > 0.0 && hurst < 1.0))
        throw ParameterError("FbmSpec: H must be in (0, 1)");
}

TimeSeries gaussian_noise(std::size_t n, Seed seed) {
    if (n < 2) throw ParameterError("gaussian_noise: n must be >= 2");
    detail::Rng rng(seed);
    std::vector<double> values(n);
    for (auto& v : values) v = rng.next_normal();
    return TimeSeries(std::move(values));
}

TimeSeries gaussian_walk(std::size_t n, Seed seed) {
    if (n < 2) throw ParameterError("gaussian_walk: n must be >= 2");
    detail::Rng rng(seed);
    std::vector<double> values(n);
    values[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) values[i] = values[i - 1] + rng.next_normal();
    return TimeSeries(std::move(values));
}

FbmResult fbm(const FbmSpec& spec, Seed seed) {
    spec.validate();
    const std::size_t m = spec.n;
    const std::size_t embed = 2 * m;
    const double h2 = 2.0 * spec.hurst;

    // fractional Gaussian noise autocovariance
    auto rho = [h2](double k) {
        return 0.5 * (std::pow(std::fabs(k + 1.0), h2) - 2.0 * std::pow(std::fabs(k), h2) +
                      std::pow(std::fabs(k - 1.0), h2));
    };

    // first row of the circulant embedding, then its eigenvalues by FFT
    std::vector<std::complex<double>> work(embed);
    for (std::size_t k = 0; k <= m; ++k) work[k] = rho(static_cast<double>(k));
    for (std::size_t k = 1; k < m; ++k) work[embed - k] = work[k];
    detail::fft_inplace(work, false);

    std::vector<double> lambda(embed);
    bool clipped = false;
    for (std::size_t k = 0; k < embed; ++k) {
        lambda[k] = work[k].real();
        if (lambda[k] < 0.0) {
            lambda[k] = 0.0;
            clipped = true;
        }
    }

    // spectral synthesis with conjugate symmetry; draw order is fixed:
    // the two real modes first, then (u, v) pairs for k = 1..m-1
    detail::Rng rng(seed);
    const double norm = static_cast<double>(embed);
    work[0] = std::sqrt(lambda[0] / norm) * rng.next_normal();
    work[m] = std::sqrt(lambda[m] / norm) * rng.next_normal();
    for (std::size_t k = 1; k < m; ++k) {
        const double u = rng.next_normal();
        const double v = rng.next_normal();
        const double amp = std::sqrt(lambda[k] / (2.0 * norm));
        work[k] = std::complex<double>(amp * u, amp * v);
        work[embed - k] = std::conj(work[k]);
    }
    detail::fft_inplace(work, false);

    // unit-time-span convention: increments scale like n^-H
    const double scale = std::pow(static_cast<double>(m), -spec.hurst);
    std::vector<double> trace(m);
    trace[0] = 0.0;
    for (std::size_t i = 1; i < m; ++i)
        trace[i] = trace[i - 1] + work[i - 1].real() * scale;

    return FbmResult{TimeSeries(std::move(trace)), clipped};
}

TimeSeries stable_sample(const StableParams& p, std::size_t n, Seed seed) {
    p.validate();
    if (n < 2) throw ParameterError("stable_sample: n must be >= 2");

    // Chambers-Mallows-Stuck draws a law whose CF carries "-i beta" where
    // ours carries "+i beta"; flipping the skew sign maps between them.
    const double beta_cms = -p.beta;
    detail::Rng rng(seed);
    std::vector<double> values(n);

    if (p.alpha == 1.0) {
        const double scale = p.gamma;
        const double shift =
            p.sigma + beta_cms * (2.0 / kPi) * scale * std::log(scale);
        for (auto& out : values) {
            const double u = kPi * (rng.next_uniform() - 0.5);
            const double w = -std::log(rng.next_uniform());
            const double half_pi = 0.5 * kPi;
            const double x =
                (2.0 / kPi) * ((half_pi + beta_cms * u) * std::tan(u) -
                               beta_cms * std::log((half_pi * w * std::cos(u)) /
                                                   (half_pi + beta_cms * u)));
            out = scale * x + shift;
        }
        return TimeSeries(std::move(values));
    }

    const double scale = std::pow(p.gamma, 1.0 / p.alpha);
    const double tan_half = (p.alpha == 2.0) ? 0.0 : std::tan(0.5 * kPi * p.alpha);
    const double b_angle = std::atan(beta_cms * tan_half) / p.alpha;
    const double s_factor =
        std::pow(1.0 + beta_cms * beta_cms * tan_half * tan_half, 0.5 / p.alpha);
    const double em = (1.0 - p.alpha) / p.alpha;
    for (auto& out : values) {
        const double u = kPi * (rng.next_uniform() - 0.5);
        const double w = -std::log(rng.next_uniform());
        const double x = s_factor * std::sin(p.alpha * (u + b_angle)) /
                         std::pow(std::cos(u), 1.0 / p.alpha) *
                         std::pow(std::cos(u - p.alpha * (u + b_angle)) / w, em);
        out = scale * x + p.sigma;
    }
    return TimeSeries(std::move(values));
}

}  // namespace levytail
