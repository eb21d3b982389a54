#include <doctest.h>

#include <cmath>
#include <complex>
#include <future>
#include <vector>

#include "levytail/detail/rng.hpp"
#include "levytail/errors.hpp"
#include "levytail/special.hpp"
#include "levytail/stable.hpp"
#include "oracles.hpp"

using namespace levytail;
using doctest::Approx;

namespace {

InversionConfig numeric_cfg(double tol = 1e-10) {
    InversionConfig cfg;
    cfg.use_closed_forms = false;
    cfg.tolerance = tol;
    return cfg;
}

StableParams random_params(detail::Rng& rng) {
    return StableParams{0.3 + 1.7 * rng.next_uniform(),       // alpha in (0.3, 2)
                        2.0 * rng.next_uniform() - 1.0,       // beta
                        0.1 + 3.0 * rng.next_uniform(),       // gamma
                        4.0 * rng.next_uniform() - 2.0};      // sigma
}

}  // namespace

TEST_SUITE("stable.cf") {
    TEST_CASE("log_cf closed values") {
        auto v = log_cf({2.0, 0.0, 0.5, 0.0}, 1.0);
        CHECK(v.real() == Approx(-0.5).epsilon(1e-14));
        CHECK(v.imag() == Approx(0.0).scale(1).epsilon(1e-14));

        v = log_cf({1.0, 0.0, 1.0, 0.0}, 2.0);  // Cauchy: -c|z|
        CHECK(v.real() == Approx(-2.0).epsilon(1e-14));
        CHECK(v.imag() == 0.0);

        // skewed: re = -1, im = -0.5 * tan(0.75 pi) = +0.5
        v = log_cf({1.5, 0.5, 1.0, 0.0}, 1.0);
        CHECK(v.real() == Approx(-1.0).epsilon(1e-14));
        CHECK(v.imag() == Approx(0.5).epsilon(1e-12));
    }

    TEST_CASE("log_cf and cf at t = 0 are exact") {
        detail::Rng rng(11);
        for (int i = 0; i < 50; ++i) {
            const auto p = random_params(rng);
            CHECK(log_cf(p, 0.0) == std::complex<double>(0.0, 0.0));
            CHECK(cf(p, 0.0) == std::complex<double>(1.0, 0.0));
        }
    }

    TEST_CASE("cf closed values") {
        auto v = cf({2.0, 0.0, 0.5, 0.0}, 1.0);
        CHECK(v.real() == Approx(std::exp(-0.5)).epsilon(1e-14));

        // Hermitian symmetry at beta = 0: cf(-t) = conj(cf(t)) and real
        auto neg = cf({1.0, 0.0, 1.0, 0.0}, -2.0);
        auto pos = cf({1.0, 0.0, 1.0, 0.0}, 2.0);
        CHECK(neg.real() == Approx(std::exp(-2.0)).epsilon(1e-14));
        CHECK(neg == std::conj(pos));
    }

    TEST_CASE("property: modulus bound and Hermitian symmetry") {
        detail::Rng rng(7);
        for (int i = 0; i < 200; ++i) {
            const auto p = random_params(rng);
            const double t = 20.0 * (rng.next_uniform() - 0.5);
            const auto v = cf(p, t);
            CHECK(std::abs(v) <= 1.0 + 1e-15);
            const auto mirrored = cf(p, -t);
            CHECK(std::abs(mirrored - std::conj(v)) <= 1e-14);
        }
    }

    TEST_CASE("matches the independently written CF") {
        detail::Rng rng(23);
        for (int i = 0; i < 100; ++i) {
            const auto p = random_params(rng);
            const double t = 10.0 * (rng.next_uniform() - 0.5);
            const auto expected = oracles::stable_cf(p.alpha, p.beta, p.gamma, p.sigma, t);
            CHECK(std::abs(cf(p, t) - expected) <= 1e-13);
        }
    }

    TEST_CASE("parameter validation") {
        CHECK_THROWS_AS(log_cf({0.0, 0.0, 1.0, 0.0}, 1.0), ParameterError);
        CHECK_THROWS_AS(log_cf({2.1, 0.0, 1.0, 0.0}, 1.0), ParameterError);
        CHECK_THROWS_AS(log_cf({1.0, 1.5, 1.0, 0.0}, 1.0), ParameterError);
        CHECK_THROWS_AS(log_cf({1.0, 0.0, 0.0, 0.0}, 1.0), ParameterError);  // gamma = 0
        CHECK_THROWS_AS(log_cf({1.0, 0.0, -1.0, 0.0}, 1.0), ParameterError);
        CHECK_THROWS_AS(log_cf({1.0, 0.0, 1.0, 0.0}, NAN), ParameterError);
    }
}

TEST_SUITE("stable.inversion") {
    TEST_CASE("pdf closed-form anchor points") {
        CHECK(pdf({1.0, 0.0, 1.0, 0.0}, 0.0) == Approx(1.0 / M_PI).epsilon(1e-12));
        CHECK(pdf({2.0, 0.0, 0.5, 0.0}, 0.0) ==
              Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-12));

        // numeric path hits the same values
        CHECK(pdf({1.0, 0.0, 1.0, 0.0}, 0.0, numeric_cfg()) ==
              Approx(1.0 / M_PI).epsilon(1e-10));
        CHECK(pdf({2.0, 0.0, 0.5, 0.0}, 0.0, numeric_cfg()) ==
              Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-10));
    }

    TEST_CASE("pdf at the mode for alpha = 1.5: Gamma(1/alpha)/(alpha*pi)") {
        const double expected = 0.28735275145216394;  // tgamma(2/3)/(1.5 pi)
        CHECK(std::tgamma(1.0 / 1.5) / (1.5 * M_PI) == Approx(expected).epsilon(1e-14));
        CHECK(pdf({1.5, 0.0, 1.0, 0.0}, 0.0) == Approx(expected).epsilon(1e-9));
        // independent quadrature oracle agrees
        CHECK(oracles::stable_pdf(1.5, 0.0, 1.0, 0.0, 0.0) == Approx(expected).epsilon(1e-8));
    }

    TEST_CASE("pdf for alpha < 1 (substituted integrand)") {
        const double expected = std::tgamma(1.0 / 0.7) / (0.7 * M_PI);
        CHECK(pdf({0.7, 0.0, 1.0, 0.0}, 0.0) == Approx(expected).epsilon(1e-8));
        for (double x : {-2.0, 0.5, 3.0}) {
            const double reference = oracles::stable_pdf(0.7, 0.0, 1.0, 0.0, x);
            CHECK(pdf({0.7, 0.0, 1.0, 0.0}, x) == Approx(reference).epsilon(1e-6));
        }
    }

    TEST_CASE("gaussian and cauchy reductions within 1e-8 on [-10, 10]") {
        const StableParams gauss{2.0, 0.0, 0.5, 0.0};
        const StableParams cauchy{1.0, 0.0, 1.0, 0.0};
        const auto cfg = numeric_cfg();
        for (int i = 0; i <= 100; ++i) {
            const double x = -10.0 + 0.2 * i;
            CHECK(pdf(gauss, x, cfg) == Approx(normal_pdf(x)).scale(1).epsilon(1e-8));
            CHECK(cdf(gauss, x, cfg) == Approx(normal_cdf(x)).scale(1).epsilon(1e-8));
            CHECK(pdf(cauchy, x, cfg) ==
                  Approx(1.0 / (M_PI * (1.0 + x * x))).scale(1).epsilon(1e-8));
            CHECK(cdf(cauchy, x, cfg) ==
                  Approx(0.5 + std::atan(x) / M_PI).scale(1).epsilon(1e-8));
        }
    }

    TEST_CASE("cdf closed-form anchor points") {
        CHECK(cdf({2.0, 0.0, 0.5, 0.0}, -1.0) == Approx(0.158655254).epsilon(1e-6));
        CHECK(cdf({2.0, 0.0, 0.5, 0.0}, -4.0) == Approx(3.167124e-05).epsilon(1e-6));
        CHECK(cdf({1.0, 0.0, 1.0, 0.0}, -1.0) == Approx(0.25).epsilon(1e-12));
        // location: F(sigma) = 1/2 for beta = 0
        CHECK(cdf({1.7, 0.0, 2.0, 3.0}, 3.0, numeric_cfg()) == Approx(0.5).epsilon(1e-9));
    }

    TEST_CASE("beta = 0 density is symmetric about sigma") {
        const StableParams p{1.4, 0.0, 1.3, 0.7};
        for (double u : {0.3, 1.1, 2.9, 6.0})
            CHECK(pdf(p, p.sigma + u) == Approx(pdf(p, p.sigma - u)).epsilon(1e-9));
    }

    TEST_CASE("cdf is nondecreasing and reaches the far-tail limits") {
        const StableParams p{1.5, 0.3, 1.0, 0.0};
        double prev = 0.0;
        for (int i = 0; i <= 40; ++i) {
            const double x = -12.0 + 0.6 * i;
            const double v = cdf(p, x);
            CHECK(v >= prev - 1e-9);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            prev = v;
        }
        CHECK(cdf(p, -50.0 * p.gamma) == Approx(0.0).scale(1).epsilon(2e-3));
        CHECK(cdf(p, 50.0 * p.gamma) == Approx(1.0).epsilon(2e-3));
    }

    TEST_CASE("density integrates to one (alpha = 1.5, wide grid)") {
        const StableParams p{1.5, 0.0, 1.0, 0.0};
        const double cut = 300.0;
        auto f = [&](double x) { return pdf(p, x); };
        const double body = oracles::simpson(f, -cut, cut, 3000);
        // symmetric-stable tail mass ~ 2 C x^-alpha, C = sin(pi a/2) Gamma(a) / pi
        const double tail_const = std::sin(0.75 * M_PI) * std::tgamma(1.5) / M_PI;
        const double tails = 2.0 * tail_const * std::pow(cut, -1.5);
        CHECK(body + tails == Approx(1.0).epsilon(1e-4));
        CHECK(body <= 1.0 + 1e-6);
    }

    TEST_CASE("skewed cdf against the brute-force oracle") {
        const StableParams p{1.5, 0.5, 1.0, 0.0};
        for (double x : {-2.0, 0.0, 1.5}) {
            const double reference = oracles::stable_cdf(1.5, 0.5, 1.0, 0.0, x);
            CHECK(cdf(p, x) == Approx(reference).epsilon(2e-4));
        }
    }

    TEST_CASE("quadrature failure carries the achieved error") {
        InversionConfig tiny;
        tiny.use_closed_forms = false;
        tiny.max_evaluations = 200;
        tiny.tolerance = 1e-12;
        try {
            pdf({1.5, 0.0, 1.0, 0.0}, 8.0, tiny);
            FAIL("expected AccuracyError");
        } catch (const AccuracyError& e) {
            CHECK(e.requested() == 1e-12);
            CHECK(e.achieved() > e.requested());
        }
    }

    TEST_CASE("config validation") {
        InversionConfig bad;
        bad.t_max = -1.0;
        CHECK_THROWS_AS(pdf({1.5, 0.0, 1.0, 0.0}, 0.0, bad), ParameterError);
        bad = InversionConfig{};
        bad.tolerance = 0.0;
        CHECK_THROWS_AS(cdf({1.5, 0.0, 1.0, 0.0}, 0.0, bad), ParameterError);
    }

    TEST_CASE("concurrent invocations agree with serial results") {
        const StableParams p{1.5, 0.2, 1.0, 0.0};
        std::vector<double> serial;
        for (int i = 0; i < 8; ++i) serial.push_back(pdf(p, -4.0 + i));

        std::vector<std::future<double>> jobs;
        for (int i = 0; i < 8; ++i)
            jobs.push_back(std::async(std::launch::async,
                                      [&p, i] { return pdf(p, -4.0 + i); }));
        for (int i = 0; i < 8; ++i) CHECK(jobs[i].get() == serial[i]);
    }
}

TEST_SUITE("stable.tail_table") {
    TEST_CASE("ratio arithmetic matches the published comparison row") {
        // P_stable = 0.006697816, P_normal = 0.001349898 -> 4.96171990
        CHECK(0.006697816 / 0.001349898 == Approx(4.96171990).epsilon(1e-6));
        // the table computes exactly that quotient per row
        const auto rows = tail_table({1.5, 0.0, 1.0, 0.0}, {-2.0});
        CHECK(rows[0].ratio == Approx(rows[0].p_stable / rows[0].p_normal).epsilon(1e-15));
    }

    TEST_CASE("symmetric parameters give ratio one at x = 0") {
        const auto rows = tail_table({1.5, 0.0, 1.0, 0.0}, {0.0});
        CHECK(rows[0].p_normal == Approx(0.5).epsilon(1e-12));
        CHECK(rows[0].p_stable == Approx(0.5).epsilon(1e-8));
        CHECK(rows[0].ratio == Approx(1.0).epsilon(1e-7));
    }

    TEST_CASE("heavy tail dominates the normal tail") {
        const auto rows = tail_table({1.5, 0.0, 1.0, 0.0}, {-6.0});
        CHECK(rows[0].ratio > 1e3);
    }

    TEST_CASE("rows follow the requested order and underflow gives +inf") {
        const auto rows = tail_table({2.0, 0.0, 0.5, 0.0}, {-1.0, -45.0, -2.0});
        CHECK(rows.size() == 3);
        CHECK(rows[0].x == -1.0);
        CHECK(rows[1].x == -45.0);
        CHECK(rows[2].x == -2.0);
        CHECK(rows[1].p_normal == 0.0);
        CHECK(std::isinf(rows[1].ratio));
    }
}

TEST_SUITE("stable.identities") {
    TEST_CASE("gaussian stability: b = sqrt(a)") {
        const auto report = check_stability({2.0, 0.0, 0.5, 0.0}, 4.0);
        CHECK(report.b_used == Approx(2.0).epsilon(1e-15));
        CHECK(report.max_modulus_error < 1e-12);
        CHECK(report.passed);
    }

    TEST_CASE("cauchy strict stability: b = a, c = 0") {
        const auto report = check_stability({1.0, 0.0, 1.0, 0.0}, 3.0);
        CHECK(report.b_used == Approx(3.0).epsilon(1e-15));
        CHECK(report.c_used == 0.0);
        CHECK(report.max_modulus_error < 1e-12);
        CHECK(report.passed);
    }

    TEST_CASE("identity scaling a = 1 is exact") {
        const auto report = check_stability({1.3, -0.4, 2.0, 1.0}, 1.0, 1e-15);
        CHECK(report.b_used == 1.0);
        CHECK(report.c_used == 0.0);
        CHECK(report.max_modulus_error == 0.0);
    }

    TEST_CASE("property: every valid parameter set is stable under the implied (b, c)") {
        detail::Rng rng(3);
        for (int i = 0; i < 60; ++i) {
            const auto p = random_params(rng);
            const double a = 0.25 + 4.0 * rng.next_uniform();
            const auto report = check_stability(p, a, 1e-10);
            CHECK(report.passed);
        }
    }

    TEST_CASE("self-similarity: strictly stable symmetric laws need no translation") {
        detail::Rng rng(5);
        for (int i = 0; i < 40; ++i) {
            StableParams p = random_params(rng);
            p.sigma = 0.0;
            p.beta = 0.0;
            const double a = 0.25 + 4.0 * rng.next_uniform();
            const double b = std::pow(a, 1.0 / p.alpha);
            for (double t : stability_z_grid()) {
                const auto lhs = std::exp(a * log_cf(p, t));
                const auto rhs = cf(p, b * t);
                CHECK(std::abs(lhs - rhs) <= 1e-12);
            }
        }
    }

    TEST_CASE("skewed alpha = 1 stability needs the log translation") {
        const auto report = check_stability({1.0, 0.7, 1.0, 0.3}, 3.0);
        // c = sigma (a - b) - gamma beta (2/pi) a ln a, with b = a here
        const double expected = -0.7 * (2.0 / M_PI) * 3.0 * std::log(3.0);
        CHECK(report.c_used == Approx(expected).epsilon(1e-12));
        CHECK(report.passed);
    }
}

TEST_SUITE("stable.semistable") {
    TEST_CASE("cf at z = 0 is one for any spec") {
        const auto v = semistable_cf({2.0, 1.0, 1.0, 30}, 0.0);
        CHECK(v.value == std::complex<double>(1.0, 0.0));
    }

    TEST_CASE("modulus stays within the CF bound") {
        const auto v = semistable_cf({2.0, 0.5, 1.0, 80}, 1.0);
        CHECK(std::abs(v.value) <= 1.0 + 1e-12);
    }

    TEST_CASE("scaling identity with the implied translation, a = b^alpha") {
        const SemiStableSpec s{2.0, 1.0, 1.0, 60};
        const double c = semistable_translation(s);
        CHECK(c == Approx(2.0).epsilon(1e-14));
        for (double z : {0.1, 0.5, 1.0}) {
            const auto lhs = std::pow(semistable_cf(s, z).value, 2.0);
            const auto rhs = semistable_cf(s, 2.0 * z).value *
                             std::exp(std::complex<double>(0.0, c * z));
            CHECK(std::abs(lhs - rhs) < 1e-8);
        }
    }

    TEST_CASE("translation handles atoms away from one") {
        for (double atom : {0.3, -2.5, 1.0 / 8.0}) {
            const SemiStableSpec s{2.0, 1.2, atom, 90};
            const double a = std::pow(s.base, s.alpha);
            const double c = semistable_translation(s);
            for (double z : {0.1, 1.0}) {
                const auto lhs = std::pow(semistable_cf(s, z).value, a);
                const auto rhs = semistable_cf(s, s.base * z).value *
                                 std::exp(std::complex<double>(0.0, c * z));
                CHECK(std::abs(lhs - rhs) < 1e-10);
            }
        }
    }

    TEST_CASE("truncation bound shrinks with N and choose_truncation honors it") {
        const double loose = semistable_cf({2.0, 1.0, 1.0, 10}, 1.0).truncation_bound;
        const double tight = semistable_cf({2.0, 1.0, 1.0, 60}, 1.0).truncation_bound;
        CHECK(tight < loose);
        CHECK(tight < 1e-10);

        const int n = choose_truncation(2.0, 1.0, 1.0, 2.0);
        CHECK(semistable_cf({2.0, 1.0, 1.0, n}, 2.0).truncation_bound <= 1e-10);
        CHECK(n < 100);
    }

    TEST_CASE("spec validation") {
        CHECK_THROWS_AS(semistable_cf({1.0, 1.0, 1.0, 10}, 0.5), ParameterError);
        CHECK_THROWS_AS(semistable_cf({2.0, 2.0, 1.0, 10}, 0.5), ParameterError);
        CHECK_THROWS_AS(semistable_cf({2.0, 1.0, 0.0, 10}, 0.5), ParameterError);
        CHECK_THROWS_AS(semistable_cf({2.0, 1.0, 1.0, 0}, 0.5), ParameterError);
    }
}
