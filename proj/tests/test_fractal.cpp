#include <doctest.h>

#include <cmath>
#include <vector>

#include "levytail/errors.hpp"
#include "levytail/fractal.hpp"
#include "levytail/scaling.hpp"
#include "levytail/synth.hpp"
#include "oracles.hpp"

using namespace levytail;
using doctest::Approx;

namespace {

TimeSeries ramp(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = static_cast<double>(i) / static_cast<double>(n - 1);
    return TimeSeries(std::move(v));
}

}  // namespace

TEST_SUITE("fractal.box_count") {
    TEST_CASE("diagonal trace touches exactly the diagonal cells") {
        const auto line = ramp(1025);
        CHECK(box_count(line, 0.25) == 4);
        CHECK(box_count(line, 0.125) == 8);
        CHECK(box_count(line, 1.0 / 64) == 64);
    }

    TEST_CASE("constant trace occupies one row") {
        const TimeSeries flat(std::vector<double>(512, 7.0));
        CHECK(box_count(flat, 0.25) == 4);
        CHECK(box_count(flat, 1.0 / 16) == 16);
    }

    TEST_CASE("fBm count roughly scales like 2^(2-H) per halving") {
        const auto f = fbm({1 << 16, 0.5}, 7);
        const long coarse = box_count(f.series, 1.0 / 256);
        const long fine = box_count(f.series, 1.0 / 512);
        const double growth = std::log2(static_cast<double>(fine) / coarse);
        CHECK(growth == Approx(1.5).epsilon(0.2));
    }

    TEST_CASE("agrees with a dense sampling cover") {
        const auto f = fbm({1 << 10, 0.5}, 3);
        for (double delta : {0.25, 0.125, 1.0 / 32}) {
            const long fast = box_count(f.series, delta);
            const long dense = oracles::box_count_dense(f.series.values(), delta);
            // dense sampling may miss a cell the interpolated trace only grazes
            CHECK(std::fabs(fast - dense) <=
                  std::max(2.0, 0.01 * static_cast<double>(dense)));
        }
    }

    TEST_CASE("resolution and domain errors") {
        const auto line = ramp(64);
        CHECK_THROWS_AS(box_count(line, 1.0 / 64), ResolutionError);  // < 2/n
        CHECK_THROWS_AS(box_count(line, 0.0), ParameterError);
        CHECK_THROWS_AS(box_count(line, 1.0), ParameterError);
    }

    TEST_CASE("property: counts grow but at most quadruple per halving") {
        const auto f = fbm({1 << 12, 0.4}, 9);
        long prev = box_count(f.series, 0.25);
        for (double delta = 0.125; delta * (1 << 12) >= 2.0; delta /= 2.0) {
            const long next = box_count(f.series, delta);
            CHECK(next >= prev);
            CHECK(next <= 4 * prev);
            prev = next;
        }
    }
}

TEST_SUITE("fractal.box_dimension") {
    TEST_CASE("straight line has dimension one") {
        const auto est = box_dimension(ramp(1 << 14), BoxGridConfig::default_for(1 << 14));
        CHECK(est.d_b == Approx(1.0).epsilon(0.05));
        CHECK_FALSE(est.degenerate);
        CHECK(est.v_star == 1.0);
        CHECK(est.r_squared > 0.999);
    }

    TEST_CASE("fBm traces land near 2 - H") {
        const auto rough = fbm({1 << 16, 0.3}, 1);
        const auto est_rough = box_dimension(rough.series, BoxGridConfig::default_for(1 << 16));
        CHECK(est_rough.d_b == Approx(1.7).epsilon(0.15 / 1.7));

        const auto smooth = fbm({1 << 16, 0.8}, 1);
        const auto est_smooth = box_dimension(smooth.series, BoxGridConfig::default_for(1 << 16));
        CHECK(est_smooth.d_b == Approx(1.2).epsilon(0.15 / 1.2));
    }

    TEST_CASE("constant series: dimension one with the degeneracy flag") {
        const TimeSeries flat(std::vector<double>(4096, -2.0));
        const auto est = box_dimension(flat, BoxGridConfig::default_for(4096));
        CHECK(est.d_b == Approx(1.0).epsilon(1e-12));
        CHECK(est.degenerate);
    }

    TEST_CASE("property: value-axis affine invariance") {
        const auto f = fbm({1 << 12, 0.6}, 21);
        const auto& base = f.series.values();
        std::vector<double> mapped(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) mapped[i] = 3.7 * base[i] - 2.5;

        const auto grid = BoxGridConfig::default_for(base.size());
        const auto est_a = box_dimension(f.series, grid);
        const auto est_b = box_dimension(TimeSeries(mapped), grid);
        CHECK(est_b.d_b == Approx(est_a.d_b).epsilon(0.01));
    }

    TEST_CASE("grid validation") {
        const auto line = ramp(256);
        CHECK_THROWS_AS(box_dimension(line, BoxGridConfig{{0.25, 0.125, 0.0625}}),
                        ParameterError);  // too few
        CHECK_THROWS_AS(box_dimension(line, BoxGridConfig{{0.25, 0.3, 0.125, 0.0625}}),
                        ParameterError);  // not decreasing
        CHECK_THROWS_AS(box_dimension(line, BoxGridConfig{{0.25, 0.2, 0.125, 0.0625}}),
                        ParameterError);  // not a power of 1/2
        CHECK_THROWS_AS(
            box_dimension(line, BoxGridConfig{{0.25, 0.125, 0.0625, 1.0 / 256}}),
            ResolutionError);
    }
}

TEST_SUITE("fractal.maps") {
    TEST_CASE("trace dimension is 2 - H") {
        CHECK(trace_dimension_from_hurst(0.5) == 1.5);
        CHECK(trace_dimension_from_hurst(0.2) == 1.8);
        CHECK(trace_dimension_from_hurst(1.0 - 1e-9) == Approx(1.0).epsilon(1e-8));
    }

    TEST_CASE("property: trace dimension and H sum to 2 exactly") {
        for (double h = 0.05; h < 1.0; h += 0.05)
            CHECK(trace_dimension_from_hurst(h) + h == 2.0);
    }

    TEST_CASE("path dimension caps at the euclidean dimension") {
        CHECK(path_dimension_from_hurst(0.7, 2) == Approx(1.0 / 0.7).epsilon(1e-15));
        CHECK(path_dimension_from_hurst(0.5, 2) == 2.0);
        CHECK(path_dimension_from_hurst(0.3, 2) == 2.0);
    }

    TEST_CASE("property: path dimension is nonincreasing in H") {
        double prev = 1e9;
        for (double h = 0.05; h < 1.0; h += 0.05) {
            const double d = path_dimension_from_hurst(h, 3);
            CHECK(d <= prev);
            CHECK(d <= 3.0);
            prev = d;
        }
    }

    TEST_CASE("domain errors") {
        CHECK_THROWS_AS(trace_dimension_from_hurst(0.0), ParameterError);
        CHECK_THROWS_AS(trace_dimension_from_hurst(1.0), ParameterError);
        CHECK_THROWS_AS(path_dimension_from_hurst(0.5, 0), ParameterError);
    }
}

TEST_SUITE("fractal.consistency") {
    TEST_CASE("box dimension and Hurst estimate complement each other") {
        for (double h0 : {0.4, 0.6}) {
            const auto f = fbm({1 << 14, h0}, 2);
            const auto d = box_dimension(f.series, BoxGridConfig::default_for(1 << 14)).d_b;
            const auto est =
                fit_hurst(scaling_curve(f.series, WindowPlan::default_for(1 << 14)).points);
            CHECK(d + est.h == Approx(2.0).epsilon(0.15 / 2.0));
        }
    }
}
