#include <doctest.h>

#include <cmath>

#include "stablekurt/distributions.hpp"
#include "stablekurt/errors.hpp"
#include "stablekurt/tail_inference.hpp"
#include "support/oracles.hpp"

using namespace sk;
using namespace sk::testing;

TEST_SUITE("tail_inference") {
    TEST_CASE("alpha from kurtosis") {
        const auto est = alpha_from_kurtosis(0.375 * 1000, 1000);
        CHECK(est.alpha_hat == doctest::Approx(1.25));
        CHECK_FALSE(est.clamped);
        CHECK(est.method == EstimationMethod::KurtosisRatio);
        CHECK(est.n_used == 1000);

        for (std::size_t n : {4u, 50u, 12345u}) {
            const auto gaussian = alpha_from_kurtosis(0.0, n);
            CHECK(gaussian.alpha_hat == 2.0);
            CHECK_FALSE(gaussian.clamped);
        }

        // {1,2,3,4,5}: g2 = -1.3
        const auto light = alpha_from_kurtosis(-1.3, 5);
        CHECK(light.alpha_raw == doctest::Approx(2.52));
        CHECK(light.alpha_hat == 2.0);
        CHECK(light.clamped);

        const auto heavy = alpha_from_kurtosis(999.0, 1000);
        CHECK(heavy.alpha_hat == kAlphaFloor);
        CHECK(heavy.clamped);

        CHECK_THROWS_AS((void)alpha_from_kurtosis(0.0, 3), InsufficientDataError);
    }

    TEST_CASE("alpha from kurtosis is strictly decreasing in g2 before clamping") {
        double previous = alpha_from_kurtosis(-2.0, 500).alpha_raw;
        for (double g2 = -1.9; g2 < 400; g2 += 0.7) {
            const double current = alpha_from_kurtosis(g2, 500).alpha_raw;
            REQUIRE(current < previous);
            previous = current;
        }
    }

    TEST_CASE("growth slope fits") {
        const auto exact = fit_growth_slope(GrowthCurve{{50, 100, 150}, {25, 50, 75}});
        CHECK(exact.slope == doctest::Approx(0.5));
        CHECK(exact.intercept == doctest::Approx(0.0));
        CHECK(exact.r_squared == 1.0);

        const auto flat = fit_growth_slope(GrowthCurve{{50, 100, 150}, {3, 3, 3}});
        CHECK(flat.slope == 0.0);
        CHECK(flat.intercept == doctest::Approx(3.0));

        CHECK_THROWS_AS((void)fit_growth_slope(GrowthCurve{{50, 100}, {1, 2}}), ParameterError);
        CHECK_THROWS_AS((void)fit_growth_slope(GrowthCurve{{50, 50, 50}, {1, 2, 3}}), ParameterError);
    }

    TEST_CASE("affine curves are recovered") {
        RandomStream rng(SeedSpec{6, 0});
        for (int trial = 0; trial < 200; ++trial) {
            const double slope = rng.uniform() * 2 - 1;
            const double intercept = rng.uniform() * 20 - 10;
            GrowthCurve curve;
            curve.checkpoints = checkpoint_grid(4 + rng.below(50), 2000, 1 + rng.below(100));
            for (auto k : curve.checkpoints) curve.g2_values.push_back(intercept + slope * static_cast<double>(k));
            if (curve.checkpoints.size() < 3) continue;
            const auto fit = fit_growth_slope(curve);
            REQUIRE(close_rel(fit.slope, slope, 1e-10));
            REQUIRE(close_rel(fit.intercept, intercept, 1e-10));
        }
    }

    TEST_CASE("residuals sum to zero with a fitted intercept") {
        const auto x = sample_symmetric_stable(StableParams(1.3), 500, SeedSpec{1, 1});
        const auto curve = growth_curve(x, checkpoint_grid(50, 500, 50));
        const auto fit = fit_growth_slope(curve);
        double sum = 0.0, scale = 0.0;
        for (double r : fit.residuals) sum += r;
        for (double g : curve.g2_values) scale += std::abs(g);
        CHECK(std::abs(sum) <= 1e-8 * scale);
        CHECK(fit.r_squared >= 0.0);
        CHECK(fit.r_squared <= 1.0);
    }

    TEST_CASE("slope versus alpha through the origin") {
        const std::vector<std::pair<double, double>> exact{{1.0, 0.5}, {1.5, 0.25}, {2.0, 0.0}};
        CHECK(slope_vs_alpha_regression(exact) == doctest::Approx(0.5));
        const std::vector<std::pair<double, double>> single{{1.0, 0.5}};
        CHECK(slope_vs_alpha_regression(single) == doctest::Approx(0.5));
        const std::vector<std::pair<double, double>> degenerate{{2.0, 0.1}, {2.0, 0.0}};
        CHECK_THROWS_AS((void)slope_vs_alpha_regression(degenerate), ParameterError);
    }

    TEST_CASE("linearity diagnostic") {
        GrowthCurve line;
        line.checkpoints = checkpoint_grid(50, 500, 50);
        for (auto k : line.checkpoints) line.g2_values.push_back(0.3 * static_cast<double>(k));
        const auto linear = linearity_diagnostic(line);
        CHECK(linear.quad_improvement == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(linear.quad_coeff == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(linear.linear_r2 == doctest::Approx(1.0));
        CHECK(linear.stable_like);

        GrowthCurve bent = line;
        for (std::size_t i = 0; i < bent.checkpoints.size(); ++i) {
            bent.g2_values[i] = 10.0 * std::log(static_cast<double>(bent.checkpoints[i]));
        }
        const auto curved = linearity_diagnostic(bent);
        CHECK(curved.quad_improvement > kDefaultLinearityThreshold);
        CHECK(curved.quad_coeff < 0.0);
        CHECK_FALSE(curved.stable_like);
        CHECK(linearity_diagnostic(bent, 0.9).stable_like);

        CHECK_THROWS_AS((void)linearity_diagnostic(GrowthCurve{{10, 20, 30, 40}, {1, 2, 3, 4}}), ParameterError);
    }

    TEST_CASE("quantile interpolation") {
        const std::vector<double> x{4, 1, 3, 2};
        CHECK(quantile(x, 0.0) == 1.0);
        CHECK(quantile(x, 1.0) == 4.0);
        CHECK(quantile(x, 0.5) == 2.5);
        CHECK(quantile(x, 0.25) == doctest::Approx(1.75));
    }

    TEST_CASE("bootstrap preconditions") {
        const auto x = sample_gaussian(1.0, 200, SeedSpec{1, 2});
        BootstrapOptions options;
        options.resamples = 200;
        CHECK_THROWS_AS((void)bootstrap_alpha_test(std::span<const double>(x.data(), 49), options), ParameterError);
        options.resamples = 99;
        CHECK_THROWS_AS((void)bootstrap_alpha_test(x, options), ParameterError);
        options.resamples = 200;
        options.level = 0.5;
        CHECK_THROWS_AS((void)bootstrap_alpha_test(x, options), ParameterError);
        options.level = 0.0;
        CHECK_THROWS_AS((void)bootstrap_alpha_test(x, options), ParameterError);
        options.level = 0.05;
        const std::vector<double> constant(100, 3.25);
        CHECK_THROWS_AS((void)bootstrap_alpha_test(constant, options), ParameterError);
    }

    TEST_CASE("bootstrap is deterministic and thread independent") {
        const auto x = sample_symmetric_stable(StableParams(1.5), 300, SeedSpec{3, 0});
        BootstrapOptions options;
        options.resamples = 300;
        options.seed = SeedSpec{99, 1};
        const auto a = bootstrap_alpha_test(x, options);
        const auto b = bootstrap_alpha_test(x, options);
        options.threads = 4;
        const auto c = bootstrap_alpha_test(x, options);
        for (const auto* r : {&b, &c}) {
            CHECK(r->alpha_ci_low == a.alpha_ci_low);
            CHECK(r->alpha_ci_high == a.alpha_ci_high);
            CHECK(r->alpha_raw_median == a.alpha_raw_median);
            CHECK(r->reject_alpha2 == a.reject_alpha2);
        }
        CHECK(a.alpha_ci_low <= a.alpha_raw_median);
        CHECK(a.alpha_raw_median <= a.alpha_ci_high);
        CHECK(a.alpha_hat == alpha_from_kurtosis(excess_kurtosis(x), x.size()).alpha_hat);
        CHECK(a.reject_alpha2 == (a.upper_quantile < 2.0));
        options.seed = SeedSpec{100, 1};
        CHECK(bootstrap_alpha_test(x, options).alpha_ci_low != a.alpha_ci_low);
    }

    TEST_CASE("bootstrap redraws degenerate resamples") {
        // One distinct value among 50: a resample misses it with probability (49/50)^50 ≈ 0.36,
        // and is then constant.
        std::vector<double> x(50, 1.0);
        x[17] = 2.0;
        BootstrapOptions options;
        options.resamples = 200;
        options.seed = SeedSpec{5, 5};
        const auto r = bootstrap_alpha_test(x, options);
        CHECK(r.redraws > 0);
        CHECK(r.alpha_ci_low <= r.alpha_ci_high);
    }

    TEST_CASE("bootstrap rejects alpha = 2 for heavy tails") {
        const auto x = sample_symmetric_stable(StableParams(1.2), 1000, SeedSpec{8, 0});
        BootstrapOptions options;
        options.resamples = 500;
        options.seed = SeedSpec{8, 1};
        CHECK(bootstrap_alpha_test(x, options).reject_alpha2);
    }

    TEST_CASE("empirical characteristic function") {
        const std::vector<double> x{-1, 1};
        const std::vector<double> grid{0.5};
        const auto cf = empirical_cf(x, grid);
        CHECK(cf.modulus[0] == doctest::Approx(std::cos(0.5)));
        CHECK(cf.log_log_modulus[0] == doctest::Approx(std::log(-std::log(std::cos(0.5) * std::cos(0.5)))));
        const std::vector<double> zero_grid{0.0};
        CHECK_THROWS_AS((void)empirical_cf(x, zero_grid), NumericDomainError);
        // a point mass has |φ| = 1 everywhere
        const std::vector<double> zeros(10, 0.0);
        CHECK_THROWS_AS((void)empirical_cf(zeros, grid), NumericDomainError);
    }

    TEST_CASE("Kogon-Williams recovers alpha and sigma") {
        std::vector<double> alpha15, sigma15, alpha2;
        for (std::uint64_t s = 0; s < 20; ++s) {
            const auto x = sample_symmetric_stable(StableParams(1.5), 5000, SeedSpec{s, 40});
            const auto est = kogon_williams(x);
            REQUIRE(est.sigma_hat.has_value());
            alpha15.push_back(est.alpha_hat);
            sigma15.push_back(*est.sigma_hat);
            alpha2.push_back(kogon_williams(sample_symmetric_stable(StableParams(2.0), 5000, SeedSpec{s, 41})).alpha_hat);
        }
        const double a = median(alpha15), sg = median(sigma15), a2 = median(alpha2);
        CHECK(a >= 1.40);
        CHECK(a <= 1.60);
        CHECK(sg >= 0.9);
        CHECK(sg <= 1.1);
        CHECK(a2 >= 1.9);
        CHECK(a2 <= 2.0);
    }

    TEST_CASE("Kogon-Williams scale equivariance") {
        const auto x = sample_symmetric_stable(StableParams(1.7, 1.0, 0.3), 2000, SeedSpec{7, 7});
        const auto base = kogon_williams(x);
        for (double c : {0.01, 4.0, 250.0}) {
            std::vector<double> y(x.size());
            std::transform(x.begin(), x.end(), y.begin(), [c](double v) { return c * v; });
            const auto est = kogon_williams(y);
            CHECK(close_rel(est.alpha_hat, base.alpha_hat, 1e-6));
            CHECK(close_rel(*est.sigma_hat, c * *base.sigma_hat, 1e-6));
        }
    }

    TEST_CASE("Kogon-Williams errors") {
        CHECK_THROWS_AS((void)kogon_williams(std::vector<double>(200, 1.5)), DegenerateSampleError);
        CHECK_THROWS_AS((void)kogon_williams(std::vector<double>(50, 1.5)), InsufficientDataError);
    }
}
