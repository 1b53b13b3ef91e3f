#include <doctest.h>

#include <cmath>

#include "stablekurt/distributions.hpp"
#include "stablekurt/errors.hpp"
#include "stablekurt/moments.hpp"
#include "support/oracles.hpp"

using namespace sk;
using namespace sk::testing;

TEST_SUITE("distributions") {
    TEST_CASE("parameter validation") {
        CHECK_THROWS_AS(StableParams(0.0), ParameterError);
        CHECK_THROWS_AS(StableParams(2.1), ParameterError);
        CHECK_THROWS_AS(StableParams(1.5, 0.0), ParameterError);
        CHECK_THROWS_AS(StableParams(1.5, -1.0), ParameterError);
        CHECK_THROWS_AS(StableParams(1.5, 1.0, 0.0, 0.3), ParameterError);
        CHECK_NOTHROW(StableParams(2.0));
        CHECK_NOTHROW(StableParams(0.5, 3.0, -1.0));
        CHECK_THROWS_AS(StudentTParams(0.0), ParameterError);
        CHECK_THROWS_AS(StudentTParams(-2.0), ParameterError);
        CHECK_THROWS_AS((void)sample_gaussian(0.0, 10, SeedSpec{1, 0}), ParameterError);
    }

    TEST_CASE("alpha = 2 is Gaussian with variance 2 sigma^2") {
        const auto x = sample_symmetric_stable(StableParams(2.0), 100000, SeedSpec{11, 0});
        const double var = sample_variance(x);
        CHECK(var >= 1.95);
        CHECK(var <= 2.05);
        const auto oracle = std_gaussian(100000, std::sqrt(2.0), 12345);
        CHECK(ks_p_value(ks_statistic(x, oracle), x.size(), oracle.size()) > 0.01);
    }

    TEST_CASE("alpha = 1 is standard Cauchy") {
        const auto x = sample_symmetric_stable(StableParams(1.0), 100000, SeedSpec{12, 0});
        const double q75 = empirical_quantile(x, 0.75);
        CHECK(q75 >= 0.96);
        CHECK(q75 <= 1.04);
    }

    TEST_CASE("empty request") {
        CHECK(sample_symmetric_stable(StableParams(1.3), 0, SeedSpec{1, 0}).empty());
        CHECK(sample_student_t(StudentTParams(3.0), 0, SeedSpec{1, 0}).empty());
        CHECK(sample_gaussian(1.0, 0, SeedSpec{1, 0}).empty());
    }

    TEST_CASE("student-t moments") {
        const auto t3 = sample_student_t(StudentTParams(3.0), 100000, SeedSpec{21, 0});
        const double med = median(t3);
        CHECK(med >= -0.02);
        CHECK(med <= 0.02);

        const auto t5 = sample_student_t(StudentTParams(5.0), 100000, SeedSpec{22, 0});
        CHECK(std::abs(sample_variance(t5) - 5.0 / 3.0) <= 0.05);

        const auto big = sample_student_t(StudentTParams(1e6), 100000, SeedSpec{23, 0});
        const double var = sample_variance(big);
        CHECK(var >= 0.98);
        CHECK(var <= 1.03);
        const auto oracle = std_gaussian(100000, 1.0, 999);
        CHECK(ks_p_value(ks_statistic(big, oracle), big.size(), oracle.size()) > 0.01);
    }

    TEST_CASE("gaussian sampler") {
        const auto z = sample_gaussian(1.0, 100000, SeedSpec{31, 0});
        const double g2 = excess_kurtosis(z);
        CHECK(g2 >= -0.05);
        CHECK(g2 <= 0.05);

        const auto z3 = sample_gaussian(3.0, 100000, SeedSpec{32, 0});
        const double var = sample_variance(z3);
        CHECK(var >= 8.7);
        CHECK(var <= 9.3);

        const auto one = sample_gaussian(1.0, 1, SeedSpec{33, 0});
        REQUIRE(one.size() == 1);
        CHECK(std::isfinite(one[0]));
    }

    TEST_CASE("determinism") {
        const SeedSpec seed{77, 5};
        CHECK(sample_symmetric_stable(StableParams(1.4), 1000, seed) ==
              sample_symmetric_stable(StableParams(1.4), 1000, seed));
        CHECK(sample_student_t(StudentTParams(4.0), 1000, seed) == sample_student_t(StudentTParams(4.0), 1000, seed));
        CHECK(sample_gaussian(2.0, 1000, seed) == sample_gaussian(2.0, 1000, seed));
    }

    TEST_CASE("scale and location equivariance are exact") {
        const SeedSpec seed{5, 9};
        for (double alpha : {0.7, 1.0, 1.5, 2.0}) {
            const auto unit = sample_symmetric_stable(StableParams(alpha), 2000, seed);
            const auto scaled = sample_symmetric_stable(StableParams(alpha, 3.5), 2000, seed);
            const auto shifted = sample_symmetric_stable(StableParams(alpha, 1.0, -4.25), 2000, seed);
            for (std::size_t i = 0; i < unit.size(); ++i) {
                REQUIRE(scaled[i] == 3.5 * unit[i]);
                REQUIRE(shifted[i] == unit[i] + -4.25);
            }
        }
    }

    TEST_CASE("symmetry about zero") {
        for (double alpha : {1.0, 1.5, 2.0}) {
            const auto x = sample_symmetric_stable(StableParams(alpha), 100000, SeedSpec{101, 0});
            const double med = median(x);
            CHECK(med >= -0.05);
            CHECK(med <= 0.05);
        }
    }
}
