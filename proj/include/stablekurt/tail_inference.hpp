#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "stablekurt/moments.hpp"
#include "stablekurt/random.hpp"

namespace sk {

enum class EstimationMethod { KurtosisRatio, GrowthSlope, KogonWilliams };

[[nodiscard]] std::string_view to_string(EstimationMethod method) noexcept;

/// Reported estimates are clamped to [kAlphaFloor, 2].
inline constexpr double kAlphaFloor = 0.01;
inline constexpr double kAlphaCeiling = 2.0;

struct AlphaEstimate {
    double alpha_hat = 2.0;
    double alpha_raw = 2.0;  ///< estimate before clamping
    EstimationMethod method = EstimationMethod::KurtosisRatio;
    std::size_t n_used = 0;
    std::optional<double> sigma_hat;  ///< Kogon–Williams only
    bool clamped = false;
};

/// Inverts E(g2) ≈ n(1 - α/2): α_raw = 2(1 - g2/n), then clamps. Throws
/// InsufficientDataError for n < 4.
[[nodiscard]] AlphaEstimate alpha_from_kurtosis(double g2, std::size_t n);

/// α̂ from the average slope b of a growth curve, b ≈ 1 - α/2.
[[nodiscard]] AlphaEstimate alpha_from_growth_slope(double slope, std::size_t n_used);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::vector<double> residuals;
};

/// OLS of g2 on checkpoint size, intercept included. Needs ≥ 3 checkpoints with
/// distinct sizes (ParameterError otherwise). A constant curve reports R² = 1.
[[nodiscard]] SlopeFit fit_growth_slope(const GrowthCurve& curve);

/// Regression through the origin of slope b on (2 - α); points are (α, b).
/// The expected coefficient is 1/2, i.e. b ≈ 1 - α/2.
[[nodiscard]] double slope_vs_alpha_regression(std::span<const std::pair<double, double>> points);

/// Calibrated on m = 5000 mean curves over checkpoints 50..500: stable α ≤ 1.9 stays below
/// about 1e-3 while Student-t(3) stays above about 0.013.
inline constexpr double kDefaultLinearityThreshold = 0.005;

struct LinearityReport {
    double linear_r2 = 0.0;
    double quad_coeff = 0.0;        ///< coefficient of k² in the quadratic fit
    double quad_improvement = 0.0;  ///< R²(quadratic) - R²(linear), never negative
    double threshold = kDefaultLinearityThreshold;
    bool stable_like = true;
};

/// Compares linear and quadratic fits of a growth curve. The curve is called
/// stable-like when adding the quadratic term gains less than `threshold` in R².
/// Needs ≥ 5 checkpoints.
[[nodiscard]] LinearityReport linearity_diagnostic(const GrowthCurve& curve,
                                                   double threshold = kDefaultLinearityThreshold);

struct BootstrapOptions {
    std::size_t resamples = 1000;
    double level = 0.05;
    SeedSpec seed{};
    unsigned threads = 1;  ///< 0 = hardware concurrency; results do not depend on it
};

struct BootstrapResult {
    double alpha_hat = 2.0;  ///< clamped estimate on the original sample
    double alpha_raw = 2.0;  ///< unclamped estimate on the original sample
    double alpha_raw_median = 2.0;
    double alpha_ci_low = 2.0;
    double alpha_ci_high = 2.0;
    double upper_quantile = 2.0;  ///< (1 - level) percentile of the resampled α_raw
    std::size_t resamples = 0;
    double level = 0.05;
    std::size_t redraws = 0;  ///< degenerate resamples that were drawn again
    bool reject_alpha2 = false;
};

/// Percentile bootstrap of α_raw = 2(1 - g2/n) with a one-sided test of α = 2 against α < 2.
///
/// Resample b uses substream b of options.seed. H0 is rejected when the (1 - level)
/// percentile of the resampled α_raw lies below 2. Requires n ≥ 50, B ≥ 100,
/// level in (0, 0.5) and a nondegenerate sample (ParameterError). A degenerate resample is
/// drawn again up to 10 times before DegenerateSampleError.
[[nodiscard]] BootstrapResult bootstrap_alpha_test(std::span<const double> sample, const BootstrapOptions& options);

/// Empirical characteristic function on a grid of positive frequencies.
struct EmpiricalCF {
    std::vector<double> t_grid;
    std::vector<double> modulus;          ///< |φ̂(t)|
    std::vector<double> log_log_modulus;  ///< ln(-ln |φ̂(t)|²)
};

/// Throws NumericDomainError naming the first grid point where |φ̂|² is outside (0, 1).
[[nodiscard]] EmpiricalCF empirical_cf(std::span<const double> sample, std::span<const double> t_grid);

/// Kogon–Williams regression for a symmetric stable sample.
///
/// The sample is centred at its median and scaled by the quantile scale
/// (q(0.72) - q(0.28)) / 1.654; then ln(-ln|φ̂(t)|²) is regressed on ln t over
/// t = 0.1, 0.2, ..., 1.0. Since |φ(t)|² = exp(-2σ^α t^α) the slope is α and the
/// intercept ln(2σ^α). Needs n ≥ 100.
[[nodiscard]] AlphaEstimate kogon_williams(std::span<const double> sample);

/// Type-7 (linear interpolation) quantile of an unsorted sample; p in [0, 1].
[[nodiscard]] double quantile(std::span<const double> values, double p);

}  // namespace sk
