#include "stablekurt/tail_inference.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stablekurt/errors.hpp"
#include "stablekurt/linear_fit.hpp"
#include "stablekurt/parallel.hpp"

namespace sk {

std::string_view to_string(EstimationMethod method) noexcept {
    switch (method) {
        case EstimationMethod::KurtosisRatio: return "kurtosis-ratio";
        case EstimationMethod::GrowthSlope: return "growth-slope";
        case EstimationMethod::KogonWilliams: return "kogon-williams";
    }
    return "unknown";
}

namespace {

AlphaEstimate make_estimate(double raw, EstimationMethod method, std::size_t n) {
    AlphaEstimate est;
    est.alpha_raw = raw;
    est.method = method;
    est.n_used = n;
    est.alpha_hat = std::isnan(raw) ? kAlphaCeiling : std::clamp(raw, kAlphaFloor, kAlphaCeiling);
    est.clamped = !(raw >= kAlphaFloor && raw <= kAlphaCeiling);
    return est;
}

double raw_alpha(double g2, std::size_t n) { return 2.0 * (1.0 - g2 / static_cast<double>(n)); }

double r_squared(double rss, double tss) {
    if (rss <= 0.0) return 1.0;
    if (tss <= 0.0) return 0.0;
    return std::clamp(1.0 - rss / tss, 0.0, 1.0);
}

}  // namespace

AlphaEstimate alpha_from_kurtosis(double g2, std::size_t n) {
    if (n < kMinKurtosisSize) {
        throw InsufficientDataError("alpha from kurtosis needs n >= 4, got " + std::to_string(n));
    }
    return make_estimate(raw_alpha(g2, n), EstimationMethod::KurtosisRatio, n);
}

AlphaEstimate alpha_from_growth_slope(double slope, std::size_t n_used) {
    return make_estimate(2.0 * (1.0 - slope), EstimationMethod::GrowthSlope, n_used);
}

SlopeFit fit_growth_slope(const GrowthCurve& curve) {
    const auto& xs = curve.checkpoints;
    const auto& ys = curve.g2_values;
    if (xs.size() != ys.size()) throw ParameterError("growth curve has mismatched columns");
    if (xs.size() < 3) throw ParameterError("slope fit needs at least 3 checkpoints");

    const auto count = static_cast<double>(xs.size());
    double x_mean = 0.0, y_mean = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        x_mean += static_cast<double>(xs[i]);
        y_mean += ys[i];
    }
    x_mean /= count;
    y_mean /= count;

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = static_cast<double>(xs[i]) - x_mean;
        sxx += dx * dx;
        sxy += dx * (ys[i] - y_mean);
    }
    if (sxx == 0.0) throw ParameterError("checkpoint sizes have zero variance");

    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = y_mean - fit.slope * x_mean;
    fit.residuals.resize(xs.size());
    double rss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        fit.residuals[i] = ys[i] - (fit.intercept + fit.slope * static_cast<double>(xs[i]));
        rss += fit.residuals[i] * fit.residuals[i];
    }
    fit.r_squared = r_squared(rss, centered_sum_squares(ys));
    return fit;
}

double slope_vs_alpha_regression(std::span<const std::pair<double, double>> points) {
    if (points.empty()) throw ParameterError("slope regression needs at least one point");
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [alpha, slope] : points) {
        const double x = 2.0 - alpha;
        sxx += x * x;
        sxy += x * slope;
    }
    if (sxx == 0.0) throw ParameterError("degenerate regressor: every alpha equals 2");
    return sxy / sxx;
}

LinearityReport linearity_diagnostic(const GrowthCurve& curve, double threshold) {
    const auto& xs = curve.checkpoints;
    const auto& ys = curve.g2_values;
    if (xs.size() != ys.size()) throw ParameterError("growth curve has mismatched columns");
    if (xs.size() < 5) throw ParameterError("linearity diagnostic needs at least 5 checkpoints");
    if (!(threshold > 0.0)) throw ParameterError("linearity threshold must be positive");

    // Centre and scale the sizes so the quadratic design stays well conditioned.
    double x_mean = 0.0;
    for (auto k : xs) x_mean += static_cast<double>(k);
    x_mean /= static_cast<double>(xs.size());
    double x_scale = 0.0;
    for (auto k : xs) x_scale = std::max(x_scale, std::abs(static_cast<double>(k) - x_mean));
    if (x_scale == 0.0) throw ParameterError("checkpoint sizes have zero variance");

    std::vector<double> ones(xs.size(), 1.0), z(xs.size()), z2(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        z[i] = (static_cast<double>(xs[i]) - x_mean) / x_scale;
        z2[i] = z[i] * z[i];
    }
    const std::vector<std::vector<double>> linear_design{ones, z};
    const std::vector<std::vector<double>> quad_design{ones, z, z2};
    const auto linear = fit_linear_model(linear_design, ys);
    const auto quad = fit_linear_model(quad_design, ys);

    const double tss = centered_sum_squares(ys);
    LinearityReport report;
    report.threshold = threshold;
    report.linear_r2 = r_squared(linear.residual_sum_squares, tss);
    const double quad_r2 = r_squared(quad.residual_sum_squares, tss);
    report.quad_improvement = std::max(0.0, quad_r2 - report.linear_r2);
    report.quad_coeff = quad.coefficients[2] / (x_scale * x_scale);
    report.stable_like = report.quad_improvement < threshold;
    return report;
}

double quantile(std::span<const double> values, double p) {
    if (values.empty()) throw ParameterError("quantile of an empty sample");
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("quantile probability must lie in [0, 1]");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

BootstrapResult bootstrap_alpha_test(std::span<const double> sample, const BootstrapOptions& options) {
    constexpr std::size_t kMinSample = 50;
    constexpr std::size_t kMinResamples = 100;
    constexpr std::size_t kMaxRedraws = 10;

    const std::size_t n = sample.size();
    if (n < kMinSample) throw ParameterError("bootstrap test needs n >= 50, got " + std::to_string(n));
    if (options.resamples < kMinResamples) {
        throw ParameterError("bootstrap test needs B >= 100, got " + std::to_string(options.resamples));
    }
    if (!(options.level > 0.0 && options.level < 0.5)) throw ParameterError("bootstrap level must lie in (0, 0.5)");
    if (n > 0xFFFFFFFFu) throw ParameterError("bootstrap sample too large");
    if (options.resamples > 0xFFFFFFFFu) throw ParameterError("too many bootstrap resamples");
    const auto [lo, hi] = std::minmax_element(sample.begin(), sample.end());
    if (*lo == *hi) throw ParameterError("bootstrap test needs a nondegenerate sample");

    const auto original = alpha_from_kurtosis(compute_stats(sample).g2, n);

    std::vector<double> alphas(options.resamples);
    std::vector<std::size_t> redraws(options.resamples, 0);
    parallel_for(options.resamples, options.threads, [&](std::size_t b) {
        RandomStream rng(options.seed, static_cast<std::uint32_t>(b));
        std::vector<double> resample(n);
        for (std::size_t attempt = 0;; ++attempt) {
            for (auto& x : resample) x = sample[rng.below(static_cast<std::uint32_t>(n))];
            const auto [rlo, rhi] = std::minmax_element(resample.begin(), resample.end());
            if (*rlo != *rhi) break;
            if (attempt == kMaxRedraws) {
                throw DegenerateSampleError("bootstrap resample " + std::to_string(b) +
                                            " stayed degenerate after 10 redraws");
            }
            ++redraws[b];
        }
        alphas[b] = raw_alpha(compute_stats(resample).g2, n);
    });

    BootstrapResult result;
    result.alpha_hat = original.alpha_hat;
    result.alpha_raw = original.alpha_raw;
    result.resamples = options.resamples;
    result.level = options.level;
    for (auto r : redraws) result.redraws += r;
    result.alpha_raw_median = quantile(alphas, 0.5);
    result.alpha_ci_low = quantile(alphas, options.level / 2.0);
    result.alpha_ci_high = quantile(alphas, 1.0 - options.level / 2.0);
    result.upper_quantile = quantile(alphas, 1.0 - options.level);
    result.reject_alpha2 = result.upper_quantile < 2.0;
    return result;
}

EmpiricalCF empirical_cf(std::span<const double> sample, std::span<const double> t_grid) {
    if (sample.empty()) throw InsufficientDataError("empirical characteristic function of an empty sample");
    EmpiricalCF cf;
    cf.t_grid.assign(t_grid.begin(), t_grid.end());
    const auto n = static_cast<double>(sample.size());
    for (double t : t_grid) {
        double re = 0.0, im = 0.0;
        for (double x : sample) {
            re += std::cos(t * x);
            im += std::sin(t * x);
        }
        re /= n;
        im /= n;
        const double modulus2 = re * re + im * im;
        if (!(modulus2 > 0.0 && modulus2 < 1.0)) {
            throw NumericDomainError("|phi(t)|^2 = " + std::to_string(modulus2) + " outside (0, 1) at t = " +
                                     std::to_string(t));
        }
        cf.modulus.push_back(std::sqrt(modulus2));
        cf.log_log_modulus.push_back(std::log(-std::log(modulus2)));
    }
    return cf;
}

AlphaEstimate kogon_williams(std::span<const double> sample) {
    constexpr std::size_t kMinSample = 100;
    constexpr double kQuantileSpread = 1.654;

    const std::size_t n = sample.size();
    if (n < kMinSample) throw InsufficientDataError("Kogon-Williams needs n >= 100, got " + std::to_string(n));
    const auto [lo, hi] = std::minmax_element(sample.begin(), sample.end());
    if (*lo == *hi) throw DegenerateSampleError("sample has zero variance");

    const double scale0 = (quantile(sample, 0.72) - quantile(sample, 0.28)) / kQuantileSpread;
    if (!(scale0 > 0.0)) throw DegenerateSampleError("quantile scale is zero (too many tied values)");
    const double centre = quantile(sample, 0.5);

    std::vector<double> standardized(n);
    for (std::size_t i = 0; i < n; ++i) standardized[i] = (sample[i] - centre) / scale0;

    std::vector<double> grid(10);
    for (std::size_t k = 0; k < grid.size(); ++k) grid[k] = 0.1 * static_cast<double>(k + 1);
    const auto cf = empirical_cf(standardized, grid);

    std::vector<double> log_t(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) log_t[k] = std::log(grid[k]);
    const std::vector<std::vector<double>> design{std::vector<double>(grid.size(), 1.0), log_t};
    const auto fit = fit_linear_model(design, cf.log_log_modulus);

    auto est = make_estimate(fit.coefficients[1], EstimationMethod::KogonWilliams, n);
    // intercept = ln(2 σ^α) on the standardized scale
    const double standardized_scale = std::pow(std::exp(fit.coefficients[0]) / 2.0, 1.0 / est.alpha_hat);
    est.sigma_hat = standardized_scale * scale0;
    return est;
}

}  // namespace sk
