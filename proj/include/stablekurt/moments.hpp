#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace sk {

/// Smallest sample for which kurtosis is computed.
inline constexpr std::size_t kMinKurtosisSize = 4;

/// Moment summary of a sample. Central moments use the 1/n normalisation.
///
/// b2 is Pearson's sample kurtosis n·Σd⁴/(Σd²)², g2 = b2 - 3 the excess kurtosis and
/// c = b2/n the bounded kurtosis ratio. For any nondegenerate sample 1 ≤ b2 ≤ n, so
/// 0 < c ≤ 1 whatever the distribution.
struct SampleStats {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
    double m4 = 0.0;
    double b2 = 0.0;
    double g2 = 0.0;
    double g1 = 0.0;
    double c = 0.0;
};

/// Two-pass computation about the sample mean with compensated summation.
/// Throws InsufficientDataError for n < 4 and DegenerateSampleError for a constant sample.
[[nodiscard]] SampleStats compute_stats(std::span<const double> sample);
[[nodiscard]] double excess_kurtosis(std::span<const double> sample);
[[nodiscard]] double kurtosis_ratio(std::span<const double> sample);
[[nodiscard]] double skewness(std::span<const double> sample);

/// One-pass central moments up to order four (Pébay/Terriberry updates).
class MomentAccumulator {
public:
    void push(double x) noexcept;

    [[nodiscard]] std::size_t count() const noexcept { return n_; }
    /// Same contract and errors as compute_stats on the values pushed so far.
    [[nodiscard]] SampleStats stats() const;

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double sum2_ = 0.0;
    double sum3_ = 0.0;
    double sum4_ = 0.0;
    double min_ = 0.0;
    double max_ = 0.0;
};

/// Excess kurtosis of successive prefixes of a sample.
struct GrowthCurve {
    std::vector<std::size_t> checkpoints;
    std::vector<double> g2_values;
};

/// g2 of the first k values for each k in `checkpoints`.
///
/// Checkpoints must be strictly increasing with the first ≥ 4 and the last ≤ sample size
/// (ParameterError otherwise). A constant prefix raises DegenerateSampleError carrying the
/// offending checkpoint.
[[nodiscard]] GrowthCurve growth_curve(std::span<const double> sample, std::span<const std::size_t> checkpoints);

/// first, first+step, ... up to and including `last` when it falls on the grid.
[[nodiscard]] std::vector<std::size_t> checkpoint_grid(std::size_t first, std::size_t last, std::size_t step);

/// Writes `n,g2` followed by one row per checkpoint.
void write_growth_csv(const GrowthCurve& curve, std::ostream& out);

}  // namespace sk
