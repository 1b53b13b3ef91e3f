#include "stablekurt/moments.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "stablekurt/errors.hpp"
#include "stablekurt/text_io.hpp"

namespace sk {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

void require_size(std::size_t n) {
    if (n < kMinKurtosisSize) {
        throw InsufficientDataError("kurtosis needs at least 4 observations, got " + std::to_string(n));
    }
}

// Builds the summary from sums of centred powers S_k = Σ(x - mean)^k.
SampleStats finish(std::size_t n, double mean, double s2, double s3, double s4) {
    const auto count = static_cast<double>(n);
    SampleStats st;
    st.n = n;
    st.mean = mean;
    st.m2 = s2 / count;
    st.m3 = s3 / count;
    st.m4 = s4 / count;
    // Rounding cannot be allowed to push b2 across its algebraic bounds.
    st.b2 = std::clamp(count * s4 / (s2 * s2), 1.0, count);
    st.g2 = st.b2 - 3.0;
    st.g1 = st.m3 / std::pow(st.m2, 1.5);
    st.c = st.b2 / count;
    return st;
}

}  // namespace

SampleStats compute_stats(std::span<const double> sample) {
    require_size(sample.size());
    const auto [lo, hi] = std::minmax_element(sample.begin(), sample.end());
    if (*lo == *hi) throw DegenerateSampleError("sample has zero variance");

    CompensatedSum total;
    for (double x : sample) total.add(x);
    const double mean = total.value() / static_cast<double>(sample.size());

    CompensatedSum s2, s3, s4;
    for (double x : sample) {
        const double d = x - mean;
        const double d2 = d * d;
        s2.add(d2);
        s3.add(d2 * d);
        s4.add(d2 * d2);
    }
    return finish(sample.size(), mean, s2.value(), s3.value(), s4.value());
}

double excess_kurtosis(std::span<const double> sample) { return compute_stats(sample).g2; }

double kurtosis_ratio(std::span<const double> sample) { return compute_stats(sample).c; }

double skewness(std::span<const double> sample) { return compute_stats(sample).g1; }

void MomentAccumulator::push(double x) noexcept {
    if (n_ == 0) {
        min_ = max_ = x;
    } else {
        min_ = std::min(min_, x);
        max_ = std::max(max_, x);
    }
    const double n1 = static_cast<double>(n_);
    ++n_;
    const double n = static_cast<double>(n_);
    const double delta = x - mean_;
    const double delta_n = delta / n;
    const double delta_n2 = delta_n * delta_n;
    const double term1 = delta * delta_n * n1;
    mean_ += delta_n;
    sum4_ += term1 * delta_n2 * (n * n - 3.0 * n + 3.0) + 6.0 * delta_n2 * sum2_ - 4.0 * delta_n * sum3_;
    sum3_ += term1 * delta_n * (n - 2.0) - 3.0 * delta_n * sum2_;
    sum2_ += term1;
}

SampleStats MomentAccumulator::stats() const {
    require_size(n_);
    if (min_ == max_) throw DegenerateSampleError("sample has zero variance");
    return finish(n_, mean_, sum2_, sum3_, sum4_);
}

GrowthCurve growth_curve(std::span<const double> sample, std::span<const std::size_t> checkpoints) {
    if (checkpoints.empty()) throw ParameterError("growth curve needs at least one checkpoint");
    if (checkpoints.front() < kMinKurtosisSize) {
        throw ParameterError("first checkpoint must be at least 4, got " + std::to_string(checkpoints.front()));
    }
    if (checkpoints.back() > sample.size()) {
        throw ParameterError("checkpoint " + std::to_string(checkpoints.back()) + " exceeds sample size " +
                             std::to_string(sample.size()));
    }
    for (std::size_t i = 1; i < checkpoints.size(); ++i) {
        if (checkpoints[i] <= checkpoints[i - 1]) {
            throw ParameterError("checkpoints must be strictly increasing (position " + std::to_string(i) + ")");
        }
    }

    GrowthCurve curve;
    curve.checkpoints.assign(checkpoints.begin(), checkpoints.end());
    curve.g2_values.reserve(checkpoints.size());

    MomentAccumulator acc;
    std::size_t consumed = 0;
    for (std::size_t k : checkpoints) {
        while (consumed < k) acc.push(sample[consumed++]);
        try {
            curve.g2_values.push_back(acc.stats().g2);
        } catch (const DegenerateSampleError&) {
            throw DegenerateSampleError("prefix has zero variance", k);
        }
    }
    return curve;
}

std::vector<std::size_t> checkpoint_grid(std::size_t first, std::size_t last, std::size_t step) {
    if (step == 0) throw ParameterError("checkpoint step must be positive");
    std::vector<std::size_t> grid;
    for (std::size_t k = first; k <= last; k += step) grid.push_back(k);
    return grid;
}

void write_growth_csv(const GrowthCurve& curve, std::ostream& out) {
    out << "n,g2\n";
    for (std::size_t i = 0; i < curve.checkpoints.size(); ++i) {
        out << curve.checkpoints[i] << ',' << format_double(curve.g2_values[i]) << '\n';
    }
}

}  // namespace sk
