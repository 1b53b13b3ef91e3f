#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stablekurt/random.hpp"
#include "stablekurt/tail_inference.hpp"

namespace sk {

/// Numbering is part of the seed derivation and must never change.
enum class ExperimentKind : std::uint8_t {
    Scatter = 1,
    GrowthSlopes = 2,
    SlopeVsAlpha = 3,
    VarianceCurve = 4,
    MeanRatio = 5,
    Ordering = 6,
    Skewness = 7,
};

enum class Family { Stable, StudentT, Gaussian };

[[nodiscard]] std::string_view to_string(ExperimentKind kind) noexcept;
[[nodiscard]] std::string_view to_string(Family family) noexcept;
/// Throws ParameterError on an unknown name.
[[nodiscard]] ExperimentKind parse_experiment_kind(std::string_view name);
[[nodiscard]] Family parse_family(std::string_view name);

/// Fixed sample size (lo == hi) or discrete uniform on [lo, hi].
struct SizeSpec {
    std::size_t lo = 500;
    std::size_t hi = 500;

    [[nodiscard]] bool fixed() const noexcept { return lo == hi; }
    static SizeSpec fixed_size(std::size_t n) { return {n, n}; }
    static SizeSpec uniform(std::size_t lo, std::size_t hi) { return {lo, hi}; }
};

/// One Monte Carlo study.
///
/// `params` is the parameter grid of the family: α for stable, ν for Student-t and σ for
/// Gaussian. The scatter kind reads it as the range [α_lo, α_hi] from which each replicate
/// draws α uniformly. The skewness kind crosses `params` with `size_grid`.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::GrowthSlopes;
    Family family = Family::Stable;
    std::vector<double> params;
    std::size_t m = 5000;
    SizeSpec sizes;
    std::vector<std::size_t> checkpoints;
    std::vector<std::size_t> size_grid;
    std::uint64_t master_seed = 0;
    double linearity_threshold = kDefaultLinearityThreshold;
};

/// Paper-scale defaults for each kind (m = 5000, checkpoints 50..500 step 50, ...).
[[nodiscard]] ExperimentConfig default_config(ExperimentKind kind);

/// Throws ParameterError describing the first violated rule.
void validate(const ExperimentConfig& config);

[[nodiscard]] nlohmann::json config_to_json(const ExperimentConfig& config);
/// Missing fields take the defaults of the named kind ("kind" itself is required).
[[nodiscard]] ExperimentConfig config_from_json(const nlohmann::json& json);

/// Maps a replicate to its own stream.
///
/// stream_id = kind << 56 | grid_index << 40 | replicate_index, with the master seed as the
/// generator key. The packing is injective, so distinct replicates never share a stream.
/// Requires grid_index < 2^16 and replicate_index < 2^40 (ParameterError otherwise).
[[nodiscard]] SeedSpec derive_replicate_seed(std::uint64_t master_seed, ExperimentKind kind,
                                             std::size_t grid_index, std::uint64_t replicate_index);

struct ReplicateRow {
    std::size_t grid_index = 0;
    std::uint64_t replicate = 0;
    SeedSpec seed;
    double param = 0.0;
    std::vector<double> values;  ///< laid out as ExperimentReport::value_columns
};

/// Two-column series meant for direct plotting.
struct PlotSeries {
    std::string name;
    std::string x_label;
    std::string y_label;
    std::vector<std::pair<double, double>> points;
};

struct RuntimeInfo {
    unsigned threads = 1;
    double seconds = 0.0;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<std::string> value_columns;
    std::vector<ReplicateRow> rows;
    nlohmann::json summary;
    std::vector<PlotSeries> plots;
    RuntimeInfo runtime;
};

using ProgressCallback = std::function<void(std::size_t done, std::size_t total)>;

/// Runs every replicate of the configured grid and aggregates in replicate order, so the
/// report (runtime aside) is identical for any thread count.
[[nodiscard]] ExperimentReport run_experiment(const ExperimentConfig& config, unsigned threads = 1,
                                              const ProgressCallback& progress = {});

/// Recomputes one replicate's values from its recorded seed.
[[nodiscard]] std::vector<double> recompute_replicate(const ExperimentConfig& config, const ReplicateRow& row);

void write_rows_csv(const ExperimentReport& report, std::ostream& out);
void write_plot_csv(const PlotSeries& series, std::ostream& out);
/// Config echo plus summary; the runtime block is included only on request.
[[nodiscard]] nlohmann::json summary_json(const ExperimentReport& report, bool include_runtime);

}  // namespace sk
