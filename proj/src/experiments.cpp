#include "stablekurt/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <ostream>

#include "stablekurt/distributions.hpp"
#include "stablekurt/errors.hpp"
#include "stablekurt/json_io.hpp"
#include "stablekurt/linear_fit.hpp"
#include "stablekurt/moments.hpp"
#include "stablekurt/parallel.hpp"
#include "stablekurt/text_io.hpp"

namespace sk {

namespace {

constexpr std::uint64_t kMaxGrid = std::uint64_t{1} << 16;
constexpr std::uint64_t kMaxReplicates = std::uint64_t{1} << 40;

struct KindName {
    ExperimentKind kind;
    std::string_view name;
};

constexpr KindName kKindNames[] = {
    {ExperimentKind::Scatter, "scatter"},
    {ExperimentKind::GrowthSlopes, "growth-slopes"},
    {ExperimentKind::SlopeVsAlpha, "slope-vs-alpha"},
    {ExperimentKind::VarianceCurve, "variance-curve"},
    {ExperimentKind::MeanRatio, "mean-ratio"},
    {ExperimentKind::Ordering, "ordering"},
    {ExperimentKind::Skewness, "skewness"},
};

std::vector<double> alpha_grid_1_to_2() {
    std::vector<double> grid;
    for (int i = 10; i <= 20; ++i) grid.push_back(i / 10.0);
    return grid;
}

// Neumaier sum, fed in replicate order.
class OrderedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct MeanVar {
    double mean = 0.0;
    double variance = 0.0;  // n - 1 denominator
};

MeanVar mean_var(const std::vector<double>& xs) {
    OrderedSum total;
    for (double x : xs) total.add(x);
    MeanVar mv;
    mv.mean = total.value() / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        OrderedSum ss;
        for (double x : xs) ss.add((x - mv.mean) * (x - mv.mean));
        mv.variance = ss.value() / static_cast<double>(xs.size() - 1);
    }
    return mv;
}

std::vector<double> draw_sample(Family family, double param, std::size_t n, RandomStream& rng) {
    switch (family) {
        case Family::Stable: return sample_symmetric_stable(StableParams(param), n, rng);
        case Family::StudentT: return sample_student_t(StudentTParams(param), n, rng);
        case Family::Gaussian: return sample_gaussian(param, n, rng);
    }
    throw ParameterError("unknown family");
}

std::size_t draw_size(const SizeSpec& sizes, RandomStream& rng) {
    if (sizes.fixed()) return sizes.lo;
    return static_cast<std::size_t>(rng.between(sizes.lo, sizes.hi));
}

std::size_t grid_size(const ExperimentConfig& config) {
    switch (config.kind) {
        case ExperimentKind::Scatter: return 1;
        case ExperimentKind::Skewness: return config.params.size() * config.size_grid.size();
        default: return config.params.size();
    }
}

double grid_param(const ExperimentConfig& config, std::size_t grid_index) {
    if (config.kind == ExperimentKind::Scatter) return std::nan("");
    if (config.kind == ExperimentKind::Skewness) return config.params[grid_index / config.size_grid.size()];
    return config.params[grid_index];
}

std::vector<std::string> value_columns(const ExperimentConfig& config) {
    switch (config.kind) {
        case ExperimentKind::Scatter: return {"n", "alpha", "g2"};
        case ExperimentKind::GrowthSlopes: {
            std::vector<std::string> cols;
            for (auto k : config.checkpoints) cols.push_back("g2_at_" + std::to_string(k));
            return cols;
        }
        case ExperimentKind::SlopeVsAlpha: return {"slope"};
        case ExperimentKind::VarianceCurve: return {"b2"};
        case ExperimentKind::MeanRatio:
        case ExperimentKind::Ordering: return {"n", "g2", "g2_over_n"};
        case ExperimentKind::Skewness: return {"n", "g1"};
    }
    return {};
}

// The per-replicate computation. Every kind draws from a single stream in a fixed order.
std::vector<double> replicate_values(const ExperimentConfig& config, std::size_t grid_index, SeedSpec seed,
                                     double& param_out) {
    RandomStream rng(seed);
    const double param = grid_param(config, grid_index);
    param_out = param;
    switch (config.kind) {
        case ExperimentKind::Scatter: {
            const double alpha = config.params[0] + (config.params[1] - config.params[0]) * rng.uniform();
            const std::size_t n = draw_size(config.sizes, rng);
            const auto sample = sample_symmetric_stable(StableParams(alpha), n, rng);
            param_out = alpha;
            return {static_cast<double>(n), alpha, excess_kurtosis(sample)};
        }
        case ExperimentKind::GrowthSlopes: {
            const auto sample = draw_sample(config.family, param, config.sizes.lo, rng);
            return growth_curve(sample, config.checkpoints).g2_values;
        }
        case ExperimentKind::SlopeVsAlpha: {
            const auto sample = draw_sample(config.family, param, config.sizes.lo, rng);
            return {fit_growth_slope(growth_curve(sample, config.checkpoints)).slope};
        }
        case ExperimentKind::VarianceCurve: {
            const auto sample = draw_sample(config.family, param, config.sizes.lo, rng);
            return {compute_stats(sample).b2};
        }
        case ExperimentKind::MeanRatio:
        case ExperimentKind::Ordering: {
            const std::size_t n = draw_size(config.sizes, rng);
            const auto st = compute_stats(draw_sample(config.family, param, n, rng));
            return {static_cast<double>(n), st.g2, st.g2 / static_cast<double>(n)};
        }
        case ExperimentKind::Skewness: {
            const std::size_t n = config.size_grid[grid_index % config.size_grid.size()];
            const auto sample = draw_sample(config.family, param, n, rng);
            return {static_cast<double>(n), skewness(sample)};
        }
    }
    throw ParameterError("unknown experiment kind");
}

std::string param_tag(const ExperimentConfig& config, double param) {
    const char* symbol = config.family == Family::Stable ? "alpha" : config.family == Family::StudentT ? "nu" : "sigma";
    return std::string(symbol) + "_" + format_double(param);
}

// Column j of the rows belonging to one grid point.
std::vector<double> column(const ExperimentReport& report, std::size_t grid_index, std::size_t j) {
    std::vector<double> out;
    out.reserve(report.config.m);
    for (const auto& row : report.rows) {
        if (row.grid_index == grid_index) out.push_back(row.values[j]);
    }
    return out;
}

void summarize_scatter(ExperimentReport& report) {
    const auto ns = column(report, 0, 0);
    const auto alphas = column(report, 0, 1);
    const auto g2 = column(report, 0, 2);
    std::vector<double> n_alpha(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) n_alpha[i] = ns[i] * alphas[i];

    const std::vector<std::vector<double>> design{ns, n_alpha};
    const auto fit = fit_linear_model(design, g2);
    nlohmann::json summary;
    summary["regression"] = {{"model", "g2 = coef_n * n + coef_n_alpha * n * alpha"},
                             {"coef_n", fit.coefficients[0]},
                             {"coef_n_alpha", fit.coefficients[1]}};
    if (ns.size() >= 4) {
        const std::vector<std::vector<double>> with_const{std::vector<double>(ns.size(), 1.0), ns, n_alpha};
        const auto alt = fit_linear_model(with_const, g2);
        summary["regression_with_intercept"] = {{"model", "g2 = intercept + coef_n * n + coef_n_alpha * n * alpha"},
                                                {"intercept", alt.coefficients[0]},
                                                {"coef_n", alt.coefficients[1]},
                                                {"coef_n_alpha", alt.coefficients[2]}};
    }
    report.summary = std::move(summary);

    PlotSeries plot{"scatter", "n", "g2", {}};
    for (std::size_t i = 0; i < ns.size(); ++i) plot.points.emplace_back(ns[i], g2[i]);
    report.plots.push_back(std::move(plot));
}

void summarize_growth(ExperimentReport& report) {
    const auto& config = report.config;
    nlohmann::json curves = nlohmann::json::array();
    for (std::size_t g = 0; g < config.params.size(); ++g) {
        GrowthCurve mean_curve;
        mean_curve.checkpoints = config.checkpoints;
        for (std::size_t j = 0; j < config.checkpoints.size(); ++j) {
            mean_curve.g2_values.push_back(mean_var(column(report, g, j)).mean);
        }
        const auto fit = fit_growth_slope(mean_curve);
        nlohmann::json entry{{"param", config.params[g]},
                             {"checkpoints", mean_curve.checkpoints},
                             {"mean_g2", mean_curve.g2_values},
                             {"slope_fit", fit}};
        if (mean_curve.checkpoints.size() >= 5) {
            entry["linearity"] = linearity_diagnostic(mean_curve, config.linearity_threshold);
        } else {
            entry["linearity"] = nullptr;
        }
        curves.push_back(std::move(entry));

        PlotSeries plot{"growth_" + param_tag(config, config.params[g]), "n", "mean_g2", {}};
        for (std::size_t j = 0; j < mean_curve.checkpoints.size(); ++j) {
            plot.points.emplace_back(static_cast<double>(mean_curve.checkpoints[j]), mean_curve.g2_values[j]);
        }
        report.plots.push_back(std::move(plot));
    }
    report.summary = {{"curves", std::move(curves)}};
}

void summarize_slope_vs_alpha(ExperimentReport& report) {
    const auto& config = report.config;
    nlohmann::json points = nlohmann::json::array();
    std::vector<std::pair<double, double>> pairs;
    PlotSeries plot{"slope_vs_two_minus_alpha", "two_minus_alpha", "mean_slope", {}};
    for (std::size_t g = 0; g < config.params.size(); ++g) {
        const auto mv = mean_var(column(report, g, 0));
        pairs.emplace_back(config.params[g], mv.mean);
        points.push_back({{"alpha", config.params[g]}, {"mean_slope", mv.mean}, {"sd_slope", std::sqrt(mv.variance)}});
        plot.points.emplace_back(2.0 - config.params[g], mv.mean);
    }
    report.summary = {{"points", std::move(points)},
                      {"coefficient", slope_vs_alpha_regression(pairs)},
                      {"model", "mean_slope = coefficient * (2 - alpha)"}};
    report.plots.push_back(std::move(plot));
}

void summarize_variance(ExperimentReport& report) {
    const auto& config = report.config;
    const auto n = static_cast<double>(config.sizes.lo);
    nlohmann::json points = nlohmann::json::array();
    PlotSeries plot{"variance_b2_over_n2", "param", "var_b2_over_n2", {}};
    for (std::size_t g = 0; g < config.params.size(); ++g) {
        const auto mv = mean_var(column(report, g, 0));
        const double scaled = mv.variance / (n * n);
        points.push_back({{"param", config.params[g]},
                          {"n", config.sizes.lo},
                          {"mean_b2", mv.mean},
                          {"var_b2", mv.variance},
                          {"var_b2_over_n2", scaled}});
        plot.points.emplace_back(config.params[g], scaled);
    }
    report.summary = {{"points", std::move(points)}};
    report.plots.push_back(std::move(plot));
}

void summarize_mean_ratio(ExperimentReport& report) {
    const auto& config = report.config;
    nlohmann::json points = nlohmann::json::array();
    PlotSeries plot{"mean_ratio", "param", "mean_g2_over_n", {}};
    for (std::size_t g = 0; g < config.params.size(); ++g) {
        const auto mv = mean_var(column(report, g, 2));
        nlohmann::json point{{"param", config.params[g]},
                             {"mean_g2_over_n", mv.mean},
                             {"standard_error", std::sqrt(mv.variance / static_cast<double>(config.m))}};
        if (config.family == Family::Stable) {
            const double target = 1.0 - config.params[g] / 2.0;
            point["target"] = target;
            point["deviation"] = mv.mean - target;
        }
        points.push_back(std::move(point));
        plot.points.emplace_back(config.params[g], mv.mean);
    }
    report.summary = {{"points", std::move(points)}};
    report.plots.push_back(std::move(plot));
}

void summarize_ordering(ExperimentReport& report) {
    const auto& config = report.config;
    // Grid point 0 is treated as the heavier-tailed one when the parameters tie.
    const std::size_t heavy = config.params[1] < config.params[0] ? 1 : 0;
    const std::size_t light = 1 - heavy;
    const auto g2_heavy = column(report, heavy, 1);
    const auto g2_light = column(report, light, 1);
    const auto ratio_heavy = column(report, heavy, 2);
    const auto ratio_light = column(report, light, 2);
    std::size_t raw_correct = 0, ratio_correct = 0;
    for (std::size_t i = 0; i < g2_heavy.size(); ++i) {
        raw_correct += g2_heavy[i] > g2_light[i] ? 1 : 0;
        ratio_correct += ratio_heavy[i] > ratio_light[i] ? 1 : 0;
    }
    const auto pairs = static_cast<double>(g2_heavy.size());
    report.summary = {{"heavier_param", config.params[heavy]},
                      {"lighter_param", config.params[light]},
                      {"pairs", g2_heavy.size()},
                      {"fraction_raw", static_cast<double>(raw_correct) / pairs},
                      {"fraction_ratio", static_cast<double>(ratio_correct) / pairs}};
}

void summarize_skewness(ExperimentReport& report) {
    const auto& config = report.config;
    nlohmann::json points = nlohmann::json::array();
    for (std::size_t a = 0; a < config.params.size(); ++a) {
        PlotSeries plot{"skewness_variance_" + param_tag(config, config.params[a]), "n", "var_g1", {}};
        for (std::size_t s = 0; s < config.size_grid.size(); ++s) {
            const std::size_t g = a * config.size_grid.size() + s;
            const auto mv = mean_var(column(report, g, 1));
            points.push_back({{"param", config.params[a]},
                              {"n", config.size_grid[s]},
                              {"mean_g1", mv.mean},
                              {"var_g1", mv.variance},
                              {"standard_error", std::sqrt(mv.variance / static_cast<double>(config.m))}});
            plot.points.emplace_back(static_cast<double>(config.size_grid[s]), mv.variance);
        }
        report.plots.push_back(std::move(plot));
    }
    report.summary = {{"points", std::move(points)}};
}

[[noreturn]] void rethrow_with_provenance(const Error& e, const std::string& where) {
    const std::string what = std::string(e.what()) + where;
    if (dynamic_cast<const DegenerateSampleError*>(&e)) throw DegenerateSampleError(what);
    if (dynamic_cast<const InsufficientDataError*>(&e)) throw InsufficientDataError(what);
    if (dynamic_cast<const NumericDomainError*>(&e)) throw NumericDomainError(what);
    if (dynamic_cast<const ParameterError*>(&e)) throw ParameterError(what);
    throw Error(what);
}

void check_checkpoints(const ExperimentConfig& config, std::size_t minimum) {
    if (config.checkpoints.size() < minimum) {
        throw ParameterError(std::string(to_string(config.kind)) + " needs at least " + std::to_string(minimum) +
                             " checkpoints");
    }
    if (config.checkpoints.front() < kMinKurtosisSize) throw ParameterError("first checkpoint must be at least 4");
    for (std::size_t i = 1; i < config.checkpoints.size(); ++i) {
        if (config.checkpoints[i] <= config.checkpoints[i - 1]) {
            throw ParameterError("checkpoints must be strictly increasing");
        }
    }
    if (!config.sizes.fixed()) throw ParameterError("growth experiments need a fixed sample size");
    if (config.checkpoints.back() > config.sizes.lo) {
        throw ParameterError("last checkpoint exceeds the sample size");
    }
}

}  // namespace

std::string_view to_string(ExperimentKind kind) noexcept {
    for (const auto& entry : kKindNames) {
        if (entry.kind == kind) return entry.name;
    }
    return "unknown";
}

std::string_view to_string(Family family) noexcept {
    switch (family) {
        case Family::Stable: return "stable";
        case Family::StudentT: return "student-t";
        case Family::Gaussian: return "gaussian";
    }
    return "unknown";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
    for (const auto& entry : kKindNames) {
        if (entry.name == name) return entry.kind;
    }
    throw ParameterError("unknown experiment kind '" + std::string(name) + "'");
}

Family parse_family(std::string_view name) {
    if (name == "stable") return Family::Stable;
    if (name == "student-t" || name == "t") return Family::StudentT;
    if (name == "gaussian" || name == "normal") return Family::Gaussian;
    throw ParameterError("unknown family '" + std::string(name) + "'");
}

ExperimentConfig default_config(ExperimentKind kind) {
    ExperimentConfig config;
    config.kind = kind;
    config.family = Family::Stable;
    config.m = 5000;
    switch (kind) {
        case ExperimentKind::Scatter:
            config.params = {1.0, 2.0};
            config.m = 500;
            config.sizes = SizeSpec::uniform(200, 1500);
            break;
        case ExperimentKind::GrowthSlopes:
            config.params = {1.0, 1.5, 2.0};
            config.sizes = SizeSpec::fixed_size(500);
            config.checkpoints = checkpoint_grid(50, 500, 50);
            break;
        case ExperimentKind::SlopeVsAlpha:
            config.params = alpha_grid_1_to_2();
            config.sizes = SizeSpec::fixed_size(250);
            config.checkpoints = checkpoint_grid(25, 250, 25);
            break;
        case ExperimentKind::VarianceCurve:
            config.params = alpha_grid_1_to_2();
            config.sizes = SizeSpec::fixed_size(500);
            break;
        case ExperimentKind::MeanRatio:
            config.params = {1.25, 1.5, 1.75};
            config.sizes = SizeSpec::uniform(200, 1500);
            break;
        case ExperimentKind::Ordering:
            config.params = {1.25, 1.75};
            config.sizes = SizeSpec::uniform(200, 1500);
            break;
        case ExperimentKind::Skewness:
            config.params = {1.5};
            config.size_grid = {100, 500};
            break;
    }
    return config;
}

void validate(const ExperimentConfig& config) {
    if (config.m < 1) throw ParameterError("replicate count m must be at least 1");
    if (config.m >= kMaxReplicates) throw ParameterError("replicate count m is too large");
    if (config.kind != ExperimentKind::Skewness) {
        if (config.sizes.lo < kMinKurtosisSize) throw ParameterError("sample sizes must be at least 4");
        if (config.sizes.hi < config.sizes.lo) throw ParameterError("size range has hi < lo");
    }
    if (config.params.empty()) throw ParameterError("parameter grid is empty");
    for (double p : config.params) {
        switch (config.family) {
            case Family::Stable:
                if (!(p > 0.0 && p <= 2.0)) throw ParameterError("stable alphas must lie in (0, 2]");
                break;
            case Family::StudentT:
            case Family::Gaussian:
                if (!(p > 0.0) || !std::isfinite(p)) throw ParameterError("family parameters must be positive");
                break;
        }
    }
    if (!(config.linearity_threshold > 0.0)) throw ParameterError("linearity threshold must be positive");

    switch (config.kind) {
        case ExperimentKind::Scatter:
            if (config.family != Family::Stable) throw ParameterError("scatter needs the stable family");
            if (config.params.size() != 2 || config.params[0] > config.params[1]) {
                throw ParameterError("scatter needs an alpha range [lo, hi]");
            }
            break;
        case ExperimentKind::GrowthSlopes: check_checkpoints(config, 3); break;
        case ExperimentKind::SlopeVsAlpha:
            if (config.family != Family::Stable) throw ParameterError("slope-vs-alpha needs the stable family");
            check_checkpoints(config, 3);
            if (std::all_of(config.params.begin(), config.params.end(), [](double a) { return a == 2.0; })) {
                throw ParameterError("slope-vs-alpha needs at least one alpha below 2");
            }
            break;
        case ExperimentKind::VarianceCurve:
            if (!config.sizes.fixed()) throw ParameterError("variance-curve needs a fixed sample size");
            break;
        case ExperimentKind::MeanRatio: break;
        case ExperimentKind::Ordering:
            if (config.params.size() != 2) throw ParameterError("ordering needs exactly two parameters");
            break;
        case ExperimentKind::Skewness:
            if (config.size_grid.empty()) throw ParameterError("skewness needs a size grid");
            for (auto n : config.size_grid) {
                if (n < kMinKurtosisSize) throw ParameterError("skewness sizes must be at least 4");
            }
            break;
    }
    if (grid_size(config) >= kMaxGrid) throw ParameterError("parameter grid is too large");
}

SeedSpec derive_replicate_seed(std::uint64_t master_seed, ExperimentKind kind, std::size_t grid_index,
                               std::uint64_t replicate_index) {
    if (grid_index >= kMaxGrid) throw ParameterError("grid index out of range");
    if (replicate_index >= kMaxReplicates) throw ParameterError("replicate index out of range");
    const std::uint64_t stream = (static_cast<std::uint64_t>(kind) << 56) |
                                 (static_cast<std::uint64_t>(grid_index) << 40) | replicate_index;
    return {master_seed, stream};
}

ExperimentReport run_experiment(const ExperimentConfig& config, unsigned threads, const ProgressCallback& progress) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();

    ExperimentReport report;
    report.config = config;
    report.value_columns = value_columns(config);

    const std::size_t grid = grid_size(config);
    const std::size_t total = grid * config.m;
    report.rows.resize(total);
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;

    parallel_for(total, threads, [&](std::size_t task) {
        const std::size_t g = task / config.m;
        const std::uint64_t r = task % config.m;
        auto& row = report.rows[task];
        row.grid_index = g;
        row.replicate = r;
        row.seed = derive_replicate_seed(config.master_seed, config.kind, g, r);
        try {
            row.values = replicate_values(config, g, row.seed, row.param);
        } catch (const Error& e) {
            rethrow_with_provenance(e, " [grid " + std::to_string(g) + ", replicate " + std::to_string(r) +
                                           ", stream " + std::to_string(row.seed.stream_id) + "]");
        }
        if (progress) {
            const std::size_t now = done.fetch_add(1) + 1;
            if (now % 1000 == 0 || now == total) {
                std::lock_guard lock(progress_mutex);
                progress(now, total);
            }
        }
    });

    switch (config.kind) {
        case ExperimentKind::Scatter: summarize_scatter(report); break;
        case ExperimentKind::GrowthSlopes: summarize_growth(report); break;
        case ExperimentKind::SlopeVsAlpha: summarize_slope_vs_alpha(report); break;
        case ExperimentKind::VarianceCurve: summarize_variance(report); break;
        case ExperimentKind::MeanRatio: summarize_mean_ratio(report); break;
        case ExperimentKind::Ordering: summarize_ordering(report); break;
        case ExperimentKind::Skewness: summarize_skewness(report); break;
    }

    report.runtime.threads = threads == 0 ? default_thread_count() : threads;
    report.runtime.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<double> recompute_replicate(const ExperimentConfig& config, const ReplicateRow& row) {
    validate(config);
    double param = 0.0;
    return replicate_values(config, row.grid_index, row.seed, param);
}

void write_rows_csv(const ExperimentReport& report, std::ostream& out) {
    out << "grid_index,replicate,master_seed,stream_id,param";
    for (const auto& name : report.value_columns) out << ',' << name;
    out << '\n';
    for (const auto& row : report.rows) {
        out << row.grid_index << ',' << row.replicate << ',' << row.seed.master_seed << ',' << row.seed.stream_id << ','
            << format_double(row.param);
        for (double v : row.values) out << ',' << format_double(v);
        out << '\n';
    }
}

void write_plot_csv(const PlotSeries& series, std::ostream& out) {
    out << series.x_label << ',' << series.y_label << '\n';
    for (const auto& [x, y] : series.points) out << format_double(x) << ',' << format_double(y) << '\n';
}

nlohmann::json config_to_json(const ExperimentConfig& config) {
    return {{"kind", to_string(config.kind)},
            {"family", to_string(config.family)},
            {"params", config.params},
            {"m", config.m},
            {"sizes", {{"lo", config.sizes.lo}, {"hi", config.sizes.hi}}},
            {"checkpoints", config.checkpoints},
            {"size_grid", config.size_grid},
            {"master_seed", config.master_seed},
            {"linearity_threshold", config.linearity_threshold}};
}

ExperimentConfig config_from_json(const nlohmann::json& json) {
    try {
        auto config = default_config(parse_experiment_kind(json.at("kind").get<std::string>()));
        if (json.contains("family")) config.family = parse_family(json["family"].get<std::string>());
        if (json.contains("params")) config.params = json["params"].get<std::vector<double>>();
        if (json.contains("m")) config.m = json["m"].get<std::size_t>();
        if (json.contains("sizes")) {
            const auto& sizes = json["sizes"];
            if (sizes.is_number_unsigned()) {
                config.sizes = SizeSpec::fixed_size(sizes.get<std::size_t>());
            } else {
                config.sizes.lo = sizes.at("lo").get<std::size_t>();
                config.sizes.hi = sizes.value("hi", config.sizes.lo);
            }
        }
        if (json.contains("checkpoints")) config.checkpoints = json["checkpoints"].get<std::vector<std::size_t>>();
        if (json.contains("size_grid")) config.size_grid = json["size_grid"].get<std::vector<std::size_t>>();
        if (json.contains("master_seed")) config.master_seed = json["master_seed"].get<std::uint64_t>();
        if (json.contains("linearity_threshold")) config.linearity_threshold = json["linearity_threshold"].get<double>();
        return config;
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("invalid experiment config: ") + e.what());
    }
}

nlohmann::json summary_json(const ExperimentReport& report, bool include_runtime) {
    nlohmann::json out{{"config", config_to_json(report.config)},
                       {"replicates", report.rows.size()},
                       {"summary", report.summary}};
    if (include_runtime) {
        out["runtime"] = {{"threads", report.runtime.threads}, {"seconds", report.runtime.seconds}};
    }
    return out;
}

}  // namespace sk
