#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stablekurt/distributions.hpp"
#include "stablekurt/errors.hpp"
#include "stablekurt/experiments.hpp"
#include "stablekurt/json_io.hpp"
#include "stablekurt/moments.hpp"
#include "stablekurt/returns.hpp"
#include "stablekurt/tail_inference.hpp"
#include "stablekurt/text_io.hpp"

namespace sk::cli {

namespace {

using nlohmann::json;

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

// Writes to `path`, or to stdout when the path is empty or "-".
void emit(const std::string& text, const std::string& path, Io& io) {
    if (path.empty() || path == "-") {
        io.out << text;
        io.out.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IngestError("cannot write '" + path + "'");
    file << text;
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

// Config header line for CSV outputs.
std::string csv_header(const json& config) { return "# " + config.dump() + "\n"; }

std::vector<double> read_sample(const std::string& path, Io& io) {
    if (path.empty() || path == "-") return read_sample_csv(io.in);
    std::ifstream file(path);
    if (!file) throw IngestError("cannot open '" + path + "'");
    return read_sample_csv(file);
}

std::size_t parse_count(std::string_view text, std::string_view what) {
    const auto value = parse_double(text);
    if (!value || *value < 0 || *value != static_cast<double>(static_cast<std::size_t>(*value))) {
        throw ParameterError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return static_cast<std::size_t>(*value);
}

// "lo:hi:step" or a comma-separated list.
std::vector<std::size_t> parse_checkpoints(const std::string& text) {
    if (text.find(':') != std::string::npos) {
        std::vector<std::size_t> parts;
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ':')) parts.push_back(parse_count(part, "checkpoint range"));
        if (parts.size() != 3) throw ParameterError("checkpoint range must be first:last:step");
        return checkpoint_grid(parts[0], parts[1], parts[2]);
    }
    std::vector<std::size_t> out;
    for (const auto& field : split_csv_line(text)) out.push_back(parse_count(field, "checkpoint"));
    return out;
}

std::vector<double> parse_reals(const std::string& text) {
    std::vector<double> out;
    for (const auto& field : split_csv_line(text)) {
        const auto value = parse_double(field);
        if (!value) throw ParameterError("invalid number '" + field + "'");
        out.push_back(*value);
    }
    return out;
}

// "start:end,start:end" half-open return indices.
std::vector<Window> parse_windows(const std::string& text) {
    std::vector<Window> out;
    if (trim(text).empty()) return out;
    for (const auto& field : split_csv_line(text)) {
        const auto colon = field.find(':');
        if (colon == std::string::npos) throw ParameterError("window must be start:end, got '" + field + "'");
        out.push_back({parse_count(field.substr(0, colon), "window start"),
                       parse_count(field.substr(colon + 1), "window end")});
    }
    return out;
}

json curve_diagnostics(const GrowthCurve& curve, double threshold) {
    json j{{"curve", curve}};
    if (curve.checkpoints.size() >= 3) {
        const auto fit = fit_growth_slope(curve);
        j["slope_fit"] = fit;
        j["alpha_from_slope"] = alpha_from_growth_slope(fit.slope, curve.checkpoints.back());
    } else {
        j["slope_fit"] = nullptr;
        j["alpha_from_slope"] = nullptr;
    }
    j["linearity"] = curve.checkpoints.size() >= 5 ? json(linearity_diagnostic(curve, threshold)) : json(nullptr);
    return j;
}

struct SimulateArgs {
    std::string dist = "stable";
    double alpha = 2.0;
    double nu = 0.0;
    double sigma = 1.0;
    double mu = 0.0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::string out;
};

void run_simulate(const SimulateArgs& a, Io& io) {
    const SeedSpec seed{a.seed, a.stream};
    json config{{"command", "simulate"}, {"dist", a.dist}, {"n", a.n}, {"seed", a.seed}, {"stream", a.stream}};
    std::vector<double> sample;
    if (a.dist == "stable") {
        sample = sample_symmetric_stable(StableParams(a.alpha, a.sigma, a.mu), a.n, seed);
        config["alpha"] = a.alpha;
        config["sigma"] = a.sigma;
        config["mu"] = a.mu;
    } else if (a.dist == "t") {
        sample = sample_student_t(StudentTParams(a.nu), a.n, seed);
        config["nu"] = a.nu;
    } else {
        sample = sample_gaussian(a.sigma, a.n, seed);
        config["sigma"] = a.sigma;
    }
    std::ostringstream text;
    text << csv_header(config);
    write_sample_csv(sample, text);
    emit(text.str(), a.out, io);
}

struct SampleArgs {
    std::string input = "-";
    std::string out;
    std::string method = "kurtosis";
    std::string checkpoints;
    std::string fit_out;
    double threshold = kDefaultLinearityThreshold;
    std::size_t resamples = 1000;
    double level = 0.05;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    unsigned threads = 1;
};

void run_stats(const SampleArgs& a, Io& io) {
    const auto sample = read_sample(a.input, io);
    const json report{{"config", {{"command", "stats"}, {"input", a.input}}}, {"stats", compute_stats(sample)}};
    emit(json_text(report), a.out, io);
}

void run_estimate(const SampleArgs& a, Io& io) {
    const auto sample = read_sample(a.input, io);
    AlphaEstimate est;
    if (a.method == "kw") {
        est = kogon_williams(sample);
    } else {
        est = alpha_from_kurtosis(compute_stats(sample).g2, sample.size());
    }
    const json report{{"config", {{"command", "estimate"}, {"input", a.input}, {"method", a.method}}},
                      {"estimate", est}};
    emit(json_text(report), a.out, io);
}

void run_growth(const SampleArgs& a, Io& io) {
    const auto sample = read_sample(a.input, io);
    const auto checkpoints = parse_checkpoints(a.checkpoints);
    const auto curve = growth_curve(sample, checkpoints);
    const json config{{"command", "growth"},
                      {"input", a.input},
                      {"checkpoints", checkpoints},
                      {"threshold", a.threshold}};
    std::ostringstream csv;
    csv << csv_header(config);
    write_growth_csv(curve, csv);
    emit(csv.str(), a.out, io);
    if (!a.fit_out.empty()) {
        auto report = curve_diagnostics(curve, a.threshold);
        report["config"] = config;
        emit(json_text(report), a.fit_out, io);
    }
}

void run_test(const SampleArgs& a, Io& io) {
    const auto sample = read_sample(a.input, io);
    BootstrapOptions options;
    options.resamples = a.resamples;
    options.level = a.level;
    options.seed = {a.seed, a.stream};
    options.threads = a.threads;
    const auto result = bootstrap_alpha_test(sample, options);
    const json report{{"config",
                       {{"command", "test"},
                        {"input", a.input},
                        {"B", a.resamples},
                        {"level", a.level},
                        {"seed", a.seed},
                        {"stream", a.stream}}},
                      {"result", result}};
    emit(json_text(report), a.out, io);
}

struct ExperimentArgs {
    std::string kind;
    std::string config_path;
    std::string family;
    std::string params;
    std::optional<std::size_t> m;
    std::optional<std::size_t> n;
    std::string size_range;
    std::string checkpoints;
    std::string size_grid;
    std::optional<std::uint64_t> seed;
    std::optional<double> threshold;
    unsigned threads = 1;
    std::string out_dir;
    bool quiet = false;
};

ExperimentConfig resolve_experiment(const ExperimentArgs& a) {
    std::optional<ExperimentConfig> config;
    if (!a.config_path.empty()) {
        std::ifstream file(a.config_path);
        if (!file) throw IngestError("cannot open '" + a.config_path + "'");
        json j;
        try {
            j = json::parse(file);
        } catch (const json::exception& e) {
            throw IngestError("invalid JSON in '" + a.config_path + "': " + e.what());
        }
        // A summary.json written by this tool embeds its config.
        if (j.contains("config")) j = j["config"];
        if (!a.kind.empty()) j["kind"] = a.kind;
        config = config_from_json(j);
    } else {
        if (a.kind.empty()) throw ParameterError("--kind is required without --config");
        config = default_config(parse_experiment_kind(a.kind));
    }
    auto& c = *config;
    if (!a.family.empty()) {
        c.family = parse_family(a.family);
        if (a.params.empty() && c.family != Family::Stable) {
            c.params = c.family == Family::StudentT ? std::vector<double>{3, 4, 5} : std::vector<double>{1};
        }
    }
    if (!a.params.empty()) c.params = parse_reals(a.params);
    if (a.m) c.m = *a.m;
    if (!a.checkpoints.empty()) {
        c.checkpoints = parse_checkpoints(a.checkpoints);
        if (!a.n && !c.checkpoints.empty()) c.sizes = SizeSpec::fixed_size(c.checkpoints.back());
    }
    if (a.n) c.sizes = SizeSpec::fixed_size(*a.n);
    if (!a.size_range.empty()) {
        const auto colon = a.size_range.find(':');
        if (colon == std::string::npos) throw ParameterError("--size-range must be lo:hi");
        c.sizes = SizeSpec::uniform(parse_count(a.size_range.substr(0, colon), "size"),
                                    parse_count(a.size_range.substr(colon + 1), "size"));
    }
    if (!a.size_grid.empty()) c.size_grid = parse_checkpoints(a.size_grid);
    if (a.seed) c.master_seed = *a.seed;
    if (a.threshold) c.linearity_threshold = *a.threshold;
    if (!a.seed && a.config_path.empty()) throw ParameterError("--seed is required (seeds must be explicit)");
    return c;
}

void run_experiment_command(const ExperimentArgs& a, Io& io) {
    const auto config = resolve_experiment(a);
    ProgressCallback progress;
    if (!a.quiet) {
        progress = [&io](std::size_t done, std::size_t total) {
            io.err << "\rreplicates " << done << '/' << total << (done == total ? "\n" : "") << std::flush;
        };
    }
    const auto report = run_experiment(config, a.threads, progress);
    const auto summary = summary_json(report, false);

    if (a.out_dir.empty()) {
        emit(json_text(summary), "", io);
        return;
    }
    const std::filesystem::path dir(a.out_dir);
    std::filesystem::create_directories(dir / "plots");
    std::ostringstream rows;
    rows << csv_header(config_to_json(config));
    write_rows_csv(report, rows);
    emit(rows.str(), (dir / "rows.csv").string(), io);
    emit(json_text(summary), (dir / "summary.json").string(), io);
    emit(json_text({{"threads", report.runtime.threads}, {"seconds", report.runtime.seconds}}),
         (dir / "runtime.json").string(), io);
    for (const auto& plot : report.plots) {
        std::ostringstream text;
        text << csv_header(config_to_json(config));
        write_plot_csv(plot, text);
        emit(text.str(), (dir / "plots" / (plot.name + ".csv")).string(), io);
    }
}

struct IngestArgs {
    std::string input;
    std::string date_col = "date";
    std::string close_col = "close";
    std::string windows;
    std::size_t step = kDefaultRollingStep;
    double threshold = kDefaultLinearityThreshold;
    std::string out;
    std::string growth_out;
};

void run_ingest(const IngestArgs& a, Io& io) {
    const auto prices = load_price_csv(a.input, {a.date_col, a.close_col});
    for (const auto& warning : prices.warnings) io.err << "warning: " << warning << '\n';
    const auto returns = log_returns(prices);
    const auto curve = rolling_kurtosis(returns, a.step);
    const auto windows = window_estimates(returns, parse_windows(a.windows));

    const json config{{"command", "ingest"},     {"input", a.input}, {"date_col", a.date_col},
                      {"close_col", a.close_col}, {"step", a.step},   {"windows", a.windows},
                      {"threshold", a.threshold}};
    json report{{"config", config},
                {"source", prices.source},
                {"warnings", prices.warnings},
                {"prices", prices.observations.size()},
                {"returns", returns.returns.size()},
                {"first_date", format_date(prices.observations.front().date)},
                {"last_date", format_date(prices.observations.back().date)},
                {"growth", curve_diagnostics(curve, a.threshold)},
                {"windows", windows}};
    emit(json_text(report), a.out, io);
    if (!a.growth_out.empty()) {
        std::ostringstream csv;
        csv << csv_header(config);
        write_growth_csv(curve, csv);
        emit(csv.str(), a.growth_out, io);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Io io{in, out, err};
    CLI::App app{"Sample kurtosis and tail-index toolkit for symmetric stable data", "stablekurt"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Draw a seeded sample (one value per line)");
    simulate->add_option("--dist", sim.dist, "stable, t or gaussian")
        ->check(CLI::IsMember({"stable", "t", "gaussian"}))
        ->capture_default_str();
    simulate->add_option("--alpha", sim.alpha, "Stable tail index in (0, 2]")->capture_default_str();
    simulate->add_option("--nu", sim.nu, "Student-t degrees of freedom");
    simulate->add_option("--sigma", sim.sigma, "Scale")->capture_default_str();
    simulate->add_option("--mu", sim.mu, "Location (stable only)")->capture_default_str();
    simulate->add_option("--n", sim.n, "Sample size")->required();
    simulate->add_option("--seed", sim.seed, "Master seed")->required();
    simulate->add_option("--stream", sim.stream, "Stream id")->capture_default_str();
    simulate->add_option("--out", sim.out, "Output file (default stdout)");

    SampleArgs sa;
    auto add_input = [&sa](CLI::App* sub) {
        sub->add_option("input", sa.input, "Sample CSV, '-' for stdin")->capture_default_str();
        sub->add_option("--out", sa.out, "Output file (default stdout)");
    };
    auto* stats = app.add_subcommand("stats", "Moment summary of a sample");
    add_input(stats);
    auto* estimate = app.add_subcommand("estimate", "Tail-index estimate of a sample");
    add_input(estimate);
    estimate->add_option("--method", sa.method, "kurtosis or kw")
        ->check(CLI::IsMember({"kurtosis", "kw"}))
        ->capture_default_str();
    auto* growth = app.add_subcommand("growth", "Excess kurtosis on sample prefixes");
    add_input(growth);
    growth->add_option("--checkpoints", sa.checkpoints, "first:last:step or a comma list")->required();
    growth->add_option("--fit-out", sa.fit_out, "Write slope fit and linearity JSON here");
    growth->add_option("--threshold", sa.threshold, "Linearity threshold")->capture_default_str();
    auto* test = app.add_subcommand("test", "Bootstrap test of alpha = 2 against alpha < 2");
    add_input(test);
    test->add_option("--bootstrap", sa.resamples, "Number of resamples B")->capture_default_str();
    test->add_option("--level", sa.level, "Test level")->capture_default_str();
    test->add_option("--seed", sa.seed, "Master seed")->required();
    test->add_option("--stream", sa.stream, "Stream id")->capture_default_str();
    test->add_option("--threads", sa.threads, "Worker threads (0 = all cores)")->capture_default_str();

    ExperimentArgs ea;
    auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment");
    experiment->add_option("--kind", ea.kind,
                           "scatter, growth-slopes, slope-vs-alpha, variance-curve, mean-ratio, ordering, skewness");
    experiment->add_option("--config", ea.config_path, "JSON config (or a summary.json from an earlier run)");
    experiment->add_option("--family", ea.family, "stable, student-t or gaussian");
    experiment->add_option("--alphas,--nus,--params", ea.params, "Parameter grid, comma separated");
    experiment->add_option("--m", ea.m, "Replicates per grid point");
    experiment->add_option("--n", ea.n, "Fixed sample size");
    experiment->add_option("--size-range", ea.size_range, "Random sample sizes lo:hi");
    experiment->add_option("--checkpoints", ea.checkpoints, "Growth checkpoints");
    experiment->add_option("--sizes", ea.size_grid, "Sample-size grid (skewness)");
    experiment->add_option("--seed", ea.seed, "Master seed");
    experiment->add_option("--threshold", ea.threshold, "Linearity threshold");
    experiment->add_option("--threads", ea.threads, "Worker threads (0 = all cores)")->capture_default_str();
    experiment->add_option("--out-dir", ea.out_dir, "Write rows.csv, summary.json and plots/ here");
    experiment->add_flag("--quiet", ea.quiet, "No progress on stderr");

    IngestArgs ia;
    auto* ingest = app.add_subcommand("ingest", "Log-return kurtosis workflow on a price CSV");
    ingest->add_option("input", ia.input, "Price CSV")->required();
    ingest->add_option("--date-col", ia.date_col, "Date column name")->capture_default_str();
    ingest->add_option("--close-col", ia.close_col, "Close column name")->capture_default_str();
    ingest->add_option("--windows", ia.windows, "Return-index windows start:end,...");
    ingest->add_option("--step", ia.step, "Rolling kurtosis step")->capture_default_str();
    ingest->add_option("--threshold", ia.threshold, "Linearity threshold")->capture_default_str();
    ingest->add_option("--out", ia.out, "Report JSON (default stdout)");
    ingest->add_option("--growth-out", ia.growth_out, "Growth curve CSV");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (simulate->parsed()) {
            if (sim.dist == "t" && simulate->count("--nu") == 0) throw ParameterError("--nu is required for --dist t");
            run_simulate(sim, io);
        } else if (stats->parsed()) {
            run_stats(sa, io);
        } else if (estimate->parsed()) {
            run_estimate(sa, io);
        } else if (growth->parsed()) {
            run_growth(sa, io);
        } else if (test->parsed()) {
            run_test(sa, io);
        } else if (experiment->parsed()) {
            run_experiment_command(ea, io);
        } else if (ingest->parsed()) {
            run_ingest(ia, io);
        }
    } catch (const ParameterError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IngestError& e) {
        err << "{\"error\":\"ingest\",\"message\":" << json(e.what()).dump() << "}\n";
        return kExitData;
    } catch (const DegenerateSampleError& e) {
        err << "{\"error\":\"degenerate-sample\",\"message\":" << json(e.what()).dump() << "}\n";
        return kExitData;
    } catch (const InsufficientDataError& e) {
        err << "{\"error\":\"insufficient-data\",\"message\":" << json(e.what()).dump() << "}\n";
        return kExitData;
    } catch (const NumericDomainError& e) {
        err << "{\"error\":\"numeric-domain\",\"message\":" << json(e.what()).dump() << "}\n";
        return kExitData;
    } catch (const std::exception& e) {
        err << "{\"error\":\"data\",\"message\":" << json(e.what()).dump() << "}\n";
        return kExitData;
    }
    return kExitOk;
}

}  // namespace sk::cli
