#include <doctest.h>

#include <sstream>
#include <unordered_set>

#include "stablekurt/errors.hpp"
#include "stablekurt/experiments.hpp"

using namespace sk;

namespace {

std::string rows_text(const ExperimentReport& r) {
    std::ostringstream out;
    write_rows_csv(r, out);
    return out.str();
}

ExperimentConfig small(ExperimentKind kind, std::size_t m = 40) {
    auto c = default_config(kind);
    c.m = m;
    c.master_seed = 2718;
    return c;
}

}  // namespace

TEST_SUITE("experiments") {
    TEST_CASE("seed derivation") {
        const auto a = derive_replicate_seed(1, ExperimentKind::Ordering, 0, 0);
        CHECK(a == derive_replicate_seed(1, ExperimentKind::Ordering, 0, 0));
        CHECK(a != derive_replicate_seed(1, ExperimentKind::Ordering, 0, 1));
        CHECK(a != derive_replicate_seed(1, ExperimentKind::Ordering, 1, 0));
        CHECK(a != derive_replicate_seed(1, ExperimentKind::Scatter, 0, 0));
        CHECK(a != derive_replicate_seed(2, ExperimentKind::Ordering, 0, 0));
        // documented layout
        CHECK(derive_replicate_seed(9, ExperimentKind::GrowthSlopes, 3, 17).stream_id ==
              ((std::uint64_t{2} << 56) | (std::uint64_t{3} << 40) | 17));
        CHECK_THROWS_AS((void)derive_replicate_seed(1, ExperimentKind::Scatter, 1u << 16, 0), ParameterError);
        CHECK_THROWS_AS((void)derive_replicate_seed(1, ExperimentKind::Scatter, 0, std::uint64_t{1} << 40),
                        ParameterError);
    }

    TEST_CASE("a million derived seeds do not collide") {
        std::unordered_set<std::uint64_t> streams;
        streams.reserve(1'000'000);
        const ExperimentKind kinds[] = {ExperimentKind::GrowthSlopes, ExperimentKind::Ordering};
        for (auto kind : kinds) {
            for (std::size_t g = 0; g < 10; ++g) {
                for (std::uint64_t r = 0; r < 50'000; ++r) {
                    streams.insert(derive_replicate_seed(42, kind, g, r).stream_id);
                }
            }
        }
        CHECK(streams.size() == 1'000'000);
    }

    TEST_CASE("validation") {
        auto c = small(ExperimentKind::Ordering);
        c.params = {1.2, 1.4, 1.6};
        CHECK_THROWS_AS(validate(c), ParameterError);

        c = small(ExperimentKind::GrowthSlopes);
        c.checkpoints.clear();
        CHECK_THROWS_AS(validate(c), ParameterError);

        c = small(ExperimentKind::GrowthSlopes);
        c.checkpoints = {50, 100, 600};
        CHECK_THROWS_AS(validate(c), ParameterError);

        c = small(ExperimentKind::MeanRatio);
        c.params = {2.5};
        CHECK_THROWS_AS(validate(c), ParameterError);

        c = small(ExperimentKind::MeanRatio);
        c.sizes = {3, 10};
        CHECK_THROWS_AS(validate(c), ParameterError);

        c = small(ExperimentKind::MeanRatio);
        c.m = 0;
        CHECK_THROWS_AS(validate(c), ParameterError);

        c = small(ExperimentKind::SlopeVsAlpha);
        c.params = {2.0};
        CHECK_THROWS_AS(validate(c), ParameterError);

        c = small(ExperimentKind::Scatter);
        c.family = Family::Gaussian;
        CHECK_THROWS_AS(validate(c), ParameterError);

        for (int k = 1; k <= 7; ++k) CHECK_NOTHROW(validate(default_config(static_cast<ExperimentKind>(k))));
    }

    TEST_CASE("names round trip") {
        for (int k = 1; k <= 7; ++k) {
            const auto kind = static_cast<ExperimentKind>(k);
            CHECK(parse_experiment_kind(to_string(kind)) == kind);
        }
        CHECK(parse_family("student-t") == Family::StudentT);
        CHECK_THROWS_AS((void)parse_experiment_kind("nope"), ParameterError);
    }

    TEST_CASE("config json round trip") {
        auto c = small(ExperimentKind::Skewness);
        c.params = {1.1, 1.9};
        c.size_grid = {50, 75};
        c.master_seed = 0xFFFFFFFFFFFFFFFFull;
        const auto back = config_from_json(config_to_json(c));
        CHECK(config_to_json(back) == config_to_json(c));
        CHECK(back.master_seed == c.master_seed);
        CHECK_THROWS_AS((void)config_from_json(nlohmann::json{{"m", 5}}), ParameterError);
    }

    TEST_CASE("every kind runs and is thread independent") {
        for (int k = 1; k <= 7; ++k) {
            auto c = small(static_cast<ExperimentKind>(k), 30);
            if (c.kind == ExperimentKind::VarianceCurve) c.params = {1.2, 2.0};
            if (c.kind == ExperimentKind::SlopeVsAlpha) c.params = {1.0, 1.5, 2.0};
            CAPTURE(to_string(c.kind));
            const auto one = run_experiment(c, 1);
            const auto many = run_experiment(c, 8);
            CHECK(rows_text(one) == rows_text(many));
            CHECK(summary_json(one, false).dump() == summary_json(many, false).dump());
            CHECK(one.runtime.threads == 1);
            CHECK(many.runtime.threads == 8);

            std::size_t grid = c.kind == ExperimentKind::Scatter    ? 1
                               : c.kind == ExperimentKind::Skewness ? c.params.size() * c.size_grid.size()
                                                                    : c.params.size();
            CHECK(one.rows.size() == grid * c.m);
            for (const auto& row : one.rows) REQUIRE(row.values.size() == one.value_columns.size());
        }
    }

    TEST_CASE("rows are independently recomputable") {
        auto c = small(ExperimentKind::MeanRatio, 25);
        const auto report = run_experiment(c, 2);
        for (std::size_t i : {0u, 7u, 31u, 74u}) {
            const auto& row = report.rows[i];
            CHECK(row.seed == derive_replicate_seed(c.master_seed, c.kind, row.grid_index, row.replicate));
            CHECK(recompute_replicate(c, row) == row.values);
        }
    }

    TEST_CASE("different master seeds give different reports") {
        auto c = small(ExperimentKind::Ordering, 20);
        const auto a = rows_text(run_experiment(c));
        c.master_seed += 1;
        CHECK(rows_text(run_experiment(c)) != a);
    }

    TEST_CASE("ordering of an exchangeable pair is a coin flip") {
        auto c = small(ExperimentKind::Ordering, 2000);
        c.params = {1.5, 1.5};
        c.sizes = SizeSpec::uniform(50, 200);
        const auto report = run_experiment(c);
        const double f = report.summary["fraction_raw"].get<double>();
        CHECK(f >= 0.46);
        CHECK(f <= 0.54);
    }

    TEST_CASE("growth-slopes summary carries fits") {
        auto c = small(ExperimentKind::GrowthSlopes, 200);
        c.params = {1.0};
        const auto report = run_experiment(c);
        const auto& curve = report.summary["curves"][0];
        CHECK(curve["mean_g2"].size() == 10);
        CHECK(curve["slope_fit"]["slope"].get<double>() > 0.3);
        CHECK(curve["linearity"]["stable_like"].get<bool>());
        REQUIRE(report.plots.size() == 1);
        CHECK(report.plots[0].name == "growth_alpha_1");
        CHECK(report.plots[0].points.size() == 10);
    }

    TEST_CASE("student-t growth curves") {
        auto c = small(ExperimentKind::GrowthSlopes, 50);
        c.family = Family::StudentT;
        c.params = {3, 4, 5};
        const auto report = run_experiment(c);
        CHECK(report.summary["curves"].size() == 3);
        CHECK(report.plots[1].name == "growth_nu_4");
    }

    TEST_CASE("progress callback reaches the total") {
        auto c = small(ExperimentKind::VarianceCurve, 600);
        c.params = {1.5, 2.0};
        c.sizes = SizeSpec::fixed_size(20);
        std::size_t last = 0, total_seen = 0;
        (void)run_experiment(c, 3, [&](std::size_t done, std::size_t total) {
            last = std::max(last, done);
            total_seen = total;
        });
        CHECK(total_seen == 1200);
        CHECK(last == 1200);
    }

    TEST_CASE("rows csv layout") {
        auto c = small(ExperimentKind::VarianceCurve, 2);
        c.params = {2.0};
        const auto text = rows_text(run_experiment(c));
        CHECK(text.rfind("grid_index,replicate,master_seed,stream_id,param,b2\n", 0) == 0);
        CHECK(std::count(text.begin(), text.end(), '\n') == 3);
    }
}
