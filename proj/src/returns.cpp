#include "stablekurt/returns.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "stablekurt/errors.hpp"
#include "stablekurt/json_io.hpp"
#include "stablekurt/text_io.hpp"

namespace sk {

namespace {

std::optional<std::chrono::year_month_day> parse_iso_date(std::string_view text) {
    // YYYY-MM-DD, optionally followed by a time part which is ignored.
    if (text.size() < 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    if (text.size() > 10 && text[10] != 'T' && text[10] != ' ') return std::nullopt;
    int y = 0;
    unsigned m = 0, d = 0;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (text[i] < '0' || text[i] > '9') return std::nullopt;
    }
    y = (text[0] - '0') * 1000 + (text[1] - '0') * 100 + (text[2] - '0') * 10 + (text[3] - '0');
    m = static_cast<unsigned>((text[5] - '0') * 10 + (text[6] - '0'));
    d = static_cast<unsigned>((text[8] - '0') * 10 + (text[9] - '0'));
    const std::chrono::year_month_day date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
    if (!date.ok()) return std::nullopt;
    return date;
}

std::size_t find_column(const std::vector<std::string>& header, const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw IngestError("missing column '" + name + "'", 1);
    return static_cast<std::size_t>(it - header.begin());
}

}  // namespace

std::string format_date(std::chrono::year_month_day date) {
    char buffer[16];
    std::snprintf(buffer, sizeof buffer, "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buffer;
}

PriceSeries parse_price_csv(std::istream& in, const std::string& source, const PriceColumns& columns) {
    PriceSeries series;
    series.source = source;

    std::string line;
    std::size_t line_number = 0;
    std::size_t date_col = 0, close_col = 0, width = 0;
    bool have_header = false;
    std::vector<std::size_t> lines;  // source line of each observation
    while (std::getline(in, line)) {
        ++line_number;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (!have_header) {
            date_col = find_column(fields, columns.date);
            close_col = find_column(fields, columns.close);
            width = std::max(date_col, close_col) + 1;
            have_header = true;
            continue;
        }
        if (fields.size() < width) throw IngestError("row has too few fields", line_number);
        const auto date = parse_iso_date(fields[date_col]);
        if (!date) throw IngestError("unparseable date '" + fields[date_col] + "'", line_number);
        const auto close = parse_double(fields[close_col]);
        if (!close || !std::isfinite(*close)) {
            throw IngestError("unparseable close '" + fields[close_col] + "'", line_number);
        }
        if (*close <= 0.0) throw IngestError("nonpositive close price", line_number);
        series.observations.push_back({*date, *close});
        lines.push_back(line_number);
    }
    if (!have_header) throw IngestError("empty file: header row required");

    std::vector<std::size_t> order(series.observations.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    const bool sorted = std::is_sorted(series.observations.begin(), series.observations.end(),
                                       [](const auto& a, const auto& b) { return a.date < b.date; });
    if (!sorted) {
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return series.observations[a].date < series.observations[b].date;
        });
        series.warnings.push_back("input dates were not in increasing order; rows were sorted by date");
    }
    std::vector<PriceObservation> ordered;
    ordered.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& obs = series.observations[order[i]];
        if (!ordered.empty() && ordered.back().date == obs.date) {
            throw IngestError("duplicate date " + format_date(obs.date), lines[order[i]]);
        }
        ordered.push_back(obs);
    }
    series.observations = std::move(ordered);
    return series;
}

PriceSeries load_price_csv(const std::filesystem::path& path, const PriceColumns& columns) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open '" + path.string() + "'");
    return parse_price_csv(in, path.string(), columns);
}

void write_price_csv(const PriceSeries& series, std::ostream& out, const PriceColumns& columns) {
    out << columns.date << ',' << columns.close << '\n';
    for (const auto& obs : series.observations) out << format_date(obs.date) << ',' << format_double(obs.close) << '\n';
}

ReturnSeries log_returns(const PriceSeries& prices) {
    const auto& obs = prices.observations;
    if (obs.size() < 2) throw InsufficientDataError("log-returns need at least two prices");
    ReturnSeries out;
    out.returns.reserve(obs.size() - 1);
    out.dates.reserve(obs.size() - 1);
    for (std::size_t t = 1; t < obs.size(); ++t) {
        out.returns.push_back(std::log(obs[t].close / obs[t - 1].close));
        out.dates.push_back(obs[t].date);
    }
    return out;
}

GrowthCurve rolling_kurtosis(const ReturnSeries& returns, std::size_t step) {
    if (step == 0) throw ParameterError("rolling step must be positive");
    const std::size_t n = returns.returns.size();
    if (n < kMinKurtosisSize + step) {
        throw InsufficientDataError("rolling kurtosis needs at least " + std::to_string(kMinKurtosisSize + step) +
                                    " returns, got " + std::to_string(n));
    }
    auto checkpoints = checkpoint_grid(kMinKurtosisSize + step, n, step);
    if (checkpoints.back() != n) checkpoints.push_back(n);
    return growth_curve(returns.returns, checkpoints);
}

std::vector<WindowEstimate> window_estimates(const ReturnSeries& returns, const std::vector<Window>& windows) {
    const std::size_t n = returns.returns.size();
    for (const auto& w : windows) {
        if (w.end > n || w.start >= w.end) {
            throw ParameterError("window [" + std::to_string(w.start) + ", " + std::to_string(w.end) +
                                 ") is out of range for " + std::to_string(n) + " returns");
        }
        if (w.end - w.start < kMinWindowLength) {
            throw ParameterError("window [" + std::to_string(w.start) + ", " + std::to_string(w.end) +
                                 ") is shorter than 100 observations");
        }
    }
    std::vector<Window> sorted = windows;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Window& a, const Window& b) { return a.start < b.start; });

    std::vector<WindowEstimate> out;
    out.reserve(sorted.size());
    for (const auto& w : sorted) {
        const std::span<const double> slice(returns.returns.data() + w.start, w.end - w.start);
        WindowEstimate est;
        est.window = w;
        est.stats = compute_stats(slice);
        est.kurtosis = alpha_from_kurtosis(est.stats.g2, est.stats.n);
        est.kogon_williams = kogon_williams(slice);
        out.push_back(std::move(est));
    }
    return out;
}

void to_json(nlohmann::json& j, const WindowEstimate& e) {
    j = {{"start", e.window.start},
         {"end", e.window.end},
         {"stats", e.stats},
         {"kurtosis_ratio", e.kurtosis},
         {"kogon_williams", e.kogon_williams}};
}

}  // namespace sk
