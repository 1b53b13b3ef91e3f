#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "stablekurt/moments.hpp"
#include "stablekurt/tail_inference.hpp"

namespace sk {

struct PriceObservation {
    std::chrono::year_month_day date;
    double close = 0.0;

    friend bool operator==(const PriceObservation&, const PriceObservation&) = default;
};

/// Daily closes with strictly increasing dates and positive prices.
struct PriceSeries {
    std::vector<PriceObservation> observations;
    std::string source;
    std::vector<std::string> warnings;  ///< e.g. input was re-sorted
};

struct PriceColumns {
    std::string date = "date";
    std::string close = "close";
};

/// Parses a headed CSV with an ISO-8601 date column and a close column.
///
/// Rows are returned sorted by date; unsorted input is accepted with a warning. Missing
/// columns, unparseable rows, nonpositive prices and duplicate dates raise IngestError
/// naming the offending line.
[[nodiscard]] PriceSeries parse_price_csv(std::istream& in, const std::string& source,
                                          const PriceColumns& columns = {});
[[nodiscard]] PriceSeries load_price_csv(const std::filesystem::path& path, const PriceColumns& columns = {});
void write_price_csv(const PriceSeries& series, std::ostream& out, const PriceColumns& columns = {});

[[nodiscard]] std::string format_date(std::chrono::year_month_day date);

struct ReturnSeries {
    std::vector<double> returns;                   ///< ln(p_t / p_{t-1})
    std::vector<std::chrono::year_month_day> dates;  ///< date of p_t
};

/// Throws InsufficientDataError for fewer than two prices.
[[nodiscard]] ReturnSeries log_returns(const PriceSeries& prices);

inline constexpr std::size_t kDefaultRollingStep = 10;

/// Excess kurtosis of the prefixes of length 4+step, 4+2·step, ... with the full series
/// length always included as the last checkpoint.
[[nodiscard]] GrowthCurve rolling_kurtosis(const ReturnSeries& returns, std::size_t step = kDefaultRollingStep);

/// Half-open index range [start, end) into the return series.
struct Window {
    std::size_t start = 0;
    std::size_t end = 0;
};

struct WindowEstimate {
    Window window;
    SampleStats stats;
    AlphaEstimate kurtosis;
    AlphaEstimate kogon_williams;
};

inline constexpr std::size_t kMinWindowLength = 100;

/// Kurtosis-ratio and Kogon–Williams estimates per window, sorted by window start.
/// Windows shorter than 100 or past the end of the series raise ParameterError.
[[nodiscard]] std::vector<WindowEstimate> window_estimates(const ReturnSeries& returns,
                                                           const std::vector<Window>& windows);

void to_json(nlohmann::json& j, const WindowEstimate& estimate);

}  // namespace sk
