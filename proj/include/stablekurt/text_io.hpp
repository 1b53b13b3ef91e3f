#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sk {

/// Shortest decimal representation that parses back to the same double.
[[nodiscard]] std::string format_double(double value);

/// Strict full-string parse; nullopt on trailing garbage or an empty field.
[[nodiscard]] std::optional<double> parse_double(std::string_view text);

/// Removes leading and trailing ASCII whitespace.
[[nodiscard]] std::string_view trim(std::string_view text) noexcept;

/// Splits a CSV line on commas, trimming fields and stripping one layer of double quotes.
/// Quoted fields may not contain commas.
[[nodiscard]] std::vector<std::string> split_csv_line(std::string_view line);

/// Reads a one-value-per-line sample (first CSV column). Blank lines and lines starting
/// with '#' are skipped; a non-numeric first data line is taken as a header. Any later
/// non-numeric value raises IngestError with its line number.
[[nodiscard]] std::vector<double> read_sample_csv(std::istream& in);

/// One value per line in round-trip precision.
void write_sample_csv(std::span<const double> sample, std::ostream& out);

}  // namespace sk
