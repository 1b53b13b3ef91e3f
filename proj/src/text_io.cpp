#include "stablekurt/text_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "stablekurt/errors.hpp"

namespace sk {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

std::optional<double> parse_double(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
    double value = 0.0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

std::string_view trim(std::string_view text) noexcept {
    constexpr std::string_view kSpace = " \t\r\n\f\v";
    const auto first = text.find_first_not_of(kSpace);
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(kSpace);
    return text.substr(first, last - first + 1);
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        auto field = trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
        if (field.size() >= 2 && field.front() == '"' && field.back() == '"') {
            field = field.substr(1, field.size() - 2);
        }
        fields.emplace_back(field);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

std::vector<double> read_sample_csv(std::istream& in) {
    std::vector<double> values;
    std::string line;
    std::size_t line_number = 0;
    bool seen_data = false;
    while (std::getline(in, line)) {
        ++line_number;
        const auto content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        const auto fields = split_csv_line(content);
        const auto value = parse_double(fields.front());
        if (!value) {
            if (!seen_data) {
                seen_data = true;  // header row
                continue;
            }
            throw IngestError("not a number: '" + fields.front() + "'", line_number);
        }
        if (!std::isfinite(*value)) throw IngestError("non-finite value", line_number);
        seen_data = true;
        values.push_back(*value);
    }
    return values;
}

void write_sample_csv(std::span<const double> sample, std::ostream& out) {
    for (double x : sample) out << format_double(x) << '\n';
}

}  // namespace sk
