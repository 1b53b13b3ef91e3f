#include "stablekurt/errors.hpp"

namespace sk {

namespace {

std::string with_checkpoint(const std::string& what, std::optional<std::size_t> checkpoint) {
    if (!checkpoint) return what;
    return what + " (checkpoint " + std::to_string(*checkpoint) + ")";
}

std::string with_line(const std::string& what, std::optional<std::size_t> line) {
    if (!line) return what;
    return "line " + std::to_string(*line) + ": " + what;
}

}  // namespace

DegenerateSampleError::DegenerateSampleError(const std::string& what,
                                             std::optional<std::size_t> checkpoint)
    : Error(with_checkpoint(what, checkpoint)), checkpoint_(checkpoint) {}

IngestError::IngestError(const std::string& what, std::optional<std::size_t> line)
    : Error(with_line(what, line)), line_(line) {}

}  // namespace sk
