#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameters or preconditions (out-of-range α, bad checkpoints, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Too few observations for the requested statistic.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Zero-variance sample. Carries the prefix length when raised from a growth curve.
class DegenerateSampleError : public Error {
public:
    explicit DegenerateSampleError(const std::string& what,
                                   std::optional<std::size_t> checkpoint = std::nullopt);

    [[nodiscard]] std::optional<std::size_t> checkpoint() const noexcept { return checkpoint_; }

private:
    std::optional<std::size_t> checkpoint_;
};

/// A quantity left the domain of a logarithm or similar (empirical CF modulus).
class NumericDomainError : public Error {
public:
    using Error::Error;
};

/// Malformed input files. Carries the 1-based line number when known.
class IngestError : public Error {
public:
    explicit IngestError(const std::string& what, std::optional<std::size_t> line = std::nullopt);

    [[nodiscard]] std::optional<std::size_t> line() const noexcept { return line_; }

private:
    std::optional<std::size_t> line_;
};

}  // namespace sk
