#pragma once

#include <span>
#include <vector>

namespace sk {

/// Least-squares solution of y ≈ Σ_j coefficients[j] · columns[j].
struct LinearModelFit {
    std::vector<double> coefficients;
    std::vector<double> residuals;
    double residual_sum_squares = 0.0;
};

/// Solves by column-pivoted Householder QR. Columns must all have y.size() entries.
/// Throws ParameterError when the design is rank deficient.
[[nodiscard]] LinearModelFit fit_linear_model(std::span<const std::vector<double>> columns,
                                              std::span<const double> y);

/// Σ(y - ȳ)².
[[nodiscard]] double centered_sum_squares(std::span<const double> y);

}  // namespace sk
