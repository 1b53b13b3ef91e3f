#include "stablekurt/linear_fit.hpp"

#include <Eigen/Dense>

#include "stablekurt/errors.hpp"

namespace sk {

LinearModelFit fit_linear_model(std::span<const std::vector<double>> columns, std::span<const double> y) {
    const auto rows = static_cast<Eigen::Index>(y.size());
    const auto cols = static_cast<Eigen::Index>(columns.size());
    if (cols == 0 || rows < cols) throw ParameterError("least squares needs at least as many points as regressors");

    Eigen::MatrixXd design(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        const auto& column = columns[static_cast<std::size_t>(j)];
        if (static_cast<Eigen::Index>(column.size()) != rows) throw ParameterError("regressor length mismatch");
        for (Eigen::Index i = 0; i < rows; ++i) design(i, j) = column[static_cast<std::size_t>(i)];
    }
    const Eigen::Map<const Eigen::VectorXd> response(y.data(), rows);

    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < cols) throw ParameterError("degenerate regressors (rank-deficient design)");
    const Eigen::VectorXd beta = qr.solve(response);
    const Eigen::VectorXd residual = response - design * beta;

    LinearModelFit fit;
    fit.coefficients.assign(beta.data(), beta.data() + cols);
    fit.residuals.assign(residual.data(), residual.data() + rows);
    fit.residual_sum_squares = residual.squaredNorm();
    return fit;
}

double centered_sum_squares(std::span<const double> y) {
    if (y.empty()) return 0.0;
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(y.size());
    double ss = 0.0;
    for (double v : y) ss += (v - mean) * (v - mean);
    return ss;
}

}  // namespace sk
