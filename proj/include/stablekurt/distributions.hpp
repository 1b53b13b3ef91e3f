#pragma once

#include <cstddef>
#include <vector>

#include "stablekurt/random.hpp"

namespace sk {

/// Parameters of a stable law with log-characteristic function
///
///     log φ(t) = -σ^α |t|^α {1 - iβ sign(t) tan(πα/2)} + iμt     (α ≠ 1)
///
/// Only the symmetric case β = 0 is supported. Note the scale convention: at α = 2 the
/// law is Gaussian with variance 2σ², not σ².
class StableParams {
public:
    /// Throws ParameterError unless 0 < alpha ≤ 2, sigma > 0, beta == 0 and mu is finite.
    explicit StableParams(double alpha, double sigma = 1.0, double mu = 0.0, double beta = 0.0);

    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] double beta() const noexcept { return beta_; }
    [[nodiscard]] double sigma() const noexcept { return sigma_; }
    [[nodiscard]] double mu() const noexcept { return mu_; }

private:
    double alpha_;
    double beta_;
    double sigma_;
    double mu_;
};

class StudentTParams {
public:
    /// Throws ParameterError unless nu > 0.
    explicit StudentTParams(double nu);

    [[nodiscard]] double nu() const noexcept { return nu_; }

private:
    double nu_;
};

// Single draws from an existing stream.
double draw_standard_normal(RandomStream& rng);
double draw_exponential(RandomStream& rng);
/// Gamma(shape, 1) by Marsaglia–Tsang; shape > 0.
double draw_gamma(RandomStream& rng, double shape);
/// Standard symmetric stable (σ = 1, μ = 0) by Chambers–Mallows–Stuck.
double draw_standard_stable(RandomStream& rng, double alpha);
double draw_student_t(RandomStream& rng, double nu);

std::vector<double> sample_symmetric_stable(const StableParams& params, std::size_t n, RandomStream& rng);
std::vector<double> sample_student_t(const StudentTParams& params, std::size_t n, RandomStream& rng);
std::vector<double> sample_gaussian(double sigma, std::size_t n, RandomStream& rng);

/// Each call owns a fresh stream derived from `seed`: identical arguments give
/// bit-identical vectors.
std::vector<double> sample_symmetric_stable(const StableParams& params, std::size_t n, SeedSpec seed);
std::vector<double> sample_student_t(const StudentTParams& params, std::size_t n, SeedSpec seed);
/// Mean 0, standard deviation sigma (> 0).
std::vector<double> sample_gaussian(double sigma, std::size_t n, SeedSpec seed);

}  // namespace sk
