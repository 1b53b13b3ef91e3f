#include "stablekurt/distributions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stablekurt/errors.hpp"

namespace sk {

StableParams::StableParams(double alpha, double sigma, double mu, double beta)
    : alpha_(alpha), beta_(beta), sigma_(sigma), mu_(mu) {
    if (!(alpha > 0.0 && alpha <= 2.0)) {
        throw ParameterError("stable alpha must lie in (0, 2], got " + std::to_string(alpha));
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw ParameterError("stable sigma must be positive and finite, got " + std::to_string(sigma));
    }
    if (beta != 0.0) {
        throw ParameterError("only symmetric stable laws (beta = 0) are supported");
    }
    if (!std::isfinite(mu)) throw ParameterError("stable mu must be finite");
}

StudentTParams::StudentTParams(double nu) : nu_(nu) {
    if (!(nu > 0.0) || !std::isfinite(nu)) {
        throw ParameterError("student-t nu must be positive and finite, got " + std::to_string(nu));
    }
}

double draw_standard_normal(RandomStream& rng) {
    // Box–Muller, cosine branch only: one normal per two uniforms keeps each
    // draw a pure function of the stream position.
    const double radius = std::sqrt(-2.0 * std::log(rng.uniform_open()));
    return radius * std::cos(2.0 * std::numbers::pi * rng.uniform());
}

double draw_exponential(RandomStream& rng) {
    return -std::log(rng.uniform_open());
}

double draw_gamma(RandomStream& rng, double shape) {
    if (shape < 1.0) {
        // Boost the shape and correct with U^(1/shape).
        const double u = rng.uniform_open();
        return draw_gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = draw_standard_normal(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform_open();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double draw_standard_stable(RandomStream& rng, double alpha) {
    const double u = std::numbers::pi * (rng.uniform_open() - 0.5);
    if (alpha == 1.0) return std::tan(u);
    const double w = draw_exponential(rng);
    const double lead = std::sin(alpha * u) / std::pow(std::cos(u), 1.0 / alpha);
    return lead * std::pow(std::cos((1.0 - alpha) * u) / w, (1.0 - alpha) / alpha);
}

double draw_student_t(RandomStream& rng, double nu) {
    const double z = draw_standard_normal(rng);
    const double chi2 = 2.0 * draw_gamma(rng, 0.5 * nu);
    return z / std::sqrt(chi2 / nu);
}

std::vector<double> sample_symmetric_stable(const StableParams& params, std::size_t n, RandomStream& rng) {
    std::vector<double> out(n);
    for (auto& x : out) x = params.sigma() * draw_standard_stable(rng, params.alpha()) + params.mu();
    return out;
}

std::vector<double> sample_student_t(const StudentTParams& params, std::size_t n, RandomStream& rng) {
    std::vector<double> out(n);
    for (auto& x : out) x = draw_student_t(rng, params.nu());
    return out;
}

std::vector<double> sample_gaussian(double sigma, std::size_t n, RandomStream& rng) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw ParameterError("gaussian sigma must be positive and finite, got " + std::to_string(sigma));
    }
    std::vector<double> out(n);
    for (auto& x : out) x = sigma * draw_standard_normal(rng);
    return out;
}

std::vector<double> sample_symmetric_stable(const StableParams& params, std::size_t n, SeedSpec seed) {
    RandomStream rng(seed);
    return sample_symmetric_stable(params, n, rng);
}

std::vector<double> sample_student_t(const StudentTParams& params, std::size_t n, SeedSpec seed) {
    RandomStream rng(seed);
    return sample_student_t(params, n, rng);
}

std::vector<double> sample_gaussian(double sigma, std::size_t n, SeedSpec seed) {
    RandomStream rng(seed);
    return sample_gaussian(sigma, n, rng);
}

}  // namespace sk
