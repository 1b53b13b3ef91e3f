#include "stablekurt/json_io.hpp"

namespace sk {

void to_json(nlohmann::json& j, const SampleStats& s) {
    j = {{"n", s.n},   {"mean", s.mean}, {"m2", s.m2}, {"m3", s.m3}, {"m4", s.m4},
         {"b2", s.b2}, {"g2", s.g2},     {"g1", s.g1}, {"c", s.c}};
}

void to_json(nlohmann::json& j, const GrowthCurve& curve) {
    j = {{"checkpoints", curve.checkpoints}, {"g2_values", curve.g2_values}};
}

void to_json(nlohmann::json& j, const AlphaEstimate& e) {
    j = {{"alpha_hat", e.alpha_hat},
         {"alpha_raw", e.alpha_raw},
         {"method", to_string(e.method)},
         {"n_used", e.n_used},
         {"sigma_hat", e.sigma_hat ? nlohmann::json(*e.sigma_hat) : nlohmann::json(nullptr)},
         {"clamped", e.clamped}};
}

void to_json(nlohmann::json& j, const SlopeFit& fit) {
    j = {{"slope", fit.slope}, {"intercept", fit.intercept}, {"r_squared", fit.r_squared}, {"residuals", fit.residuals}};
}

void to_json(nlohmann::json& j, const LinearityReport& r) {
    j = {{"linear_r2", r.linear_r2},
         {"quad_coeff", r.quad_coeff},
         {"quad_improvement", r.quad_improvement},
         {"threshold", r.threshold},
         {"stable_like", r.stable_like}};
}

void to_json(nlohmann::json& j, const BootstrapResult& r) {
    j = {{"alpha_hat", r.alpha_hat},
         {"alpha_raw", r.alpha_raw},
         {"alpha_raw_median", r.alpha_raw_median},
         {"alpha_ci_low", r.alpha_ci_low},
         {"alpha_ci_high", r.alpha_ci_high},
         {"upper_quantile", r.upper_quantile},
         {"B", r.resamples},
         {"level", r.level},
         {"redraws", r.redraws},
         {"reject_alpha2", r.reject_alpha2}};
}

}  // namespace sk
