#pragma once

#include <json.hpp>

#include "stablekurt/moments.hpp"
#include "stablekurt/tail_inference.hpp"

namespace sk {

// Field names follow the struct members.
void to_json(nlohmann::json& j, const SampleStats& stats);
void to_json(nlohmann::json& j, const GrowthCurve& curve);
void to_json(nlohmann::json& j, const AlphaEstimate& estimate);
void to_json(nlohmann::json& j, const SlopeFit& fit);
void to_json(nlohmann::json& j, const LinearityReport& report);
void to_json(nlohmann::json& j, const BootstrapResult& result);

}  // namespace sk
