#pragma once

#include "gradmine/emerging.hpp"
#include "gradmine/fuzztx.hpp"
#include "gradmine/gradcore.hpp"
#include "gradmine/temporal.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace gradmine {

// Supports appear as both the exact fraction and its decimal value.
nlohmann::json support_to_json(const Support& s);
nlohmann::json lag_to_json(const TimeLag& lag);

nlohmann::json pattern_to_json(const NumericDataset& ds, const GradualPattern& p);
nlohmann::json tgp_to_json(const NumericDataset& ds, const TemporalGradualPattern& p);
nlohmann::json tgep_to_json(const NumericDataset& ds, const TemporalGradualEmergingPattern& p);
nlohmann::json crossed_to_json(const CrossedDataset& crossed);

std::string patterns_to_csv(const NumericDataset& ds, const std::vector<GradualPattern>& patterns);
std::string tgps_to_csv(const NumericDataset& ds, const std::vector<TemporalGradualPattern>& patterns);
std::string tgeps_to_csv(const NumericDataset& ds,
                         const std::vector<TemporalGradualEmergingPattern>& patterns);

} // namespace gradmine
