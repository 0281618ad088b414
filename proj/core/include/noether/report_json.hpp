#ifndef NOETHER_REPORT_JSON_HPP
#define NOETHER_REPORT_JSON_HPP

#include <json.hpp>

#include "noether/currents.hpp"
#include "noether/gauge.hpp"
#include "noether/homotopy.hpp"
#include "noether/numverify.hpp"

namespace noether {

// JSON views of the engine outputs. Expressions are rendered as canonical
// DSL strings; every document carries `"schema": 1`. Key order is sorted by
// the json library, so identical inputs serialize byte-identically.

nlohmann::json report_to_json(const NoetherReport& report, const FieldSystem& sys);
nlohmann::json homotopy_to_json(const HomotopyResult& result, const FieldSystem& sys);
nlohmann::json gauged_to_json(const GaugedSystem& gauged,
                              const GaugeConditionCheck& conditions,
                              const std::vector<Expr>& covariance,
                              const FieldSystem& sys);
nlohmann::json conservation_to_json(const ConservationStats& stats);
nlohmann::json region_to_json(const RegionCheckResult& result);

}  // namespace noether

#endif
