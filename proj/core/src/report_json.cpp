#include "noether/report_json.hpp"

#include "noether/parser.hpp"

namespace noether {

namespace {

nlohmann::json expr_strings(const std::vector<Expr>& components,
                            const FieldSystem& sys) {
  nlohmann::json out = nlohmann::json::array();
  for (const Expr& e : components) out.push_back(to_dsl_canonical(e, sys));
  return out;
}

}  // namespace

nlohmann::json report_to_json(const NoetherReport& report, const FieldSystem& sys) {
  nlohmann::json j;
  j["schema"] = 1;
  j["classification"] = to_string(report.classification);
  j["bare_current"] = expr_strings(report.bare_current, sys);
  j["obstruction"] = to_dsl_canonical(report.obstruction, sys);
  j["obstruction_el"] = expr_strings(report.obstruction_el, sys);
  if (report.f_potential) j["f_potential"] = expr_strings(*report.f_potential, sys);
  if (report.improved_current) {
    j["improved_current"] = expr_strings(*report.improved_current, sys);
    j["residual"] = to_dsl_canonical(report.residual, sys);
  }
  return j;
}

nlohmann::json homotopy_to_json(const HomotopyResult& result, const FieldSystem& sys) {
  nlohmann::json j;
  j["schema"] = 1;
  j["flux"] = expr_strings(result.flux, sys);
  j["zero_field_part"] = to_dsl_canonical(result.zero_field_part, sys);
  j["h_antiderivative"] = to_dsl_canonical(result.h_antiderivative, sys);
  return j;
}

nlohmann::json gauged_to_json(const GaugedSystem& gauged,
                              const GaugeConditionCheck& conditions,
                              const std::vector<Expr>& covariance,
                              const FieldSystem& sys) {
  nlohmann::json j;
  j["schema"] = 1;
  j["gauged_lagrangian"] = to_dsl_canonical(gauged.gauged_lagrangian, sys);
  j["f_tilde"] = expr_strings(gauged.f_tilde, sys);
  j["transform_residual"] = to_dsl_canonical(gauged.transform_residual, sys);
  j["conditions"] = {{"antisymmetry", conditions.antisymmetry_ok},
                     {"contraction", conditions.contraction_ok}};
  j["covariance_residual"] = expr_strings(covariance, sys);
  return j;
}

nlohmann::json conservation_to_json(const ConservationStats& stats) {
  return {{"initial", stats.initial},
          {"max_drift", stats.max_drift},
          {"spread", stats.spread},
          {"max_divergence_fd", stats.max_divergence_fd},
          {"tolerance", stats.tolerance},
          {"pass", stats.pass}};
}

nlohmann::json region_to_json(const RegionCheckResult& result) {
  nlohmann::json j;
  j["f_integral"] = result.f_integral;
  j["region_symmetric"] = result.region_symmetric;
  if (result.boundary_sum) {
    j["boundary_sum"] = *result.boundary_sum;
    j["mismatch"] = *result.mismatch;
    j["boundary_ok"] = result.boundary_ok;
  }
  return j;
}

}  // namespace noether
