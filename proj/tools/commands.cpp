#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "noether/report_json.hpp"

namespace noether::cli {

namespace {

int log_level() {
  const char* env = std::getenv("NOETHER_LOG");
  if (env == nullptr) return 0;
  std::string value(env);
  if (value == "debug" || value == "2") return 2;
  if (value == "info" || value == "1") return 1;
  return 0;
}

void log_info(const std::string& message) {
  if (log_level() >= 1) std::cerr << "[noether] " << message << "\n";
}

void emit(const nlohmann::json& report, const Options& opts) {
  std::string text = report.dump(2);
  if (opts.out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(opts.out_path);
  if (!out)
    throw Error(Error::Code::domain, "cannot write report to '" + opts.out_path + "'");
  out << text << "\n";
}

Scenario scenario_with_overrides(const SpecFile& spec, const Options& opts) {
  std::optional<Scenario> scenario = spec.scenario;
  if (!scenario) {
    if (!(opts.t0 && opts.t1 && opts.dt))
      throw Error(Error::Code::domain,
                  "spec has no scenario block and the run is not fully "
                  "specified by --t0/--t1/--dt");
    scenario = Scenario{spec.system, spec.lagrangian, spec.generator};
    scenario->q0.assign(static_cast<std::size_t>(spec.system.field_count()), 0.0);
    scenario->qdot0.assign(static_cast<std::size_t>(spec.system.field_count()), 0.0);
  }
  if (opts.t0) scenario->t0 = *opts.t0;
  if (opts.t1) scenario->t1 = *opts.t1;
  if (opts.dt) scenario->integrator.dt = *opts.dt;
  if (opts.tol) scenario->tolerances.conservation = *opts.tol;
  return *scenario;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int run_analyze(const Options& opts) {
  return guarded([&] {
    SpecFile spec = load_spec_file(opts.spec_path);
    log_info("analyzing " + opts.spec_path);
    NoetherReport report = classify(spec.lagrangian, spec.generator, spec.system);
    nlohmann::json doc = report_to_json(report, spec.system);
    if (report.classification == Classification::quasi_symmetry)
      doc["homotopy"] =
          homotopy_to_json(homotopy_potential(report.obstruction, spec.system),
                           spec.system);
    emit(doc, opts);
    return report.classification == Classification::not_quasi_symmetry ? 2 : 0;
  });
}

int run_verify(const Options& opts) {
  return guarded([&] {
    SpecFile spec = load_spec_file(opts.spec_path);
    NoetherReport report = classify(spec.lagrangian, spec.generator, spec.system);
    if (report.classification == Classification::not_quasi_symmetry)
      throw Error(Error::Code::domain,
                  "nothing to verify: the generator is not a quasi-symmetry");

    Scenario scenario = scenario_with_overrides(spec, opts);
    log_info("integrating [" + std::to_string(scenario.t0) + ", " +
             std::to_string(scenario.t1) + "] with dt=" +
             std::to_string(scenario.integrator.dt));
    Trajectory tr = integrate(scenario);

    ConservationStats conservation = conservation_report(scenario, report, tr);

    QuadratureConfig quad;
    quad.step = scenario.integrator.dt;
    quad.tolerance = scenario.tolerances.quadrature;
    quad.symmetry_tolerance = scenario.tolerances.region_symmetry;
    TrajectorySample sample(tr);
    Box region{{scenario.t0}, {scenario.t1}};
    RegionCheckResult region_check =
        fixed_region_check(report.obstruction, &*report.f_potential, region, sample,
                           scenario.sys, quad);

    // A few random sub-regions, reported for inspection; the boundary
    // representation holds on every one of them, the symmetry flag usually
    // does not.
    nlohmann::json subregions = nlohmann::json::array();
    RandomStream rng(opts.seed);
    for (int i = 0; i < 5; ++i) {
      Box sub = random_subbox(rng, region);
      RegionCheckResult sub_check = fixed_region_check(
          report.obstruction, &*report.f_potential, sub, sample, scenario.sys, quad);
      nlohmann::json entry = region_to_json(sub_check);
      entry["t0"] = sub.lo[0];
      entry["t1"] = sub.hi[0];
      subregions.push_back(entry);
    }

    if (!opts.csv_path.empty()) {
      std::ofstream csv(opts.csv_path);
      if (!csv)
        throw Error(Error::Code::domain,
                    "cannot write trajectory to '" + opts.csv_path + "'");
      write_trajectory_csv(tr, csv);
    }

    bool pass = conservation.pass && region_check.boundary_ok;
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["classification"] = to_string(report.classification);
    doc["conservation"] = conservation_to_json(conservation);
    doc["region"] = region_to_json(region_check);
    doc["subregions"] = subregions;
    doc["trajectory"] = {{"t0", scenario.t0},
                         {"t1", scenario.t1},
                         {"dt", scenario.integrator.dt},
                         {"samples", tr.samples()}};
    doc["pass"] = pass;
    emit(doc, opts);
    return pass ? 0 : 2;
  });
}

int run_homotopy(const Options& opts) {
  return guarded([&] {
    SpecFile spec = load_spec_file(opts.spec_path);
    HomotopyResult result = homotopy_potential(spec.lagrangian, spec.system);
    emit(homotopy_to_json(result, spec.system), opts);
    return 0;
  });
}

int run_gauge(const Options& opts) {
  return guarded([&] {
    SpecFile spec = load_spec_file(opts.spec_path);
    GaugeAssumptionCheck assumptions =
        check_assumptions(spec.generator, spec.system);
    if (!assumptions.ok)
      throw Error(Error::Code::domain,
                  "minimal coupling assumption violated: " + assumptions.violation);

    NoetherReport report = classify(spec.lagrangian, spec.generator, spec.system);
    if (report.classification == Classification::not_quasi_symmetry)
      throw Error(Error::Code::domain,
                  "cannot gauge: the generator is not a quasi-symmetry");

    GaugeConditionCheck conditions =
        check_potential_conditions(*report.f_potential, spec.generator, spec.system);
    GaugedSystem gauged = gauge_lagrangian(spec.lagrangian, spec.generator,
                                           *report.f_potential, spec.system);
    std::vector<Expr> covariance = covariance_residual(spec.generator, spec.system);
    emit(gauged_to_json(gauged, conditions, covariance, spec.system), opts);
    return 0;
  });
}

}  // namespace noether::cli
