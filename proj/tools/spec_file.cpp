#include "spec_file.hpp"

#include <cmath>
#include <fstream>

namespace noether::cli {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw Error(Error::Code::domain, "spec field '" + field + "': " + why);
}

template <typename T>
T get_or_fail(const nlohmann::json& doc, const std::string& field) {
  if (!doc.contains(field)) fail(field, "missing");
  try {
    return doc.at(field).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(field, e.what());
  }
}

template <typename T>
T get_or(const nlohmann::json& doc, const std::string& field, T fallback) {
  if (!doc.contains(field)) return fallback;
  try {
    return doc.at(field).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(field, e.what());
  }
}

std::function<double(double)> numeric_from_json(const nlohmann::json& spec,
                                                const std::string& field) {
  std::string kind = get_or_fail<std::string>(spec, "kind");
  if (kind == "sin" || kind == "cos") {
    double a = get_or<double>(spec, "amplitude", 1.0);
    double omega = get_or<double>(spec, "omega", 1.0);
    double phase = get_or<double>(spec, "phase", 0.0);
    if (kind == "cos") phase += std::acos(0.0);
    return [a, omega, phase](double t) { return a * std::sin(omega * t + phase); };
  }
  if (kind == "exp") {
    double a = get_or<double>(spec, "amplitude", 1.0);
    double rate = get_or<double>(spec, "rate", 1.0);
    return [a, rate](double t) { return a * std::exp(rate * t); };
  }
  if (kind == "poly") {
    auto coeffs = get_or_fail<std::vector<double>>(spec, "coeffs");
    return [coeffs](double t) {
      double acc = 0.0;
      for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
      return acc;
    };
  }
  if (kind == "const") {
    double value = get_or_fail<double>(spec, "value");
    return [value](double) { return value; };
  }
  fail(field, "unknown numeric kind '" + kind + "'");
}

void declare_externs(FieldSystem& sys, const nlohmann::json& externs) {
  if (!externs.is_array()) fail("system.externs", "must be an array");
  for (std::size_t i = 0; i < externs.size(); ++i) {
    const nlohmann::json& entry = externs[i];
    const std::string field = "system.externs[" + std::to_string(i) + "]";
    std::string name = get_or_fail<std::string>(entry, "name");
    int arg = get_or<int>(entry, "arg", 0);
    if (entry.contains("family")) {
      std::string family = entry.at("family").get<std::string>();
      if (family == "sin" || family == "cos") {
        double a = get_or<double>(entry, "amplitude", 1.0);
        double omega = get_or<double>(entry, "omega", 1.0);
        double phase = get_or<double>(entry, "phase", 0.0);
        if (family == "sin")
          sys.declare_sin_chain(name, a, omega, phase, arg);
        else
          sys.declare_cos_chain(name, a, omega, phase, arg);
      } else if (family == "exp") {
        sys.declare_exp_chain(name, get_or<double>(entry, "amplitude", 1.0),
                              get_or<double>(entry, "rate", 1.0), arg);
      } else if (family == "poly") {
        sys.declare_poly_chain(name, get_or_fail<std::vector<double>>(entry, "coeffs"),
                               arg);
      } else {
        fail(field, "unknown extern family '" + family + "'");
      }
      continue;
    }
    ExternInfo info;
    info.name = name;
    info.arg = arg;
    if (entry.contains("derivative"))
      info.derivative = entry.at("derivative").get<std::string>();
    if (entry.contains("antiderivative"))
      info.antiderivative = entry.at("antiderivative").get<std::string>();
    if (entry.contains("numeric"))
      info.numeric = numeric_from_json(entry.at("numeric"), field + ".numeric");
    sys.declare_extern(std::move(info));
  }
}

std::vector<Expr> parse_components(const nlohmann::json& list, const FieldSystem& sys,
                                   std::size_t expected, const std::string& field) {
  if (!list.is_array() || list.size() != expected)
    fail(field, "must be an array of " + std::to_string(expected) + " DSL strings");
  std::vector<Expr> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    try {
      out.push_back(parse_expr(list[i].get<std::string>(), sys));
    } catch (const Error& e) {
      fail(field + "[" + std::to_string(i) + "]", e.what());
    }
  }
  return out;
}

}  // namespace

SpecFile parse_spec(const nlohmann::json& doc) {
  if (!doc.contains("system")) fail("system", "missing");
  const nlohmann::json& system = doc.at("system");

  int d = get_or_fail<int>(system, "d");
  auto fields = get_or_fail<std::vector<std::string>>(system, "fields");
  FieldSystem sys = [&] {
    try {
      return FieldSystem(d, fields);
    } catch (const Error& e) {
      fail("system", e.what());
    }
  }();
  if (system.contains("externs")) declare_externs(sys, system.at("externs"));
  sys.validate_links();

  Expr lagrangian = [&] {
    try {
      return parse_expr(get_or_fail<std::string>(doc, "lagrangian"), sys);
    } catch (const Error& e) {
      fail("lagrangian", e.what());
    }
  }();

  if (!doc.contains("generator")) fail("generator", "missing");
  const nlohmann::json& generator = doc.at("generator");
  std::vector<Expr> x = parse_components(get_or_fail<nlohmann::json>(generator, "X"),
                                         sys, static_cast<std::size_t>(sys.dim()),
                                         "generator.X");
  std::vector<Expr> y = parse_components(
      get_or_fail<nlohmann::json>(generator, "Y"), sys,
      static_cast<std::size_t>(sys.field_count()), "generator.Y");
  Generator gen = [&] {
    try {
      return decompose(x, y, sys);
    } catch (const Error& e) {
      fail("generator", e.what());
    }
  }();

  SpecFile spec{sys, lagrangian, gen, std::nullopt};

  if (doc.contains("scenario")) {
    const nlohmann::json& sc = doc.at("scenario");
    Scenario scenario{sys, lagrangian, gen};
    scenario.t0 = get_or<double>(sc, "t0", 0.0);
    scenario.t1 = get_or<double>(sc, "t1", 1.0);
    scenario.integrator.dt = get_or<double>(sc, "dt", 1e-3);
    scenario.q0 = get_or_fail<std::vector<double>>(sc, "q0");
    scenario.qdot0 = get_or_fail<std::vector<double>>(sc, "qdot0");
    std::string method = get_or<std::string>(sc, "method", "rk4");
    if (method != "rk4") fail("scenario.method", "only 'rk4' is supported");
    if (sc.contains("tolerances")) {
      const nlohmann::json& tol = sc.at("tolerances");
      scenario.tolerances.conservation =
          get_or<double>(tol, "conservation", scenario.tolerances.conservation);
      scenario.tolerances.finite_diff =
          get_or<double>(tol, "finite_diff", scenario.tolerances.finite_diff);
      scenario.tolerances.quadrature =
          get_or<double>(tol, "quadrature", scenario.tolerances.quadrature);
      scenario.tolerances.region_symmetry =
          get_or<double>(tol, "region_symmetry", scenario.tolerances.region_symmetry);
    }
    spec.scenario = std::move(scenario);
  }
  return spec;
}

SpecFile load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Code::domain, "cannot open spec file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Error::Code::parse, "spec file '" + path + "': " + e.what());
  }
  return parse_spec(doc);
}

}  // namespace noether::cli
