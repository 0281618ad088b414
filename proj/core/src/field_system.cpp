#include "noether/field_system.hpp"

#include <cctype>
#include <cmath>

namespace noether {

FieldSystem::FieldSystem(int dim, std::vector<std::string> field_names)
    : dim_(dim), fields_(std::move(field_names)) {
  if (dim_ < 1 || dim_ > 8)
    throw Error(Error::Code::domain, "base dimension must be between 1 and 8");
  if (fields_.empty())
    throw Error(Error::Code::domain, "a field system needs at least one field");
  for (int alpha = 0; alpha < field_count(); ++alpha) {
    const std::string& name = fields_[static_cast<std::size_t>(alpha)];
    if (!is_valid_name(name) || is_reserved(name))
      throw Error(Error::Code::domain, "invalid field name '" + name + "'");
    if (!field_ids_.emplace(name, alpha).second)
      throw Error(Error::Code::domain, "duplicate field name '" + name + "'");
  }
}

FieldSystem FieldSystem::simple(int dim, int n_fields) {
  std::vector<std::string> names;
  if (n_fields == 1) {
    names.push_back("q");
  } else {
    for (int i = 0; i < n_fields; ++i) names.push_back("q" + std::to_string(i));
  }
  return FieldSystem(dim, std::move(names));
}

const std::string& FieldSystem::field_name(int alpha) const {
  if (alpha < 0 || alpha >= field_count())
    throw Error(Error::Code::domain, "field index out of range");
  return fields_[static_cast<std::size_t>(alpha)];
}

std::optional<int> FieldSystem::field_index(std::string_view name) const {
  auto it = field_ids_.find(name);
  if (it == field_ids_.end()) return std::nullopt;
  return it->second;
}

void FieldSystem::check_fresh_name(const std::string& name) const {
  if (!is_valid_name(name) || is_reserved(name))
    throw Error(Error::Code::domain, "invalid extern name '" + name + "'");
  if (field_ids_.count(name) || extern_ids_.count(name))
    throw Error(Error::Code::domain, "name '" + name + "' is already declared");
}

int FieldSystem::declare_extern(ExternInfo info) {
  check_fresh_name(info.name);
  if (info.arg < 0 || info.arg >= dim_)
    throw Error(Error::Code::domain,
                "extern '" + info.name + "' argument index out of range");
  int id = extern_count();
  extern_ids_.emplace(info.name, id);
  externs_.push_back(std::move(info));
  return id;
}

const ExternInfo& FieldSystem::extern_info(int id) const {
  if (id < 0 || id >= extern_count())
    throw Error(Error::Code::domain, "extern id out of range");
  return externs_[static_cast<std::size_t>(id)];
}

std::optional<int> FieldSystem::extern_index(std::string_view name) const {
  auto it = extern_ids_.find(name);
  if (it == extern_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FieldSystem::resolve_link(const std::optional<std::string>& link,
                                             const std::string& role, int id) const {
  if (!link) return std::nullopt;
  auto target = extern_index(*link);
  if (!target)
    throw Error(Error::Code::domain, "extern '" + extern_info(id).name +
                                         "' names undeclared " + role + " '" +
                                         *link + "'");
  return target;
}

std::optional<int> FieldSystem::derivative_of(int id) const {
  return resolve_link(extern_info(id).derivative, "derivative", id);
}

std::optional<int> FieldSystem::antiderivative_of(int id) const {
  return resolve_link(extern_info(id).antiderivative, "antiderivative", id);
}

void FieldSystem::validate_links() const {
  for (int id = 0; id < extern_count(); ++id) {
    derivative_of(id);
    antiderivative_of(id);
  }
}

namespace {

// Declares chain[0] -> chain[1] -> ... with derivative links forward and
// antiderivative links backward; element 1 is the base name.
int declare_chain(FieldSystem& sys, std::vector<ExternInfo> chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i + 1 < chain.size()) chain[i].derivative = chain[i + 1].name;
    if (i > 0) chain[i].antiderivative = chain[i - 1].name;
  }
  int base_id = -1;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    int id = sys.declare_extern(chain[i]);
    if (i == 1) base_id = id;
  }
  return base_id;
}

ExternInfo sinusoid(std::string name, double amplitude, double omega,
                    double phase, int arg) {
  ExternInfo info;
  info.name = std::move(name);
  info.arg = arg;
  info.numeric = [amplitude, omega, phase](double t) {
    return amplitude * std::sin(omega * t + phase);
  };
  return info;
}

}  // namespace

int FieldSystem::declare_sin_chain(const std::string& name, double amplitude,
                                   double omega, double phase, int arg) {
  if (omega == 0.0)
    throw Error(Error::Code::domain, "sinusoid chain needs a nonzero frequency");
  const double half_pi = std::acos(0.0);
  // Each derivative scales by omega and advances the phase by pi/2.
  return declare_chain(
      *this, {sinusoid(name + "int", amplitude / omega, omega, phase - half_pi, arg),
              sinusoid(name, amplitude, omega, phase, arg),
              sinusoid(name + "dot", amplitude * omega, omega, phase + half_pi, arg),
              sinusoid(name + "ddot", amplitude * omega * omega, omega,
                       phase + 2 * half_pi, arg)});
}

int FieldSystem::declare_cos_chain(const std::string& name, double amplitude,
                                   double omega, double phase, int arg) {
  return declare_sin_chain(name, amplitude, omega, phase + std::acos(0.0), arg);
}

int FieldSystem::declare_exp_chain(const std::string& name, double amplitude,
                                   double rate, int arg) {
  if (rate == 0.0)
    throw Error(Error::Code::domain, "exponential chain needs a nonzero rate");
  auto member = [&](std::string n, double a) {
    ExternInfo info;
    info.name = std::move(n);
    info.arg = arg;
    info.numeric = [a, rate](double t) { return a * std::exp(rate * t); };
    return info;
  };
  return declare_chain(*this, {member(name + "int", amplitude / rate),
                               member(name, amplitude),
                               member(name + "dot", amplitude * rate),
                               member(name + "ddot", amplitude * rate * rate)});
}

int FieldSystem::declare_poly_chain(const std::string& name,
                                    std::vector<double> coeffs, int arg) {
  auto member = [&](std::string n, std::vector<double> c) {
    ExternInfo info;
    info.name = std::move(n);
    info.arg = arg;
    info.numeric = [c = std::move(c)](double t) {
      double acc = 0.0;
      for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
      return acc;
    };
    return info;
  };
  auto derive = [](const std::vector<double>& c) {
    std::vector<double> out;
    for (std::size_t k = 1; k < c.size(); ++k)
      out.push_back(static_cast<double>(k) * c[k]);
    return out;
  };
  auto integrate = [](const std::vector<double>& c) {
    std::vector<double> out{0.0};
    for (std::size_t k = 0; k < c.size(); ++k)
      out.push_back(c[k] / static_cast<double>(k + 1));
    return out;
  };
  return declare_chain(*this, {member(name + "int", integrate(coeffs)),
                               member(name, coeffs),
                               member(name + "dot", derive(coeffs)),
                               member(name + "ddot", derive(derive(coeffs)))});
}

bool FieldSystem::is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    return false;
  for (char ch : name)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  return true;
}

bool FieldSystem::is_reserved(std::string_view name) {
  if (name == "d" || name == "pow" || name == "lambda" || name == "eps")
    return true;
  // x0, x1, ... and A0, A1, ... address coordinates and the gauge potential.
  if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'A')) {
    bool digits = true;
    for (std::size_t i = 1; i < name.size(); ++i)
      digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
    if (digits) return true;
  }
  return false;
}

}  // namespace noether
