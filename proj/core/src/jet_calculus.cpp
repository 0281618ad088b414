#include "noether/jet_calculus.hpp"

#include <string>

namespace noether {

namespace {

void check_pure_base_dependence(const Polynomial& p, const std::string& what) {
  for (Symbol s : p.symbols()) {
    if (s.is_field_jet())
      throw Error(Error::Code::domain, what + " contains jet variables");
    if (s.is_gauge_jet() || s.is_eps_jet() || s.kind() == Symbol::Kind::lambda_param)
      throw Error(Error::Code::domain, what + " contains formal engine symbols");
  }
}

void check_vertical_class(const Polynomial& p, const std::string& what) {
  for (Symbol s : p.symbols()) {
    if (s.is_field_jet() && s.order() > 1)
      throw Error(Error::Code::domain,
                  what + " depends on second-order jet variables");
    if (s.is_gauge_jet() || s.is_eps_jet() || s.kind() == Symbol::Kind::lambda_param)
      throw Error(Error::Code::domain, what + " contains formal engine symbols");
  }
}

// Derivative of a single symbol; zero or a one-term polynomial.
Polynomial symbol_derivative(Symbol s, int mu, const FieldSystem& sys) {
  switch (s.kind()) {
    case Symbol::Kind::coordinate:
      return s.arg() == mu ? Polynomial::constant(Rational(1)) : Polynomial();
    case Symbol::Kind::field_jet:
    case Symbol::Kind::gauge_jet:
    case Symbol::Kind::eps_jet:
      return Polynomial::variable(s.with_derivative(mu));
    case Symbol::Kind::extern_fn: {
      if (s.arg() != mu) return Polynomial();
      auto next = sys.derivative_of(s.id());
      if (!next)
        throw Error(Error::Code::domain, "extern '" + sys.extern_info(s.id()).name +
                                             "' has no declared derivative");
      return Polynomial::variable(Symbol::extern_fn(*next, s.arg()));
    }
    case Symbol::Kind::lambda_param:
      return Polynomial();  // lambda is a formal parameter, constant on the base
  }
  throw Error(Error::Code::internal, "unknown symbol kind");
}

void check_strict_result(const Polynomial& p) {
  for (Symbol s : p.symbols()) {
    if (s.is_field_jet() && s.order() > 2)
      throw Error(Error::Code::unsupported,
                  "third-order jet variable survives the total derivative");
    if (s.is_gauge_jet() && s.order() > 1)
      throw Error(Error::Code::unsupported,
                  "second-order gauge potential jet survives the total derivative");
  }
}

}  // namespace

Generator Generator::make(std::vector<Expr> x, std::vector<Expr> y0,
                          const FieldSystem& sys) {
  if (static_cast<int>(x.size()) != sys.dim())
    throw Error(Error::Code::domain, "generator X needs one component per base dimension");
  if (static_cast<int>(y0.size()) != sys.field_count())
    throw Error(Error::Code::domain, "generator Y0 needs one component per field");
  Generator gen;
  for (const Expr& xi : x) {
    Polynomial p = to_polynomial(xi);
    check_pure_base_dependence(p, "generator X");
    gen.X.push_back(to_expr(p));
  }
  for (const Expr& yi : y0) {
    Polynomial p = to_polynomial(yi);
    check_vertical_class(p, "generator Y0");
    gen.Y0.push_back(to_expr(p));
  }
  return gen;
}

bool Generator::horizontal_is_zero() const {
  for (const Expr& xi : X)
    if (!identically_zero(xi)) return false;
  return true;
}

Generator decompose(const std::vector<Expr>& x, const std::vector<Expr>& y,
                    const FieldSystem& sys) {
  if (static_cast<int>(y.size()) != sys.field_count())
    throw Error(Error::Code::domain, "generator Y needs one component per field");
  std::vector<Expr> y0;
  for (int alpha = 0; alpha < sys.field_count(); ++alpha) {
    Polynomial acc = to_polynomial(y[static_cast<std::size_t>(alpha)]);
    for (int mu = 0; mu < sys.dim(); ++mu)
      acc -= Polynomial::variable(Symbol::field_jet(alpha, {mu})) *
             to_polynomial(x[static_cast<std::size_t>(mu)]);
    y0.push_back(to_expr(acc));
  }
  return Generator::make(x, std::move(y0), sys);
}

Polynomial total_derivative(const Polynomial& p, int mu, const FieldSystem& sys) {
  if (mu < 0 || mu >= sys.dim())
    throw Error(Error::Code::domain, "derivative index out of range");
  Polynomial out;
  for (const auto& [mono, coeff] : p.terms()) {
    for (std::size_t i = 0; i < mono.size(); ++i) {
      Polynomial ds = symbol_derivative(mono[i].first, mu, sys);
      if (ds.is_zero()) continue;
      Monomial rest = mono;
      if (rest[i].second == 1)
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      else
        rest[i].second -= 1;
      Polynomial factor;
      factor.add_term(std::move(rest), coeff * Rational(mono[i].second));
      out += factor * ds;
    }
  }
  return out;
}

Expr total_derivative(const Expr& e, int mu, const FieldSystem& sys, JetLimit limit) {
  Polynomial result = total_derivative(to_polynomial(e), mu, sys);
  if (limit == JetLimit::strict) check_strict_result(result);
  return to_expr(result);
}

Polynomial euler_lagrange(const Polynomial& lagrangian, int alpha,
                          const FieldSystem& sys) {
  if (alpha < 0 || alpha >= sys.field_count())
    throw Error(Error::Code::domain, "field index out of range");
  if (lagrangian.max_field_jet_order() > 2)
    throw Error(Error::Code::unsupported,
                "Euler-Lagrange derivative supports at most second-order Lagrangians");
  Polynomial el = lagrangian.partial(Symbol::field(alpha));
  for (int mu = 0; mu < sys.dim(); ++mu)
    el -= total_derivative(lagrangian.partial(Symbol::field_jet(alpha, {mu})), mu, sys);
  for (int a = 0; a < sys.dim(); ++a)
    for (int b = a; b < sys.dim(); ++b) {
      Polynomial second = lagrangian.partial(Symbol::field_jet(alpha, {a, b}));
      if (second.is_zero()) continue;
      el += total_derivative(total_derivative(second, a, sys), b, sys);
    }
  return el;
}

Expr euler_lagrange(const Expr& lagrangian, int alpha, const FieldSystem& sys) {
  return to_expr(euler_lagrange(to_polynomial(lagrangian), alpha, sys));
}

Expr prolong_apply(const std::vector<Expr>& y0, const Expr& e,
                   const FieldSystem& sys) {
  if (static_cast<int>(y0.size()) != sys.field_count())
    throw Error(Error::Code::domain, "Y0 needs one component per field");
  Polynomial target = to_polynomial(e);
  if (target.max_field_jet_order() > 2)
    throw Error(Error::Code::unsupported,
                "jet prolongation is implemented through second order");
  Polynomial out;
  for (int alpha = 0; alpha < sys.field_count(); ++alpha) {
    Polynomial y = to_polynomial(y0[static_cast<std::size_t>(alpha)]);
    check_vertical_class(y, "Y0");
    out += y * target.partial(Symbol::field(alpha));
    for (int mu = 0; mu < sys.dim(); ++mu)
      out += total_derivative(y, mu, sys) *
             target.partial(Symbol::field_jet(alpha, {mu}));
    for (int a = 0; a < sys.dim(); ++a)
      for (int b = a; b < sys.dim(); ++b) {
        Polynomial coeff = target.partial(Symbol::field_jet(alpha, {a, b}));
        if (coeff.is_zero()) continue;
        out += total_derivative(total_derivative(y, a, sys), b, sys) * coeff;
      }
  }
  return to_expr(out);
}

}  // namespace noether
