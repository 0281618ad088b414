#include "noether/expr.hpp"

#include <string>

namespace noether {

Expr::Expr(Node node) : node_(std::make_shared<Node>(std::move(node))) {}

Expr::Expr() : Expr(Node(Rational(0))) {}

Expr Expr::constant(Rational c) { return Expr(Node(std::move(c))); }

Expr Expr::variable(Symbol s) { return Expr(Node(s)); }

Expr Expr::field_strength(int mu, int nu) {
  if (mu == nu) return Expr();
  return Expr::gauge_jet(nu, {mu}) - Expr::gauge_jet(mu, {nu});
}

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.empty()) return Expr();
  if (terms.size() == 1) return terms.front();
  return Expr(Node(Sum{std::move(terms)}));
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.empty()) return integer(1);
  if (factors.size() == 1) return factors.front();
  return Expr(Node(Product{std::move(factors)}));
}

Expr Expr::pow(Expr base, int exponent) {
  if (exponent < 0)
    throw Error(Error::Code::unsupported, "negative exponents are not polynomial");
  return Expr(Node(Power{std::move(base), exponent}));
}

Polynomial to_polynomial(const Expr& e) {
  const Expr::Node& n = e.node();
  if (const auto* c = std::get_if<Rational>(&n)) return Polynomial::constant(*c);
  if (const auto* s = std::get_if<Symbol>(&n)) return Polynomial::variable(*s);
  if (const auto* sum = std::get_if<Expr::Sum>(&n)) {
    Polynomial acc;
    for (const Expr& t : sum->terms) acc += to_polynomial(t);
    return acc;
  }
  if (const auto* prod = std::get_if<Expr::Product>(&n)) {
    Polynomial acc = Polynomial::constant(Rational(1));
    for (const Expr& f : prod->factors) acc = acc * to_polynomial(f);
    return acc;
  }
  const auto& power = std::get<Expr::Power>(n);
  if (power.exponent < 0)
    throw Error(Error::Code::unsupported, "negative exponents are not polynomial");
  return to_polynomial(power.base).pow(power.exponent);
}

Expr to_expr(const Polynomial& p) {
  std::vector<Expr> terms;
  for (const auto& [mono, coeff] : p.terms()) {
    std::vector<Expr> factors;
    if (!coeff.is_one() || mono.empty()) factors.push_back(Expr::constant(coeff));
    for (const auto& [sym, exp] : mono) {
      Expr v = Expr::variable(sym);
      factors.push_back(exp == 1 ? v : Expr::pow(v, exp));
    }
    terms.push_back(Expr::product(std::move(factors)));
  }
  return Expr::sum(std::move(terms));
}

Expr canonicalize(const Expr& e) { return to_expr(to_polynomial(e)); }

bool identically_zero(const Expr& e) { return to_polynomial(e).is_zero(); }

bool equal_canonical(const Expr& a, const Expr& b) {
  return to_polynomial(a) == to_polynomial(b);
}

Expr substitute(const Expr& e, const Bindings& bindings) {
  std::map<Symbol, Polynomial> polys;
  for (const auto& [sym, replacement] : bindings)
    polys.emplace(sym, to_polynomial(replacement));
  return to_expr(to_polynomial(e).substitute(polys));
}

namespace {

std::string describe_symbol(Symbol s, const FieldSystem& sys) {
  switch (s.kind()) {
    case Symbol::Kind::coordinate:
      return "x" + std::to_string(s.arg());
    case Symbol::Kind::field_jet: {
      std::string out = s.id() < sys.field_count() ? sys.field_name(s.id())
                                                   : "field#" + std::to_string(s.id());
      for (int mu : s.derivs()) out += "_" + std::to_string(mu);
      return out;
    }
    case Symbol::Kind::gauge_jet: {
      std::string out = "A" + std::to_string(s.id());
      for (int mu : s.derivs()) out += "_" + std::to_string(mu);
      return out;
    }
    case Symbol::Kind::eps_jet: {
      std::string out = "eps";
      for (int mu : s.derivs()) out += "_" + std::to_string(mu);
      return out;
    }
    case Symbol::Kind::extern_fn:
      return sys.extern_info(s.id()).name;
    case Symbol::Kind::lambda_param:
      return "lambda";
  }
  return "?";
}

double eval_symbol(Symbol s, const FieldSystem& sys, const NumericPoint& point) {
  if (s.kind() == Symbol::Kind::extern_fn) {
    const ExternInfo& info = sys.extern_info(s.id());
    if (!info.numeric)
      throw Error(Error::Code::numeric,
                  "extern '" + info.name + "' has no numeric definition");
    auto arg_it = point.find(Symbol::coordinate(s.arg()));
    if (arg_it == point.end())
      throw Error(Error::Code::numeric, "no value assigned to coordinate x" +
                                            std::to_string(s.arg()));
    return info.numeric(arg_it->second);
  }
  auto it = point.find(s);
  if (it == point.end())
    throw Error(Error::Code::numeric,
                "no value assigned to symbol '" + describe_symbol(s, sys) + "'");
  return it->second;
}

double eval_node(const Expr& e, const FieldSystem& sys, const NumericPoint& point) {
  const Expr::Node& n = e.node();
  if (const auto* c = std::get_if<Rational>(&n)) return c->to_double();
  if (const auto* s = std::get_if<Symbol>(&n)) return eval_symbol(*s, sys, point);
  if (const auto* sum = std::get_if<Expr::Sum>(&n)) {
    double acc = 0.0;
    for (const Expr& t : sum->terms) acc += eval_node(t, sys, point);
    return acc;
  }
  if (const auto* prod = std::get_if<Expr::Product>(&n)) {
    double acc = 1.0;
    for (const Expr& f : prod->factors) acc *= eval_node(f, sys, point);
    return acc;
  }
  const auto& power = std::get<Expr::Power>(n);
  double base = eval_node(power.base, sys, point);
  double acc = 1.0;
  for (int i = 0; i < power.exponent; ++i) acc *= base;
  return acc;
}

}  // namespace

double eval_numeric(const Expr& e, const FieldSystem& sys, const NumericPoint& point) {
  return eval_node(e, sys, point);
}

double eval_numeric(const Polynomial& p, const FieldSystem& sys,
                    const NumericPoint& point) {
  double acc = 0.0;
  for (const auto& [mono, coeff] : p.terms()) {
    double term = coeff.to_double();
    for (const auto& [sym, exp] : mono) {
      double v = eval_symbol(sym, sys, point);
      for (int i = 0; i < exp; ++i) term *= v;
    }
    acc += term;
  }
  return acc;
}

}  // namespace noether
