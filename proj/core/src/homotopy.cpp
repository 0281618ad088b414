#include "noether/homotopy.hpp"

#include <algorithm>
#include <string>

#include "noether/jet_calculus.hpp"

namespace noether {

namespace {

void check_homotopy_class(const Polynomial& p) {
  if (p.max_field_jet_order() > 2)
    throw Error(Error::Code::unsupported,
                "homotopy supports Lagrangians of at most second jet order");
  for (Symbol s : p.symbols())
    if (s.is_gauge_jet() || s.is_eps_jet() || s.kind() == Symbol::Kind::lambda_param)
      throw Error(Error::Code::domain,
                  "homotopy input must not contain gauge or formal symbols");
}

/// phi-jets -> lambda * phi-jets.
Polynomial scale_fields(const Polynomial& p) {
  std::map<Symbol, Polynomial> bindings;
  for (Symbol s : p.symbols())
    if (s.is_field_jet())
      bindings.emplace(s, Polynomial::variable(Symbol::lambda()) *
                              Polynomial::variable(s));
  return p.substitute(bindings);
}

/// Exact integral over lambda in [0,1]: lambda^k picks up 1/(k+1).
Polynomial integrate_lambda(const Polynomial& p) {
  Polynomial out;
  for (const auto& [mono, coeff] : p.terms()) {
    Monomial rest;
    int k = 0;
    for (const auto& [s, e] : mono) {
      if (s.kind() == Symbol::Kind::lambda_param)
        k = e;
      else
        rest.emplace_back(s, e);
    }
    out.add_term(std::move(rest), coeff / Rational(k + 1));
  }
  return out;
}

Polynomial drop_fields(const Polynomial& p) {
  std::map<Symbol, Polynomial> bindings;
  for (Symbol s : p.symbols())
    if (s.is_field_jet()) bindings.emplace(s, Polynomial());
  return p.substitute(bindings);
}

// Exact antiderivative along x^0 of a monomial of the shape
//   (x^0)^k * E(x^0) * R,  R independent of x^0,
// by the power rule and integration by parts through declared
// antiderivative chains.
Polynomial antiderivative_x0_monomial(Monomial mono, Rational coeff,
                                      const FieldSystem& sys) {
  const Symbol x0 = Symbol::coordinate(0);
  int power = 0;
  int extern_pos = -1;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    const auto& [s, e] = mono[i];
    if (s == x0) {
      power = e;
    } else if (s.kind() == Symbol::Kind::extern_fn && s.arg() == 0) {
      if (extern_pos >= 0 || e > 1)
        throw Error(Error::Code::unsupported,
                    "no closed-form antiderivative: product of externs '" +
                        sys.extern_info(s.id()).name + "' along x0");
      extern_pos = static_cast<int>(i);
    }
  }

  if (extern_pos < 0) {
    // pure power rule
    Monomial out;
    bool placed = false;
    for (const auto& [s, e] : mono) {
      if (s == x0) {
        out.emplace_back(s, e + 1);
        placed = true;
      } else {
        out.emplace_back(s, e);
      }
    }
    if (!placed) {
      out.emplace_back(x0, 1);
      std::sort(out.begin(), out.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    Polynomial p;
    p.add_term(std::move(out), coeff / Rational(power + 1));
    return p;
  }

  // residual factor without x^0 and without the extern
  Monomial rest;
  for (std::size_t i = 0; i < mono.size(); ++i)
    if (static_cast<int>(i) != extern_pos && mono[i].first != x0)
      rest.push_back(mono[i]);
  Polynomial rest_poly;
  rest_poly.add_term(std::move(rest), Rational(1));

  int extern_id = mono[static_cast<std::size_t>(extern_pos)].first.id();
  // IBP(k, E) = t^k A - k * IBP(k-1, A), with A the declared antiderivative.
  Polynomial acc;
  Rational sign(1);
  Rational factor(1);
  int k = power;
  int current = extern_id;
  while (true) {
    auto anti = sys.antiderivative_of(current);
    if (!anti)
      throw Error(Error::Code::domain,
                  "extern '" + sys.extern_info(current).name +
                      "' has no declared antiderivative");
    current = *anti;
    Monomial m{{Symbol::extern_fn(current, 0), 1}};
    if (k > 0) m.insert(m.begin(), {Symbol::coordinate(0), k});
    std::sort(m.begin(), m.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    acc.add_term(std::move(m), sign * factor);
    if (k == 0) break;
    sign = -sign;
    factor *= Rational(k);
    --k;
  }
  return (coeff * acc) * rest_poly;
}

Polynomial antiderivative_x0(const Polynomial& p, const FieldSystem& sys) {
  Polynomial out;
  for (const auto& [mono, coeff] : p.terms())
    out += antiderivative_x0_monomial(mono, coeff, sys);
  return out;
}

}  // namespace

std::pair<Expr, Expr> zero_field_part(const Expr& lagrangian, const FieldSystem& sys) {
  Polynomial p = to_polynomial(lagrangian);
  check_homotopy_class(p);
  Polynomial h = drop_fields(p);
  Polynomial h0 = antiderivative_x0(h, sys);
  return {to_expr(h), to_expr(h0)};
}

HomotopyResult homotopy_potential(const Expr& lagrangian, const FieldSystem& sys) {
  Polynomial p = to_polynomial(lagrangian);
  check_homotopy_class(p);
  for (int alpha = 0; alpha < sys.field_count(); ++alpha) {
    if (!euler_lagrange(p, alpha, sys).is_zero())
      throw Error(Error::Code::domain,
                  "homotopy requires identically vanishing Euler-Lagrange "
                  "derivatives; component " +
                      std::to_string(alpha) + " does not vanish");
  }

  const int d = sys.dim();
  std::vector<Polynomial> flux(static_cast<std::size_t>(d));
  for (int mu = 0; mu < d; ++mu) {
    Polynomial acc;
    for (int alpha = 0; alpha < sys.field_count(); ++alpha) {
      Polynomial phi = Polynomial::variable(Symbol::field(alpha));
      acc += scale_fields(p.partial(Symbol::field_jet(alpha, {mu}))) * phi;
      for (int nu = 0; nu < d; ++nu) {
        // Second derivatives enter through the symmetrized partial: the
        // sorted jet symbol phi_{ab} carries the full mixed coefficient, so
        // off-diagonal pairs weigh in with one half per ordered (mu, nu).
        Polynomial m = p.partial(
            Symbol::field_jet(alpha, {std::min(mu, nu), std::max(mu, nu)}));
        if (m.is_zero()) continue;
        if (mu != nu) m = Rational(1, 2) * m;
        Polynomial scaled = scale_fields(m);
        acc -= Rational(2) * (total_derivative(scaled, nu, sys) * phi);
        acc += total_derivative(scaled * phi, nu, sys);
      }
    }
    flux[static_cast<std::size_t>(mu)] = integrate_lambda(acc);
  }

  Polynomial h = drop_fields(p);
  Polynomial h0 = antiderivative_x0(h, sys);
  flux[0] += h0;

  // Lemma conclusion, checked exactly before anything is returned.
  Polynomial divergence;
  for (int mu = 0; mu < d; ++mu)
    divergence += total_derivative(flux[static_cast<std::size_t>(mu)], mu, sys);
  if (!(divergence - p).is_zero())
    throw Error(Error::Code::internal,
                "homotopy potential does not reproduce the Lagrangian");

  HomotopyResult result;
  for (const Polynomial& component : flux) result.flux.push_back(to_expr(component));
  result.zero_field_part = to_expr(h);
  result.h_antiderivative = to_expr(h0);
  return result;
}

}  // namespace noether
