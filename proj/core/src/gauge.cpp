#include "noether/gauge.hpp"

#include <string>

namespace noether {

namespace {

void require_assumptions(const Generator& gen, const FieldSystem& sys) {
  GaugeAssumptionCheck check = check_assumptions(gen, sys);
  if (!check.ok)
    throw Error(Error::Code::domain,
                "minimal coupling assumption violated: " + check.violation);
}

// delta of a single symbol under the gauge variation.
Polynomial symbol_variation(Symbol s, const Generator& gen, const FieldSystem& sys) {
  switch (s.kind()) {
    case Symbol::Kind::field_jet: {
      Polynomial v = Polynomial::variable(Symbol::eps()) *
                     to_polynomial(gen.Y0[static_cast<std::size_t>(s.id())]);
      for (int mu : s.derivs()) v = total_derivative(v, mu, sys);
      return v;
    }
    case Symbol::Kind::gauge_jet: {
      // delta A_mu = grad eps, so a gauge jet varies into an eps jet.
      std::vector<int> derivs = s.derivs();
      derivs.push_back(s.id());
      return Polynomial::variable(Symbol::eps(std::move(derivs)));
    }
    case Symbol::Kind::coordinate:
    case Symbol::Kind::extern_fn:
    case Symbol::Kind::lambda_param:
    case Symbol::Kind::eps_jet:
      return Polynomial();
  }
  throw Error(Error::Code::internal, "unknown symbol kind");
}

Polynomial gauge_variation_poly(const Polynomial& p, const Generator& gen,
                                const FieldSystem& sys) {
  Polynomial out;
  for (Symbol s : p.symbols()) {
    Polynomial delta = symbol_variation(s, gen, sys);
    if (delta.is_zero()) continue;
    out += p.partial(s) * delta;
  }
  return out;
}

Polynomial minimal_extension_poly(const Polynomial& p, const Generator& gen) {
  if (p.max_field_jet_order() > 1)
    throw Error(Error::Code::unsupported,
                "minimal extension is only defined for first-order expressions");
  std::map<Symbol, Polynomial> bindings;
  for (Symbol s : p.symbols()) {
    if (!s.is_field_jet() || s.order() != 1) continue;
    int mu = s.derivs()[0];
    bindings.emplace(s, Polynomial::variable(s) -
                            Polynomial::variable(Symbol::gauge(mu)) *
                                to_polynomial(gen.Y0[static_cast<std::size_t>(s.id())]));
  }
  return p.substitute(bindings);
}

}  // namespace

GaugeAssumptionCheck check_assumptions(const Generator& gen, const FieldSystem& sys) {
  (void)sys;
  GaugeAssumptionCheck check;
  if (!gen.horizontal_is_zero()) {
    check.ok = false;
    check.violation = "X != 0 (the horizontal generator must vanish)";
    return check;
  }
  for (std::size_t alpha = 0; alpha < gen.Y0.size(); ++alpha) {
    Polynomial y = to_polynomial(gen.Y0[alpha]);
    if (y.max_field_jet_order() >= 1) {
      check.ok = false;
      check.violation = "Y0 component " + std::to_string(alpha) +
                        " depends on field derivatives";
      return check;
    }
  }
  return check;
}

Expr minimal_extension(const Expr& h, const Generator& gen, const FieldSystem& sys) {
  require_assumptions(gen, sys);
  return to_expr(minimal_extension_poly(to_polynomial(h), gen));
}

GaugeConditionCheck check_potential_conditions(const std::vector<Expr>& f_pot,
                                               const Generator& gen,
                                               const FieldSystem& sys) {
  GaugeConditionCheck check;
  const int d = sys.dim();
  if (static_cast<int>(f_pot.size()) != d)
    throw Error(Error::Code::domain, "f potential needs one component per dimension");
  std::vector<Polynomial> f;
  for (const Expr& e : f_pot) f.push_back(to_polynomial(e));

  auto note = [&check](const std::string& text) {
    if (!check.detail.empty()) check.detail += "; ";
    check.detail += text;
  };
  auto at = [](int mu, int nu) {
    return " (mu=" + std::to_string(mu) + ", nu=" + std::to_string(nu) + ")";
  };

  // Both conditions are diagnosed independently so a violation of either is
  // always named, even when the other fails too.
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      Polynomial contraction;
      for (int alpha = 0; alpha < sys.field_count(); ++alpha) {
        Polynomial dmu_nu =
            f[static_cast<std::size_t>(mu)].partial(Symbol::field_jet(alpha, {nu}));
        Polynomial dnu_mu =
            f[static_cast<std::size_t>(nu)].partial(Symbol::field_jet(alpha, {mu}));
        if (check.antisymmetry_ok && !(dmu_nu + dnu_mu).is_zero()) {
          check.antisymmetry_ok = false;
          note("df^mu/dphi^alpha_nu is not mu<->nu antisymmetric" + at(mu, nu));
        }
        contraction += dmu_nu * to_polynomial(gen.Y0[static_cast<std::size_t>(alpha)]);
      }
      if (check.contraction_ok && !contraction.is_zero()) {
        check.contraction_ok = false;
        note("the contraction (df^mu/dphi^alpha_nu) Y0^alpha does not vanish" +
             at(mu, nu));
      }
    }
  }
  return check;
}

GaugedSystem gauge_lagrangian(const Expr& lagrangian, const Generator& gen,
                              const std::vector<Expr>& f_pot,
                              const FieldSystem& sys) {
  require_assumptions(gen, sys);
  Polynomial lag = to_polynomial(lagrangian);
  if (lag.max_field_jet_order() > 1)
    throw Error(Error::Code::unsupported,
                "gauging takes first-order Lagrangians");

  GaugeConditionCheck conditions = check_potential_conditions(f_pot, gen, sys);
  if (!conditions.ok())
    throw Error(Error::Code::domain,
                "divergence potential unfit for coupling: " + conditions.detail);

  // The potential must actually witness the obstruction f = d_mu f^mu; the
  // divergence identity behind the residual proof depends on it.
  Polynomial f_check;
  for (int alpha = 0; alpha < sys.field_count(); ++alpha)
    f_check += euler_lagrange(lag, alpha, sys) *
               to_polynomial(gen.Y0[static_cast<std::size_t>(alpha)]);
  for (int mu = 0; mu < sys.dim(); ++mu) {
    Polynomial dl_djet;
    for (int alpha = 0; alpha < sys.field_count(); ++alpha)
      dl_djet += lag.partial(Symbol::field_jet(alpha, {mu})) *
                 to_polynomial(gen.Y0[static_cast<std::size_t>(alpha)]);
    f_check += total_derivative(dl_djet, mu, sys);
    f_check -= total_derivative(to_polynomial(f_pot[static_cast<std::size_t>(mu)]),
                                mu, sys);
  }
  if (!f_check.is_zero())
    throw Error(Error::Code::domain,
                "divergence potential does not reproduce the obstruction function");

  GaugedSystem out;
  Polynomial gauged = minimal_extension_poly(lag, gen);
  for (int mu = 0; mu < sys.dim(); ++mu) {
    Polynomial ft = minimal_extension_poly(
        to_polynomial(f_pot[static_cast<std::size_t>(mu)]), gen);
    gauged += Polynomial::variable(Symbol::gauge(mu)) * ft;
    out.f_tilde.push_back(to_expr(ft));
  }
  out.gauged_lagrangian = to_expr(gauged);

  Polynomial residual = gauge_variation_poly(gauged, gen, sys);
  for (int mu = 0; mu < sys.dim(); ++mu)
    residual -= total_derivative(
        Polynomial::variable(Symbol::eps()) *
            to_polynomial(out.f_tilde[static_cast<std::size_t>(mu)]),
        mu, sys);
  out.transform_residual = to_expr(residual);
  if (!residual.is_zero())
    throw Error(Error::Code::internal,
                "gauge transformation of the gauged Lagrangian is not the "
                "expected divergence");
  return out;
}

std::vector<Expr> covariance_residual(const Generator& gen, const FieldSystem& sys) {
  require_assumptions(gen, sys);
  std::vector<Expr> out;
  for (int alpha = 0; alpha < sys.field_count(); ++alpha) {
    Polynomial y = to_polynomial(gen.Y0[static_cast<std::size_t>(alpha)]);
    for (int mu = 0; mu < sys.dim(); ++mu) {
      Polynomial covariant =
          Polynomial::variable(Symbol::field_jet(alpha, {mu})) -
          Polynomial::variable(Symbol::gauge(mu)) * y;
      Polynomial lhs = gauge_variation_poly(covariant, gen, sys);
      // D_mu Y0 = d_mu Y0 - A_mu Y0^beta dY0/dphi^beta
      Polynomial cov_y = total_derivative(y, mu, sys);
      for (int beta = 0; beta < sys.field_count(); ++beta)
        cov_y -= Polynomial::variable(Symbol::gauge(mu)) *
                 to_polynomial(gen.Y0[static_cast<std::size_t>(beta)]) *
                 y.partial(Symbol::field(beta));
      Polynomial rhs = Polynomial::variable(Symbol::eps()) * cov_y;
      out.push_back(to_expr(lhs - rhs));
    }
  }
  return out;
}

Expr gauge_variation(const Expr& e, const Generator& gen, const FieldSystem& sys) {
  require_assumptions(gen, sys);
  return to_expr(gauge_variation_poly(to_polynomial(e), gen, sys));
}

}  // namespace noether
