#include "noether/currents.hpp"

#include <cmath>

#include "noether/homotopy.hpp"

namespace noether {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::exact_symmetry: return "exact_symmetry";
    case Classification::quasi_symmetry: return "quasi_symmetry";
    case Classification::not_quasi_symmetry: return "not_quasi_symmetry";
  }
  return "?";
}

namespace {

Polynomial first_order_lagrangian(const Expr& lagrangian) {
  Polynomial p = to_polynomial(lagrangian);
  if (p.max_field_jet_order() > 1)
    throw Error(Error::Code::unsupported,
                "the current pipeline takes first-order Lagrangians");
  return p;
}

std::vector<Polynomial> bare_current_poly(const Polynomial& lag, const Generator& gen,
                                          const FieldSystem& sys) {
  std::vector<Polynomial> j;
  for (int mu = 0; mu < sys.dim(); ++mu) {
    Polynomial acc;
    for (int alpha = 0; alpha < sys.field_count(); ++alpha)
      acc += lag.partial(Symbol::field_jet(alpha, {mu})) *
             to_polynomial(gen.Y0[static_cast<std::size_t>(alpha)]);
    acc += lag * to_polynomial(gen.X[static_cast<std::size_t>(mu)]);
    j.push_back(std::move(acc));
  }
  return j;
}

Polynomial obstruction_poly(const Polynomial& lag, const Generator& gen,
                            const FieldSystem& sys) {
  Polynomial f;
  for (int alpha = 0; alpha < sys.field_count(); ++alpha)
    f += euler_lagrange(lag, alpha, sys) *
         to_polynomial(gen.Y0[static_cast<std::size_t>(alpha)]);
  std::vector<Polynomial> j = bare_current_poly(lag, gen, sys);
  for (int mu = 0; mu < sys.dim(); ++mu)
    f += total_derivative(j[static_cast<std::size_t>(mu)], mu, sys);
  return f;
}

}  // namespace

std::vector<Expr> bare_current(const Expr& lagrangian, const Generator& gen,
                               const FieldSystem& sys) {
  Polynomial lag = first_order_lagrangian(lagrangian);
  std::vector<Expr> out;
  for (Polynomial& j : bare_current_poly(lag, gen, sys)) out.push_back(to_expr(j));
  return out;
}

Expr obstruction(const Expr& lagrangian, const Generator& gen,
                 const FieldSystem& sys) {
  return to_expr(obstruction_poly(first_order_lagrangian(lagrangian), gen, sys));
}

Expr noether_identity_residual(const Expr& lagrangian, const Generator& gen,
                               const std::vector<Expr>& improved_current,
                               const FieldSystem& sys) {
  if (static_cast<int>(improved_current.size()) != sys.dim())
    throw Error(Error::Code::domain, "improved current needs one component per dimension");
  Polynomial lag = to_polynomial(lagrangian);
  Polynomial res;
  for (int mu = 0; mu < sys.dim(); ++mu)
    res += total_derivative(to_polynomial(improved_current[static_cast<std::size_t>(mu)]),
                            mu, sys);
  for (int alpha = 0; alpha < sys.field_count(); ++alpha)
    res += euler_lagrange(lag, alpha, sys) *
           to_polynomial(gen.Y0[static_cast<std::size_t>(alpha)]);
  return to_expr(res);
}

NoetherReport classify(const Expr& lagrangian, const Generator& gen,
                       const FieldSystem& sys) {
  Polynomial lag = first_order_lagrangian(lagrangian);

  NoetherReport report;
  std::vector<Polynomial> j = bare_current_poly(lag, gen, sys);
  for (const Polynomial& c : j) report.bare_current.push_back(to_expr(c));
  Polynomial f = obstruction_poly(lag, gen, sys);
  report.obstruction = to_expr(f);

  for (int alpha = 0; alpha < sys.field_count(); ++alpha)
    report.obstruction_el.push_back(to_expr(euler_lagrange(f, alpha, sys)));

  bool el_trivial = true;
  for (const Expr& e : report.obstruction_el)
    el_trivial = el_trivial && identically_zero(e);

  if (f.is_zero()) {
    report.classification = Classification::exact_symmetry;
    report.f_potential = std::vector<Expr>(static_cast<std::size_t>(sys.dim()), Expr());
  } else if (el_trivial) {
    report.classification = Classification::quasi_symmetry;
    report.f_potential = homotopy_potential(report.obstruction, sys).flux;
  } else {
    report.classification = Classification::not_quasi_symmetry;
    report.residual = Expr();
    return report;
  }

  std::vector<Expr> improved;
  for (int mu = 0; mu < sys.dim(); ++mu)
    improved.push_back(to_expr(
        j[static_cast<std::size_t>(mu)] -
        to_polynomial((*report.f_potential)[static_cast<std::size_t>(mu)])));
  report.improved_current = improved;
  report.residual = noether_identity_residual(lagrangian, gen, improved, sys);
  if (!identically_zero(report.residual))
    throw Error(Error::Code::internal, "Noether identity residual is nonzero");
  return report;
}

// --- fixed-region numerics -------------------------------------------------

namespace {

// Composite Simpson with an odd-interval 3/8 tail when needed.
double simpson(const std::function<double(double)>& fn, double a, double b, int n) {
  if (b == a) return 0.0;
  if (n < 2) n = 2;
  double h = (b - a) / n;
  int simpson_n = (n % 2 == 0) ? n : n - 3;
  double acc = 0.0;
  if (simpson_n >= 2) {
    double s = fn(a) + fn(a + simpson_n * h);
    for (int i = 1; i < simpson_n; ++i)
      s += fn(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    acc += s * h / 3.0;
  }
  if (simpson_n != n) {
    double t0 = a + simpson_n * h;
    acc += (fn(t0) + 3.0 * fn(t0 + h) + 3.0 * fn(t0 + 2 * h) + fn(t0 + 3 * h)) *
           3.0 * h / 8.0;
  }
  return acc;
}

int intervals_for(double lo, double hi, double step) {
  double len = hi - lo;
  int n = static_cast<int>(std::lround(len / step));
  if (n < 2) n = 2;
  return n;
}

// Numeric value of an expression at x, jets supplied by the sample.
class SampleEvaluator {
 public:
  SampleEvaluator(const Expr& e, const FieldSample& sample, const FieldSystem& sys)
      : poly_(to_polynomial(e)), sample_(sample), sys_(sys) {
    for (Symbol s : poly_.symbols()) {
      if (s.is_gauge_jet() || s.is_eps_jet() || s.kind() == Symbol::Kind::lambda_param)
        throw Error(Error::Code::numeric,
                    "region quadrature cannot evaluate formal gauge symbols");
      if (s.is_field_jet()) jets_.push_back(s);
    }
  }

  double operator()(const std::vector<double>& x) const {
    NumericPoint point;
    for (int mu = 0; mu < sys_.dim(); ++mu)
      point[Symbol::coordinate(mu)] = x[static_cast<std::size_t>(mu)];
    for (Symbol s : jets_)
      point[s] = sample_.jet(s.id(), s.derivs(), x);
    return eval_numeric(poly_, sys_, point);
  }

 private:
  Polynomial poly_;
  const FieldSample& sample_;
  const FieldSystem& sys_;
  std::vector<Symbol> jets_;
};

// Tensor-product Simpson over the axes listed in `axes`; other coordinates
// are pinned in `x`.
double integrate_axes(const SampleEvaluator& eval, const Box& region,
                      const std::vector<int>& axes, std::size_t level,
                      std::vector<double>& x, double step) {
  if (level == axes.size()) return eval(x);
  int axis = axes[level];
  double lo = region.lo[static_cast<std::size_t>(axis)];
  double hi = region.hi[static_cast<std::size_t>(axis)];
  auto fn = [&](double t) {
    x[static_cast<std::size_t>(axis)] = t;
    return integrate_axes(eval, region, axes, level + 1, x, step);
  };
  return simpson(fn, lo, hi, intervals_for(lo, hi, step));
}

}  // namespace

RegionCheckResult fixed_region_check(const Expr& f, const std::vector<Expr>* f_pot,
                                     const Box& region, const FieldSample& sample,
                                     const FieldSystem& sys,
                                     const QuadratureConfig& cfg) {
  if (region.dim() != sys.dim() ||
      region.hi.size() != region.lo.size())
    throw Error(Error::Code::domain, "region box does not match the base dimension");
  for (int mu = 0; mu < region.dim(); ++mu)
    if (!(region.lo[static_cast<std::size_t>(mu)] <
          region.hi[static_cast<std::size_t>(mu)]))
      throw Error(Error::Code::domain, "region box is empty along one axis");

  RegionCheckResult result;

  std::vector<int> all_axes;
  for (int mu = 0; mu < sys.dim(); ++mu) all_axes.push_back(mu);
  std::vector<double> x(static_cast<std::size_t>(sys.dim()), 0.0);
  SampleEvaluator f_eval(f, sample, sys);
  result.f_integral = integrate_axes(f_eval, region, all_axes, 0, x, cfg.step);
  result.region_symmetric = std::abs(result.f_integral) <= cfg.symmetry_tolerance;

  if (f_pot != nullptr) {
    if (static_cast<int>(f_pot->size()) != sys.dim())
      throw Error(Error::Code::domain, "f potential needs one component per dimension");
    double boundary = 0.0;
    for (int mu = 0; mu < sys.dim(); ++mu) {
      SampleEvaluator pot_eval((*f_pot)[static_cast<std::size_t>(mu)], sample, sys);
      std::vector<int> face_axes;
      for (int nu = 0; nu < sys.dim(); ++nu)
        if (nu != mu) face_axes.push_back(nu);
      for (double orientation : {+1.0, -1.0}) {
        std::vector<double> point(static_cast<std::size_t>(sys.dim()), 0.0);
        point[static_cast<std::size_t>(mu)] =
            orientation > 0 ? region.hi[static_cast<std::size_t>(mu)]
                            : region.lo[static_cast<std::size_t>(mu)];
        boundary += orientation *
                    integrate_axes(pot_eval, region, face_axes, 0, point, cfg.step);
      }
    }
    result.boundary_sum = boundary;
    result.mismatch = std::abs(result.f_integral - boundary);
    result.boundary_ok = *result.mismatch <= cfg.tolerance;
  }
  return result;
}

}  // namespace noether
