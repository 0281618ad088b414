#include "noether/numverify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace noether {

namespace {

// Equations of motion in the affine form EL_alpha = b_alpha - M_{alpha beta} qddot^beta.
struct MotionSystem {
  std::vector<Polynomial> rhs;                // b_alpha, no accelerations
  std::vector<std::vector<Polynomial>> mass;  // M_{alpha beta}, no accelerations
  int n = 0;
};

MotionSystem build_motion_system(const Scenario& s) {
  Polynomial lag = to_polynomial(s.lagrangian);
  if (s.sys.dim() != 1)
    throw Error(Error::Code::unsupported,
                "numeric integration supports one base dimension");
  if (lag.max_field_jet_order() > 1)
    throw Error(Error::Code::unsupported,
                "numeric integration takes first-order Lagrangians");

  MotionSystem sys;
  sys.n = s.sys.field_count();
  std::map<Symbol, Polynomial> drop_acc;
  for (int beta = 0; beta < sys.n; ++beta)
    drop_acc.emplace(Symbol::field_jet(beta, {0, 0}), Polynomial());

  for (int alpha = 0; alpha < sys.n; ++alpha) {
    Polynomial el = euler_lagrange(lag, alpha, s.sys);
    std::vector<Polynomial> row;
    for (int beta = 0; beta < sys.n; ++beta) {
      Polynomial m = -el.partial(Symbol::field_jet(beta, {0, 0}));
      if (m.max_field_jet_order() > 1)
        throw Error(Error::Code::unsupported,
                    "equations of motion are not affine in the accelerations");
      row.push_back(std::move(m));
    }
    sys.mass.push_back(std::move(row));
    sys.rhs.push_back(el.substitute(drop_acc));
  }
  return sys;
}

NumericPoint first_order_point(double t, const std::vector<double>& q,
                               const std::vector<double>& qdot) {
  NumericPoint point;
  point[Symbol::coordinate(0)] = t;
  for (std::size_t alpha = 0; alpha < q.size(); ++alpha) {
    point[Symbol::field(static_cast<int>(alpha))] = q[alpha];
    point[Symbol::field_jet(static_cast<int>(alpha), {0})] = qdot[alpha];
  }
  return point;
}

// Gaussian elimination with partial pivoting; small dense systems only.
std::vector<double> solve_linear(std::vector<std::vector<double>> m,
                                 std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row)
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    if (std::abs(m[pivot][col]) < 1e-12)
      throw Error(Error::Code::numeric,
                  "mass matrix is singular along the trajectory");
    std::swap(m[col], m[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t row = col + 1; row < n; ++row) {
      double factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t row = n; row-- > 0;) {
    double acc = b[row];
    for (std::size_t k = row + 1; k < n; ++k) acc -= m[row][k] * x[k];
    x[row] = acc / m[row][row];
  }
  return x;
}

std::vector<double> accelerations(const MotionSystem& motion, const FieldSystem& sys,
                                  double t, const std::vector<double>& q,
                                  const std::vector<double>& qdot) {
  NumericPoint point = first_order_point(t, q, qdot);
  std::vector<std::vector<double>> m(static_cast<std::size_t>(motion.n),
                                     std::vector<double>(static_cast<std::size_t>(motion.n)));
  std::vector<double> b(static_cast<std::size_t>(motion.n));
  // EL_alpha = rhs_alpha - mass_{alpha beta} qddot^beta, so on-shell
  // accelerations solve mass * qddot = rhs.
  for (int alpha = 0; alpha < motion.n; ++alpha) {
    b[static_cast<std::size_t>(alpha)] =
        eval_numeric(motion.rhs[static_cast<std::size_t>(alpha)], sys, point);
    for (int beta = 0; beta < motion.n; ++beta)
      m[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(beta)] =
          eval_numeric(motion.mass[static_cast<std::size_t>(alpha)]
                                  [static_cast<std::size_t>(beta)],
                       sys, point);
  }
  return solve_linear(std::move(m), std::move(b));
}

NumericPoint trajectory_point(const Trajectory& tr, std::size_t i) {
  NumericPoint point;
  point[Symbol::coordinate(0)] = tr.t[i];
  for (std::size_t alpha = 0; alpha < tr.q.size(); ++alpha) {
    int a = static_cast<int>(alpha);
    point[Symbol::field(a)] = tr.q[alpha][i];
    point[Symbol::field_jet(a, {0})] = tr.qdot[alpha][i];
    point[Symbol::field_jet(a, {0, 0})] = tr.qddot[alpha][i];
  }
  return point;
}

}  // namespace

Trajectory integrate(const Scenario& s) {
  if (!(s.t0 < s.t1))
    throw Error(Error::Code::domain, "scenario needs t0 < t1");
  if (s.integrator.dt <= 0)
    throw Error(Error::Code::domain, "scenario needs a positive step size");
  const double span = s.t1 - s.t0;
  const double steps_exact = span / s.integrator.dt;
  const long long steps = std::llround(steps_exact);
  if (steps < 1 || std::abs(steps_exact - static_cast<double>(steps)) > 1e-9 * steps_exact)
    throw Error(Error::Code::domain, "step size must divide the region length");
  const std::size_t n = static_cast<std::size_t>(s.sys.field_count());
  if (s.q0.size() != n || s.qdot0.size() != n)
    throw Error(Error::Code::domain, "initial data needs one entry per field");

  MotionSystem motion = build_motion_system(s);

  Trajectory tr;
  tr.t0 = s.t0;
  tr.dt = s.integrator.dt;
  tr.q.assign(n, {});
  tr.qdot.assign(n, {});
  tr.qddot.assign(n, {});

  std::vector<double> q = s.q0;
  std::vector<double> qdot = s.qdot0;

  auto record = [&](double t) {
    tr.t.push_back(t);
    std::vector<double> acc = accelerations(motion, s.sys, t, q, qdot);
    for (std::size_t alpha = 0; alpha < n; ++alpha) {
      tr.q[alpha].push_back(q[alpha]);
      tr.qdot[alpha].push_back(qdot[alpha]);
      tr.qddot[alpha].push_back(acc[alpha]);
    }
  };

  record(s.t0);
  const double h = s.integrator.dt;
  std::vector<double> k1q(n), k1v(n), k2q(n), k2v(n), k3q(n), k3v(n), k4q(n), k4v(n);
  std::vector<double> tq(n), tv(n);
  for (long long step = 0; step < steps; ++step) {
    const double t = s.t0 + static_cast<double>(step) * h;

    std::vector<double> a = accelerations(motion, s.sys, t, q, qdot);
    for (std::size_t i = 0; i < n; ++i) { k1q[i] = qdot[i]; k1v[i] = a[i]; }

    for (std::size_t i = 0; i < n; ++i) { tq[i] = q[i] + 0.5 * h * k1q[i]; tv[i] = qdot[i] + 0.5 * h * k1v[i]; }
    a = accelerations(motion, s.sys, t + 0.5 * h, tq, tv);
    for (std::size_t i = 0; i < n; ++i) { k2q[i] = tv[i]; k2v[i] = a[i]; }

    for (std::size_t i = 0; i < n; ++i) { tq[i] = q[i] + 0.5 * h * k2q[i]; tv[i] = qdot[i] + 0.5 * h * k2v[i]; }
    a = accelerations(motion, s.sys, t + 0.5 * h, tq, tv);
    for (std::size_t i = 0; i < n; ++i) { k3q[i] = tv[i]; k3v[i] = a[i]; }

    for (std::size_t i = 0; i < n; ++i) { tq[i] = q[i] + h * k3q[i]; tv[i] = qdot[i] + h * k3v[i]; }
    a = accelerations(motion, s.sys, t + h, tq, tv);
    for (std::size_t i = 0; i < n; ++i) { k4q[i] = tv[i]; k4v[i] = a[i]; }

    for (std::size_t i = 0; i < n; ++i) {
      q[i] += h / 6.0 * (k1q[i] + 2.0 * (k2q[i] + k3q[i]) + k4q[i]);
      qdot[i] += h / 6.0 * (k1v[i] + 2.0 * (k2v[i] + k3v[i]) + k4v[i]);
    }
    record(t + h);
  }
  return tr;
}

ConservationStats current_drift(const Scenario& s, const Expr& density,
                                const Trajectory& tr) {
  if (tr.samples() < 2)
    throw Error(Error::Code::domain, "trajectory too short");
  Polynomial p = to_polynomial(density);
  std::vector<double> values(tr.samples());
  for (std::size_t i = 0; i < tr.samples(); ++i)
    values[i] = eval_numeric(p, s.sys, trajectory_point(tr, i));

  ConservationStats stats;
  stats.initial = values.front();
  stats.tolerance = s.tolerances.conservation;
  double lo = values.front(), hi = values.front();
  for (double v : values) {
    stats.max_drift = std::max(stats.max_drift, std::abs(v - stats.initial));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  stats.spread = hi - lo;
  for (std::size_t i = 1; i + 1 < tr.samples(); ++i)
    stats.max_divergence_fd = std::max(
        stats.max_divergence_fd, std::abs((values[i + 1] - values[i - 1]) / (2 * tr.dt)));
  stats.pass = stats.max_drift <= stats.tolerance * (1.0 + std::abs(stats.initial));
  return stats;
}

ConservationStats conservation_report(const Scenario& s, const NoetherReport& report,
                                      const Trajectory& tr) {
  if (!report.improved_current)
    throw Error(Error::Code::domain,
                "no improved current to verify (classification: " +
                    std::string(to_string(report.classification)) + ")");
  return current_drift(s, report.improved_current->front(), tr);
}

FiniteDiffReport finite_diff_check(const Expr& e, const Scenario& s,
                                   const Trajectory& tr, double tolerance) {
  Polynomial p = to_polynomial(e);
  if (p.max_field_jet_order() > 1)
    throw Error(Error::Code::domain,
                "finite-difference check takes first-order expressions");
  Polynomial dp = total_derivative(p, 0, s.sys);

  FiniteDiffReport report;
  report.tolerance = tolerance;
  std::vector<double> values(tr.samples());
  for (std::size_t i = 0; i < tr.samples(); ++i)
    values[i] = eval_numeric(p, s.sys, trajectory_point(tr, i));
  for (std::size_t i = 1; i + 1 < tr.samples(); ++i) {
    double fd = (values[i + 1] - values[i - 1]) / (2 * tr.dt);
    double symbolic = eval_numeric(dp, s.sys, trajectory_point(tr, i));
    report.max_error = std::max(report.max_error, std::abs(fd - symbolic));
  }
  report.pass = report.max_error <= tolerance;
  return report;
}

double TrajectorySample::jet(int alpha, const std::vector<int>& derivs,
                             const std::vector<double>& x) const {
  if (derivs.size() > 2)
    throw Error(Error::Code::numeric, "trajectory samples carry jets up to second order");
  const auto& series = derivs.empty() ? tr_.q
                       : derivs.size() == 1 ? tr_.qdot
                                            : tr_.qddot;
  const auto& column = series[static_cast<std::size_t>(alpha)];
  double idx = (x[0] - tr_.t0) / tr_.dt;
  auto nearest = std::llround(idx);
  if (nearest >= 0 && static_cast<std::size_t>(nearest) < column.size() &&
      std::abs(idx - static_cast<double>(nearest)) < 1e-9)
    return column[static_cast<std::size_t>(nearest)];
  // between grid points: linear interpolation
  if (idx < 0.0 || idx > static_cast<double>(column.size() - 1))
    throw Error(Error::Code::numeric, "sample time outside the trajectory");
  std::size_t lo = static_cast<std::size_t>(idx);
  std::size_t hi = std::min(lo + 1, column.size() - 1);
  double w = idx - static_cast<double>(lo);
  return (1.0 - w) * column[lo] + w * column[hi];
}

void write_trajectory_csv(const Trajectory& tr, std::ostream& out) {
  out << "t";
  for (std::size_t alpha = 0; alpha < tr.q.size(); ++alpha)
    out << ",q" << alpha << ",qdot" << alpha << ",qddot" << alpha;
  out << "\n";
  out.precision(17);
  for (std::size_t i = 0; i < tr.samples(); ++i) {
    out << tr.t[i];
    for (std::size_t alpha = 0; alpha < tr.q.size(); ++alpha)
      out << "," << tr.q[alpha][i] << "," << tr.qdot[alpha][i] << ","
          << tr.qddot[alpha][i];
    out << "\n";
  }
}

}  // namespace noether
