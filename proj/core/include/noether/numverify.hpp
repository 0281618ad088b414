#ifndef NOETHER_NUMVERIFY_HPP
#define NOETHER_NUMVERIFY_HPP

#include <iosfwd>
#include <vector>

#include "noether/currents.hpp"
#include "noether/expr.hpp"
#include "noether/field_system.hpp"
#include "noether/jet_calculus.hpp"

namespace noether {

struct IntegratorConfig {
  double dt = 1e-3;  // fixed step, classical fourth-order Runge-Kutta
};

struct Tolerances {
  double conservation = 1e-6;
  double finite_diff = 1e-6;
  double quadrature = 1e-6;
  double region_symmetry = 1e-8;
};

/// Numeric configuration for a one-dimensional mechanics run: the region is
/// the time interval [t0, t1], initial data fixes position and velocity per
/// field, and the Euler-Lagrange system must be solvable for the
/// accelerations along the trajectory.
struct Scenario {
  FieldSystem sys;
  Expr lagrangian;
  Generator gen;
  double t0 = 0.0;
  double t1 = 1.0;
  std::vector<double> q0;
  std::vector<double> qdot0;
  IntegratorConfig integrator;
  Tolerances tolerances;
};

struct Trajectory {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<double> t;
  std::vector<std::vector<double>> q;      // [alpha][sample]
  std::vector<std::vector<double>> qdot;   // [alpha][sample]
  std::vector<std::vector<double>> qddot;  // from the solved EL system
  std::size_t samples() const { return t.size(); }
};

/// Integrates the equations of motion with fixed-step RK4. Accelerations are
/// recovered from the mass-matrix solve at every stage, so second-order jet
/// values along the trajectory are exact on-shell rather than differenced.
Trajectory integrate(const Scenario& s);

struct ConservationStats {
  double initial = 0.0;            // value at t0
  double max_drift = 0.0;          // max |value - initial|
  double spread = 0.0;             // max - min over the run
  double max_divergence_fd = 0.0;  // max |central-difference time derivative|
  double tolerance = 0.0;
  bool pass = false;               // max_drift <= tolerance * (1 + |initial|)
};

/// Drift statistics of an arbitrary density along the trajectory.
ConservationStats current_drift(const Scenario& s, const Expr& density,
                                const Trajectory& tr);

/// Drift of the improved current J^0 from a classified report; requires the
/// report to carry one.
ConservationStats conservation_report(const Scenario& s, const NoetherReport& report,
                                      const Trajectory& tr);

struct FiniteDiffReport {
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Cross-checks the symbolic total time derivative of a first-order
/// expression against central differences along the trajectory.
FiniteDiffReport finite_diff_check(const Expr& e, const Scenario& s,
                                   const Trajectory& tr, double tolerance);

/// FieldSample view of a trajectory for region quadrature (d == 1). Sample
/// times that fall between stored grid points interpolate linearly.
class TrajectorySample final : public FieldSample {
 public:
  explicit TrajectorySample(const Trajectory& tr) : tr_(tr) {}
  double jet(int alpha, const std::vector<int>& derivs,
             const std::vector<double>& x) const override;

 private:
  const Trajectory& tr_;
};

/// CSV export, header `t,q0,qdot0,qddot0,...` with one column triple per field.
void write_trajectory_csv(const Trajectory& tr, std::ostream& out);

}  // namespace noether

#endif
