#ifndef NOETHER_CURRENTS_HPP
#define NOETHER_CURRENTS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "noether/expr.hpp"
#include "noether/field_system.hpp"
#include "noether/jet_calculus.hpp"

namespace noether {

enum class Classification {
  exact_symmetry,      // the obstruction function vanishes identically
  quasi_symmetry,      // the obstruction is a total divergence
  not_quasi_symmetry,  // the obstruction has nonvanishing EL derivative
};

const char* to_string(Classification c);

/// Full output of the current pipeline for one (Lagrangian, generator) pair.
struct NoetherReport {
  std::vector<Expr> bare_current;  // j^mu = (dL/dphi^alpha_mu) Y0^alpha + L X^mu
  Expr obstruction;                // f = EL(L)·Y0 + d_mu j^mu
  Classification classification = Classification::not_quasi_symmetry;
  std::optional<std::vector<Expr>> f_potential;      // f^mu with f = d_mu f^mu
  std::optional<std::vector<Expr>> improved_current; // J^mu = j^mu - f^mu
  Expr residual;                   // d_mu J^mu + EL(L)·Y0; zero whenever J exists
  std::vector<Expr> obstruction_el;  // EL(f) per field, the classification witness
};

std::vector<Expr> bare_current(const Expr& lagrangian, const Generator& gen,
                               const FieldSystem& sys);

Expr obstruction(const Expr& lagrangian, const Generator& gen,
                 const FieldSystem& sys);

/// Runs the whole pipeline: bare current, obstruction, classification by the
/// exact EL test, divergence potential via the homotopy when applicable,
/// improved current, and the identity residual (asserted zero on success).
NoetherReport classify(const Expr& lagrangian, const Generator& gen,
                       const FieldSystem& sys);

/// canonicalize(d_mu J^mu + EL(L)·Y0). Zero for every current produced by
/// classify; nonzero values diagnose a wrong current.
Expr noether_identity_residual(const Expr& lagrangian, const Generator& gen,
                               const std::vector<Expr>& improved_current,
                               const FieldSystem& sys);

// --- fixed-region numerics -------------------------------------------------

/// Axis-aligned box in the base space; an interval when d == 1.
struct Box {
  std::vector<double> lo, hi;
  int dim() const { return static_cast<int>(lo.size()); }
};

/// Supplies numeric jet values phi^alpha, its gradient and Hessian at base
/// points, for quadrature over a region. Implementations must be consistent
/// (the derivative entries really are derivatives of the value entry).
class FieldSample {
 public:
  virtual ~FieldSample() = default;
  virtual double jet(int alpha, const std::vector<int>& derivs,
                     const std::vector<double>& x) const = 0;
};

/// Closed-form sample backed by a callable.
class AnalyticSample final : public FieldSample {
 public:
  using Fn = std::function<double(int alpha, const std::vector<int>& derivs,
                                  const std::vector<double>& x)>;
  explicit AnalyticSample(Fn fn) : fn_(std::move(fn)) {}
  double jet(int alpha, const std::vector<int>& derivs,
             const std::vector<double>& x) const override {
    return fn_(alpha, derivs, x);
  }

 private:
  Fn fn_;
};

struct QuadratureConfig {
  double step = 1e-3;               // target Simpson grid spacing per axis
  double tolerance = 1e-6;          // boundary-representation tolerance
  double symmetry_tolerance = 1e-8; // |integral of f| threshold for the flag
};

struct RegionCheckResult {
  double f_integral = 0.0;              // integral of f over the box
  std::optional<double> boundary_sum;   // sum over faces of f^mu · n_mu
  std::optional<double> mismatch;       // |f_integral - boundary_sum|
  bool boundary_ok = true;              // mismatch within tolerance
  bool region_symmetric = false;        // |f_integral| within symmetry tolerance
};

/// Integrates the obstruction f over the box with composite Simpson
/// quadrature and, when a potential f^mu is supplied, compares against the
/// boundary form (for d == 1 simply f^0 at the endpoints). The two agree for
/// any sample field, on-shell or not.
RegionCheckResult fixed_region_check(const Expr& f, const std::vector<Expr>* f_pot,
                                     const Box& region, const FieldSample& sample,
                                     const FieldSystem& sys,
                                     const QuadratureConfig& cfg);

}  // namespace noether

#endif
