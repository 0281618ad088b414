#ifndef NOETHER_GAUGE_HPP
#define NOETHER_GAUGE_HPP

#include <string>
#include <vector>

#include "noether/expr.hpp"
#include "noether/field_system.hpp"
#include "noether/jet_calculus.hpp"

namespace noether {

/// Minimal coupling needs a purely vertical generator whose components
/// depend on the fields and the base point only.
struct GaugeAssumptionCheck {
  bool ok = true;
  std::string violation;  // names the violated clause when !ok
};

GaugeAssumptionCheck check_assumptions(const Generator& gen, const FieldSystem& sys);

/// Replaces every first-order field jet phi^alpha_mu by the covariant
/// combination phi^alpha_mu - A_mu Y0^alpha. Inputs with second-order jets
/// are rejected: minimal extension is only well-defined at first order.
Expr minimal_extension(const Expr& h, const Generator& gen, const FieldSystem& sys);

/// The two structural conditions on the divergence potential f^mu before it
/// may be coupled: df^mu/dphi^alpha_nu must be antisymmetric in mu,nu, and
/// its contraction with Y0 must vanish.
struct GaugeConditionCheck {
  bool antisymmetry_ok = true;
  bool contraction_ok = true;
  std::string detail;
  bool ok() const { return antisymmetry_ok && contraction_ok; }
};

GaugeConditionCheck check_potential_conditions(const std::vector<Expr>& f_pot,
                                               const Generator& gen,
                                               const FieldSystem& sys);

struct GaugedSystem {
  Expr gauged_lagrangian;       // minimal extension of L plus A_mu f~^mu
  std::vector<Expr> f_tilde;    // minimally extended f^mu
  Expr transform_residual;      // delta L_gauged - d_mu(eps f~^mu); zero on success
};

/// Gauges a global quasi-symmetry with potential f_pot. Verifies the
/// assumptions and both f^mu conditions first, then checks symbolically that
/// the gauge variation of the result is the divergence d_mu(eps f~^mu). A
/// nonzero residual is an internal error, never returned silently.
GaugedSystem gauge_lagrangian(const Expr& lagrangian, const Generator& gen,
                              const std::vector<Expr>& f_pot,
                              const FieldSystem& sys);

/// delta(D_mu phi^alpha) - eps D_mu Y0^alpha per (alpha, mu), flattened as
/// alpha * d + mu. Identically zero for every generator passing the
/// assumption check.
std::vector<Expr> covariance_residual(const Generator& gen, const FieldSystem& sys);

/// The infinitesimal gauge variation: delta phi = eps Y0, delta A_mu is the
/// gradient of eps, jets vary by total derivatives of those, and terms of
/// second order in eps are dropped by the kernel grading.
Expr gauge_variation(const Expr& e, const Generator& gen, const FieldSystem& sys);

}  // namespace noether

#endif
