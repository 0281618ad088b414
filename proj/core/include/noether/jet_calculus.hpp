#ifndef NOETHER_JET_CALCULUS_HPP
#define NOETHER_JET_CALCULUS_HPP

#include <vector>

#include "noether/expr.hpp"
#include "noether/field_system.hpp"

namespace noether {

/// Variation generators: the horizontal components X^mu (functions of the
/// base coordinates only) and the vertical components Y0^alpha (at most
/// first order in the jets). The full generator Y = Y0 + phi_mu X^mu is
/// never stored; decompose() converts (X, Y) input into this form.
struct Generator {
  std::vector<Expr> X;
  std::vector<Expr> Y0;

  /// Validates shapes and the expression classes of both parts.
  static Generator make(std::vector<Expr> x, std::vector<Expr> y0,
                        const FieldSystem& sys);

  bool horizontal_is_zero() const;
};

/// Splits a generator given as (X, Y) into vertical and horizontal parts:
/// Y0^alpha = Y^alpha - phi^alpha_mu X^mu.
Generator decompose(const std::vector<Expr>& x, const std::vector<Expr>& y,
                    const FieldSystem& sys);

enum class JetLimit {
  strict,   // result must stay within the supported class (field jets <= 2)
  relaxed,  // transient higher orders allowed (Euler-Lagrange internals)
};

/// Total derivative d_mu: explicit coordinate derivative plus the chain rule
/// through every jet variable. Externs differentiate through their declared
/// chains; an extern with no declared derivative is an error, not a new
/// symbol. In strict mode the expanded result must not retain jet variables
/// above second order.
Expr total_derivative(const Expr& e, int mu, const FieldSystem& sys,
                      JetLimit limit = JetLimit::strict);
Polynomial total_derivative(const Polynomial& p, int mu, const FieldSystem& sys);

/// Euler-Lagrange derivative for Lagrangians of at most second jet order:
///   dL/dphi^alpha - d_mu dL/dphi^alpha_mu + sum_{mu<=nu} d_mu d_nu dL/dphi^alpha_{munu}.
/// The result may legitimately reach fourth jet order.
Expr euler_lagrange(const Expr& lagrangian, int alpha, const FieldSystem& sys);
Polynomial euler_lagrange(const Polynomial& lagrangian, int alpha,
                          const FieldSystem& sys);

/// Applies the jet prolongation of the vertical vector field Y0 to an
/// expression of at most second jet order:
///   Y0^a d/dphi^a + (d_mu Y0^a) d/dphi^a_mu + sum_{mu<=nu} (d_mu d_nu Y0^a) d/dphi^a_{munu}.
Expr prolong_apply(const std::vector<Expr>& y0, const Expr& e,
                   const FieldSystem& sys);

}  // namespace noether

#endif
