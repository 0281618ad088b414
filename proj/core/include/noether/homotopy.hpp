#ifndef NOETHER_HOMOTOPY_HPP
#define NOETHER_HOMOTOPY_HPP

#include <utility>
#include <vector>

#include "noether/expr.hpp"
#include "noether/field_system.hpp"

namespace noether {

/// Divergence potential produced by the scaling homotopy: Lambda^mu with
/// L = d_mu Lambda^mu, split into the field-carrying part (from the lambda
/// integral) plus the zero-field part h = L|_{phi=0} routed through its
/// x^0-antiderivative H0.
struct HomotopyResult {
  std::vector<Expr> flux;  // Lambda^mu, one component per base dimension
  Expr zero_field_part;    // h
  Expr h_antiderivative;   // H0 (added to flux[0])
};

/// Constructs Lambda^mu for a Lagrangian with identically vanishing
/// Euler-Lagrange derivatives (checked; hard error otherwise). The field
/// jets are scaled by a formal parameter lambda, the scaled first- and
/// second-derivative terms are assembled, and the lambda integral over [0,1]
/// is taken exactly term by term. The conclusion d_mu Lambda^mu = L is
/// verified on construction.
HomotopyResult homotopy_potential(const Expr& lagrangian, const FieldSystem& sys);

/// h = L with every field jet set to zero, and its exact x^0-antiderivative.
/// Polynomials in x^0 integrate by the power rule; externs integrate through
/// their declared antiderivative names (error naming the extern otherwise).
std::pair<Expr, Expr> zero_field_part(const Expr& lagrangian, const FieldSystem& sys);

}  // namespace noether

#endif
