#ifndef NOETHER_TESTS_HELPERS_HPP
#define NOETHER_TESTS_HELPERS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "noether/noether.hpp"

namespace noether::test {

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// d=1, one field named q.
inline FieldSystem mechanics() { return FieldSystem::simple(1, 1); }

/// d=1, one field, plus the sin-family chain F (F = sin(2 pi t)): Fint, F,
/// Fdot, Fddot with numeric definitions.
inline FieldSystem mechanics_with_force(const std::string& name = "F") {
  FieldSystem sys = mechanics();
  sys.declare_sin_chain(name, 1.0, kTwoPi);
  return sys;
}

inline Expr parse(const std::string& text, const FieldSystem& sys) {
  return parse_expr(text, sys);
}

inline Generator shift_generator(const FieldSystem& sys) {
  return decompose({Expr::integer(0)}, {Expr::integer(1)}, sys);
}

inline Generator time_translation_generator(const FieldSystem& sys) {
  return decompose({Expr::integer(-1)}, {Expr::integer(0)}, sys);
}

inline Generator vertical_generator(std::vector<Expr> y0, const FieldSystem& sys) {
  std::vector<Expr> x(static_cast<std::size_t>(sys.dim()), Expr::integer(0));
  return Generator::make(std::move(x), std::move(y0), sys);
}

// Frequently used mechanics symbols.
inline Expr q() { return Expr::field(0); }
inline Expr qdot() { return Expr::field_jet(0, {0}); }
inline Expr qddot() { return Expr::field_jet(0, {0, 0}); }
inline Expr tvar() { return Expr::coordinate(0); }
inline Expr half() { return Expr::rational(1, 2); }

/// 1/2 qdot^2 + q F(t): the driven free particle (unit mass).
inline Expr driven_lagrangian(const FieldSystem& sys) {
  return half() * qdot() * qdot() + q() * Expr::extern_fn(*sys.extern_index("F"), 0);
}

/// 1/2 qdot^2 - 1/2 q^2: the unit harmonic oscillator.
inline Expr oscillator_lagrangian() {
  return half() * qdot() * qdot() - half() * q() * q();
}

/// Canonical DSL text of random_lagrangian(seed 0, default bounds), frozen
/// when the generator was written; guards the reproducibility contract.
inline constexpr const char* kSeedZeroLagrangian = "-1";

}  // namespace noether::test

#endif
