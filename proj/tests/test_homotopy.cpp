#include <doctest.h>

#include "helpers.hpp"

using namespace noether;
using namespace noether::test;

namespace {

void check_divergence(const HomotopyResult& result, const Expr& lagrangian,
                      const FieldSystem& sys) {
  Polynomial acc;
  for (int mu = 0; mu < sys.dim(); ++mu)
    acc += total_derivative(to_polynomial(result.flux[static_cast<std::size_t>(mu)]),
                            mu, sys);
  CHECK(acc == to_polynomial(lagrangian));
}

}  // namespace

TEST_SUITE("homotopy") {
  TEST_CASE("first-derivative term: L = 2 q qdot") {
    FieldSystem sys = mechanics();
    Expr lag = Expr::integer(2) * q() * qdot();
    HomotopyResult result = homotopy_potential(lag, sys);
    CHECK(equal_canonical(result.flux[0], q() * q()));
    check_divergence(result, lag, sys);
  }

  TEST_CASE("constant coefficient: L = qdot") {
    FieldSystem sys = mechanics();
    HomotopyResult result = homotopy_potential(qdot(), sys);
    CHECK(equal_canonical(result.flux[0], q()));
  }

  TEST_CASE("second-derivative terms: L = q qddot + qdot^2") {
    FieldSystem sys = mechanics();
    Expr lag = q() * qddot() + qdot() * qdot();
    HomotopyResult result = homotopy_potential(lag, sys);
    CHECK(equal_canonical(result.flux[0], q() * qdot()));
    check_divergence(result, lag, sys);
  }

  TEST_CASE("pure background: L = F(t) with declared antiderivative") {
    FieldSystem sys = mechanics_with_force();
    Expr f = Expr::extern_fn(*sys.extern_index("F"), 0);
    HomotopyResult result = homotopy_potential(f, sys);
    CHECK(equal_canonical(result.flux[0],
                          Expr::extern_fn(*sys.extern_index("Fint"), 0)));
    CHECK(equal_canonical(result.zero_field_part, f));
  }

  TEST_CASE("zero Lagrangian") {
    FieldSystem sys = mechanics();
    HomotopyResult result = homotopy_potential(Expr(), sys);
    CHECK(identically_zero(result.flux[0]));
    CHECK(identically_zero(result.zero_field_part));
  }

  TEST_CASE("zero-field split") {
    FieldSystem sys = mechanics();
    sys.declare_sin_chain("V", 1.0, kTwoPi);
    Expr v = Expr::extern_fn(*sys.extern_index("V"), 0);
    Expr vint = Expr::extern_fn(*sys.extern_index("Vint"), 0);

    auto [h1, h01] = zero_field_part(driven_lagrangian(mechanics_with_force()),
                                     mechanics_with_force());
    CHECK(identically_zero(h1));
    CHECK(identically_zero(h01));

    auto [h2, h02] = zero_field_part(half() * qdot() * qdot() - v, sys);
    CHECK(equal_canonical(h2, -v));
    CHECK(equal_canonical(h02, -vint));

    auto [h3, h03] = zero_field_part(tvar(), sys);
    CHECK(equal_canonical(h3, tvar()));
    CHECK(equal_canonical(h03, half() * tvar() * tvar()));
  }

  TEST_CASE("polynomial-times-extern antiderivatives integrate by parts") {
    FieldSystem sys = mechanics();
    ExternInfo g, gint, gintint;
    g.name = "g";
    g.antiderivative = "gint";
    gint.name = "gint";
    gint.derivative = "g";
    gint.antiderivative = "gintint";
    gintint.name = "gintint";
    gintint.derivative = "gint";
    int g_id = sys.declare_extern(g);
    int gint_id = sys.declare_extern(gint);
    int gintint_id = sys.declare_extern(gintint);

    Expr ge = Expr::extern_fn(g_id, 0);
    auto [h, h0] = zero_field_part(tvar() * ge, sys);
    CHECK(equal_canonical(h, tvar() * ge));
    // integration by parts: t gint - gintint, and d0 gives back h
    CHECK(equal_canonical(h0, tvar() * Expr::extern_fn(gint_id, 0) -
                                  Expr::extern_fn(gintint_id, 0)));
    CHECK(equal_canonical(total_derivative(h0, 0, sys), tvar() * ge));

    // t^2 g would need a third antiderivative level: error names the extern
    CHECK_THROWS_WITH_AS(zero_field_part(tvar() * tvar() * ge, sys),
                         doctest::Contains("gintint"), Error);
  }

  TEST_CASE("nonvanishing Euler-Lagrange derivative is a hard error") {
    FieldSystem sys = mechanics();
    CHECK_THROWS_WITH_AS(homotopy_potential(half() * qdot() * qdot(), sys),
                         doctest::Contains("identically vanishing"), Error);
  }

  TEST_CASE("missing antiderivative names the extern") {
    FieldSystem sys = mechanics();
    ExternInfo g;
    g.name = "g";
    int id = sys.declare_extern(g);
    CHECK_THROWS_WITH_AS(homotopy_potential(Expr::extern_fn(id, 0), sys),
                         doctest::Contains("'g'"), Error);
  }

  TEST_CASE("no antiderivative symbols when the zero-field part vanishes") {
    FieldSystem sys = mechanics_with_force();
    int f_id = *sys.extern_index("F");
    // L = d0(q^2 F) carries the extern but has empty zero-field part
    Expr lag = total_derivative(q() * q() * Expr::extern_fn(f_id, 0), 0, sys);
    HomotopyResult result = homotopy_potential(lag, sys);
    CHECK(identically_zero(result.zero_field_part));
    int fint_id = *sys.extern_index("Fint");
    for (Symbol s : to_polynomial(result.flux[0]).symbols())
      CHECK_FALSE((s.kind() == Symbol::Kind::extern_fn && s.id() == fint_id));
    check_divergence(result, lag, sys);
  }

  TEST_CASE("linearity in the Lagrangian") {
    FieldSystem sys = mechanics();
    Expr l1 = Expr::integer(2) * q() * qdot();
    Expr l2 = q() * qddot() + qdot() * qdot();
    Expr combo = Expr::rational(1, 3) * l1 - Expr::integer(2) * l2;
    HomotopyResult r1 = homotopy_potential(l1, sys);
    HomotopyResult r2 = homotopy_potential(l2, sys);
    HomotopyResult rc = homotopy_potential(combo, sys);
    CHECK(equal_canonical(rc.flux[0], Expr::rational(1, 3) * r1.flux[0] -
                                          Expr::integer(2) * r2.flux[0]));
  }

  TEST_CASE("mixed second derivatives in two dimensions") {
    FieldSystem sys = FieldSystem::simple(2, 1);
    // L = x0 * phi_{01} = d1(x0 phi_0), EL-trivial
    Expr lag = Expr::coordinate(0) * Expr::field_jet(0, {0, 1});
    HomotopyResult result = homotopy_potential(lag, sys);
    check_divergence(result, lag, sys);
  }

  TEST_CASE("round-trip: divergences are reproduced from their potential") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      RandomBounds bounds;
      bounds.dim = 1 + static_cast<int>(seed % 2);
      bounds.fields = 1 + static_cast<int>((seed / 2) % 2);
      FieldSystem sys = FieldSystem::simple(bounds.dim, bounds.fields);
      Expr lag = random_divergence(seed, bounds, sys);
      HomotopyResult result = homotopy_potential(lag, sys);
      check_divergence(result, lag, sys);
    }
  }
}
