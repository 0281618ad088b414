#include <doctest.h>

#include "helpers.hpp"

using namespace noether;
using namespace noether::test;

TEST_SUITE("rational") {
  TEST_CASE("normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK((Rational(3, 4) / Rational(3, 4)).is_one());
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-5, 3).str() == "-5/3");
  }

  TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK_THROWS_AS(Rational(1, 0), Error);
  }
}

TEST_SUITE("expr_core") {
  TEST_CASE("parse the driven-particle Lagrangian") {
    FieldSystem sys = mechanics_with_force();
    Expr parsed = parse("(+ (* 1/2 (pow (d q 0) 2)) (* q (F x0)))", sys);
    CHECK(equal_canonical(parsed, driven_lagrangian(sys)));
  }

  TEST_CASE("parse zero") {
    FieldSystem sys = mechanics();
    CHECK(identically_zero(parse("0", sys)));
  }

  TEST_CASE("jet index out of range") {
    FieldSystem sys = mechanics();
    CHECK_THROWS_WITH_AS(parse("(d q 1)", sys),
                         doctest::Contains("jet index out of range"), ParseError);
  }

  TEST_CASE("parse errors carry positions and name the problem") {
    FieldSystem sys = mechanics();
    CHECK_THROWS_WITH_AS(parse("(+ q r)", sys), doctest::Contains("unknown symbol"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse("(G x0)", sys), doctest::Contains("undeclared extern"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse("(pow q -1)", sys),
                         doctest::Contains("non-negative"), ParseError);
    CHECK_THROWS_AS(parse("(+ q", sys), ParseError);
    CHECK_THROWS_AS(parse("q q", sys), ParseError);
  }

  TEST_CASE("extern argument coordinate is pinned by the declaration") {
    FieldSystem sys(2, {"u"});
    ExternInfo g;
    g.name = "g";
    g.arg = 1;
    sys.declare_extern(g);
    CHECK_THROWS_WITH_AS(parse("(g x0)", sys), doctest::Contains("declared on x1"),
                         ParseError);
    CHECK_NOTHROW(parse("(g x1)", sys));
  }

  TEST_CASE("algebraic identities canonicalize away") {
    FieldSystem sys = mechanics();
    // (qdot + q)^2 - q^2 - 2 q qdot = qdot^2
    Expr lhs = Expr::pow(qdot() + q(), 2) - q() * q() -
               Expr::integer(2) * q() * qdot();
    CHECK(equal_canonical(lhs, qdot() * qdot()));
    CHECK(identically_zero(qdot() * q() - q() * qdot()));
  }

  TEST_CASE("second-derivative indices are stored sorted") {
    FieldSystem sys(2, {"u"});
    CHECK(equal_canonical(parse("(d u 1 0)", sys), parse("(d u 0 1)", sys)));
    CHECK(Symbol::field_jet(0, {1, 0}) == Symbol::field_jet(0, {0, 1}));
  }

  TEST_CASE("canonicalize is idempotent on random polynomials") {
    RandomBounds bounds;
    bounds.dim = 2;
    bounds.fields = 2;
    FieldSystem sys = FieldSystem::simple(2, 2);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Expr e = random_polynomial(seed, bounds, 2);
      Expr once = canonicalize(e);
      Expr twice = canonicalize(once);
      CHECK(to_dsl(once, sys) == to_dsl(twice, sys));
      CHECK(equal_canonical(once, twice));
    }
  }

  TEST_CASE("canonicalization is a congruence for + and *") {
    RandomBounds bounds;
    bounds.fields = 2;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      Expr a = random_polynomial(3 * seed, bounds, 1);
      Expr b = random_polynomial(3 * seed + 1, bounds, 1);
      CHECK(equal_canonical(a + b, canonicalize(a) + canonicalize(b)));
      CHECK(equal_canonical(a * b, canonicalize(a) * canonicalize(b)));
    }
  }

  TEST_CASE("printer inverts parser on canonical forms") {
    FieldSystem sys = FieldSystem::simple(2, 2);
    RandomBounds bounds;
    bounds.dim = 2;
    bounds.fields = 2;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      Expr canonical = canonicalize(random_polynomial(seed, bounds, 2));
      Expr reparsed = parse(to_dsl(canonical, sys), sys);
      CHECK(equal_canonical(canonical, reparsed));
      CHECK(to_dsl(canonicalize(reparsed), sys) == to_dsl(canonical, sys));
    }
  }

  TEST_CASE("substitution: field scaling") {
    Expr e = half() * qdot() * qdot();
    Bindings scale{{Symbol::field_jet(0, {0}), Expr::lambda() * qdot()}};
    Expr expected = half() * Expr::lambda() * Expr::lambda() * qdot() * qdot();
    CHECK(equal_canonical(substitute(e, scale), expected));
  }

  TEST_CASE("substitution: empty bindings only canonicalize") {
    Expr e = qdot() * q() + q() * qdot();
    CHECK(equal_canonical(substitute(e, {}), canonicalize(e)));
  }

  TEST_CASE("substitution: zero field kills field-carrying terms") {
    FieldSystem sys = mechanics_with_force();
    Expr e = q() * Expr::extern_fn(*sys.extern_index("F"), 0);
    CHECK(identically_zero(substitute(e, {{Symbol::field(0), Expr::integer(0)}})));
  }

  TEST_CASE("numeric evaluation") {
    FieldSystem sys = mechanics_with_force();
    NumericPoint point;
    point[Symbol::field_jet(0, {0})] = 2.0;
    CHECK(eval_numeric(half() * qdot() * qdot(), sys, point) == doctest::Approx(2.0));

    NumericPoint at_quarter;
    at_quarter[Symbol::field(0)] = 3.0;
    at_quarter[Symbol::coordinate(0)] = 0.25;
    Expr qf = q() * Expr::extern_fn(*sys.extern_index("F"), 0);
    CHECK(eval_numeric(qf, sys, at_quarter) == doctest::Approx(3.0).epsilon(1e-12));

    CHECK(eval_numeric(Expr(), sys, {}) == 0.0);
  }

  TEST_CASE("numeric evaluation errors") {
    FieldSystem sys = mechanics();
    CHECK_THROWS_WITH_AS(eval_numeric(q(), sys, {}),
                         doctest::Contains("no value assigned"), Error);
    ExternInfo g;
    g.name = "g";
    int id = sys.declare_extern(g);  // no numeric definition
    NumericPoint point;
    point[Symbol::coordinate(0)] = 0.0;
    CHECK_THROWS_WITH_AS(eval_numeric(Expr::extern_fn(id, 0), sys, point),
                         doctest::Contains("no numeric definition"), Error);
  }

  TEST_CASE("evaluation agrees between tree and canonical form") {
    FieldSystem sys = FieldSystem::simple(2, 2);
    RandomBounds bounds;
    bounds.dim = 2;
    bounds.fields = 2;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      Expr e = random_polynomial(seed, bounds, 2);
      RandomStream rng(seed + 1000);
      NumericPoint point;
      for (Symbol s : to_polynomial(e).symbols())
        point[s] = 2.0 * rng.uniform() - 1.0;
      double direct = eval_numeric(e, sys, point);
      double canonical = eval_numeric(canonicalize(e), sys, point);
      CHECK(std::abs(direct - canonical) <=
            1e-12 * (1.0 + std::max(std::abs(direct), std::abs(canonical))));
    }
  }

  TEST_CASE("field strength expands to gauge jets and is antisymmetric") {
    FieldSystem sys = FieldSystem::simple(2, 1);
    Expr f01 = Expr::field_strength(0, 1);
    CHECK(equal_canonical(f01, Expr::gauge_jet(1, {0}) - Expr::gauge_jet(0, {1})));
    CHECK(identically_zero(Expr::field_strength(0, 0)));
    CHECK(identically_zero(Expr::field_strength(0, 1) + Expr::field_strength(1, 0)));
  }

  TEST_CASE("eps grading truncates at first order") {
    Expr eps = Expr::eps();
    CHECK(identically_zero(eps * eps));
    CHECK(identically_zero(Expr::eps({0}) * eps));
    CHECK_FALSE(identically_zero(eps * q()));
  }

  TEST_CASE("extern chains resolve and dangling names are errors") {
    FieldSystem sys = mechanics();
    ExternInfo v;
    v.name = "V";
    v.derivative = "Vdot";
    int id = sys.declare_extern(v);
    CHECK_THROWS_WITH_AS(sys.derivative_of(id), doctest::Contains("undeclared"),
                         Error);
    ExternInfo vdot;
    vdot.name = "Vdot";
    sys.declare_extern(vdot);
    CHECK(sys.derivative_of(id).has_value());
    CHECK_NOTHROW(sys.validate_links());
  }

  TEST_CASE("reserved and duplicate names are rejected") {
    CHECK_THROWS_AS(FieldSystem(1, {"x0"}), Error);
    CHECK_THROWS_AS(FieldSystem(1, {"lambda"}), Error);
    CHECK_THROWS_AS(FieldSystem(1, {"q", "q"}), Error);
    FieldSystem sys = mechanics();
    ExternInfo dup;
    dup.name = "q";
    CHECK_THROWS_AS(sys.declare_extern(dup), Error);
  }
}
