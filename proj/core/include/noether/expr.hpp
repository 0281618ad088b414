#ifndef NOETHER_EXPR_HPP
#define NOETHER_EXPR_HPP

#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "noether/field_system.hpp"
#include "noether/polynomial.hpp"
#include "noether/rational.hpp"
#include "noether/symbol.hpp"

namespace noether {

/// Immutable expression tree over the jet alphabet: rational constants,
/// symbols, sums, products, and non-negative integer powers. Values are
/// cheap handles onto shared nodes and safe to copy across threads.
///
/// Semantic identity is decided on the canonical polynomial form, not on the
/// tree: use canonicalize/to_polynomial for every "is this zero" question.
class Expr {
 public:
  struct Sum;
  struct Product;
  struct Power;
  using Node = std::variant<Rational, Symbol, Sum, Product, Power>;

  /// Default-constructed expression is the zero constant.
  Expr();

  static Expr constant(Rational c);
  static Expr integer(long long n) { return constant(Rational(n)); }
  static Expr rational(long long num, long long den) {
    return constant(Rational(num, den));
  }
  static Expr variable(Symbol s);

  static Expr coordinate(int mu) { return variable(Symbol::coordinate(mu)); }
  static Expr field(int alpha) { return variable(Symbol::field(alpha)); }
  static Expr field_jet(int alpha, std::vector<int> derivs) {
    return variable(Symbol::field_jet(alpha, std::move(derivs)));
  }
  static Expr gauge(int mu) { return variable(Symbol::gauge(mu)); }
  static Expr gauge_jet(int mu, std::vector<int> derivs) {
    return variable(Symbol::gauge_jet(mu, std::move(derivs)));
  }
  static Expr extern_fn(int extern_id, int arg) {
    return variable(Symbol::extern_fn(extern_id, arg));
  }
  static Expr lambda() { return variable(Symbol::lambda()); }
  static Expr eps(std::vector<int> derivs = {}) {
    return variable(Symbol::eps(std::move(derivs)));
  }

  /// Abelian field strength d_mu A_nu - d_nu A_mu, expanded immediately; the
  /// canonical alphabet carries only A and its first derivatives.
  static Expr field_strength(int mu, int nu);

  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr pow(Expr base, int exponent);

  const Node& node() const;

  friend Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
  friend Expr operator-(const Expr& a, const Expr& b) {
    return sum({a, product({integer(-1), b})});
  }
  friend Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
  friend Expr operator-(const Expr& a) { return product({integer(-1), a}); }

 private:
  explicit Expr(Node node);
  std::shared_ptr<const Node> node_;
};

struct Expr::Sum {
  std::vector<Expr> terms;
};
struct Expr::Product {
  std::vector<Expr> factors;
};
struct Expr::Power {
  Expr base;
  int exponent;
};

inline const Expr::Node& Expr::node() const { return *node_; }

/// Expands an expression tree into the canonical polynomial. Throws
/// Error::unsupported on non-polynomial structure.
Polynomial to_polynomial(const Expr& e);

/// Rebuilds the canonical tree of a polynomial: a sorted sum of monomial
/// products. to_expr followed by to_polynomial is the identity.
Expr to_expr(const Polynomial& p);

/// Canonical normal form; idempotent, and structural equality of canonical
/// forms coincides with semantic equality.
Expr canonicalize(const Expr& e);

bool identically_zero(const Expr& e);
bool equal_canonical(const Expr& a, const Expr& b);

using Bindings = std::map<Symbol, Expr>;

/// Simultaneous syntactic replacement of symbols, then canonicalization.
Expr substitute(const Expr& e, const Bindings& bindings);

/// Numeric assignment for evaluation: coordinates, jet variables, gauge jets,
/// lambda and eps as needed. Externs evaluate through their declared numeric
/// definition applied to the assigned coordinate.
using NumericPoint = std::map<Symbol, double>;

double eval_numeric(const Expr& e, const FieldSystem& sys, const NumericPoint& point);
double eval_numeric(const Polynomial& p, const FieldSystem& sys, const NumericPoint& point);

}  // namespace noether

#endif
