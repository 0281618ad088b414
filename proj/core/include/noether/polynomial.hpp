#ifndef NOETHER_POLYNOMIAL_HPP
#define NOETHER_POLYNOMIAL_HPP

#include <map>
#include <utility>
#include <vector>

#include "noether/rational.hpp"
#include "noether/symbol.hpp"

namespace noether {

/// A monomial: sorted (symbol, exponent) pairs, exponents >= 1. The empty
/// monomial is the constant term.
using Monomial = std::vector<std::pair<Symbol, int>>;

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Expanded multivariate polynomial over Rational: the canonical form of the
/// expression kernel. Two expressions are semantically equal iff their
/// Polynomial images are equal. Monomials whose total degree in the formal
/// gauge parameter eps is two or more are dropped on insertion, since
/// products of infinitesimals vanish at first order.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(Rational c);
  static Polynomial variable(Symbol s);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational, MonomialLess>& terms() const { return terms_; }

  /// Coefficient of the given monomial (zero if absent).
  Rational coefficient(const Monomial& m) const;

  void add_term(Monomial m, const Rational& c);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  Polynomial pow(int exponent) const;

  /// Formal partial derivative with respect to one symbol.
  Polynomial partial(Symbol s) const;

  /// Simultaneous substitution symbol -> polynomial; unbound symbols stay.
  Polynomial substitute(const std::map<Symbol, Polynomial>& bindings) const;

  /// Highest jet order of any field jet occurring (-1 when none occur).
  int max_field_jet_order() const;
  int max_gauge_jet_order() const;
  int degree_in(Symbol s) const;
  bool contains_kind(Symbol::Kind kind) const;
  bool depends_on(Symbol s) const;

  /// Every distinct symbol occurring in the polynomial, sorted.
  std::vector<Symbol> symbols() const;

 private:
  std::map<Monomial, Rational, MonomialLess> terms_;
};

/// Total degree of the formal gauge parameter eps in a monomial.
int eps_degree(const Monomial& m);

}  // namespace noether

#endif
