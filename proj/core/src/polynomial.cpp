#include "noether/polynomial.hpp"

#include <algorithm>
#include <set>

namespace noether {

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

int eps_degree(const Monomial& m) {
  int deg = 0;
  for (const auto& [s, k] : m)
    if (s.is_eps_jet()) deg += k;
  return deg;
}

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(Symbol s) {
  Polynomial p;
  p.add_term({{s, 1}}, Rational(1));
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(Monomial m, const Rational& c) {
  if (c.is_zero()) return;
  if (eps_degree(m) >= 2) return;  // infinitesimals square to zero
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out += b;
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out -= b;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    } else if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term(merge_monomials(ma, mb), ca * cb);
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial out;
  if (c.is_zero()) return out;
  for (const auto& [m, k] : p.terms_) out.add_term(m, c * k);
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0)
    throw Error(Error::Code::unsupported, "negative exponents are not polynomial");
  Polynomial out = constant(Rational(1));
  for (int i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::partial(Symbol s) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i].first != s) continue;
      Monomial rest = m;
      if (rest[i].second == 1)
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      else
        rest[i].second -= 1;
      out.add_term(std::move(rest), c * Rational(m[i].second));
      break;
    }
  }
  return out;
}

Polynomial Polynomial::substitute(const std::map<Symbol, Polynomial>& bindings) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(c);
    Monomial untouched;
    for (const auto& [s, k] : m) {
      auto it = bindings.find(s);
      if (it == bindings.end())
        untouched.emplace_back(s, k);
      else
        term = term * it->second.pow(k);
    }
    if (!untouched.empty()) {
      Polynomial rest;
      rest.add_term(std::move(untouched), Rational(1));
      term = term * rest;
    }
    out += term;
  }
  return out;
}

int Polynomial::max_field_jet_order() const {
  int best = -1;
  for (const auto& [m, c] : terms_)
    for (const auto& [s, k] : m)
      if (s.is_field_jet()) best = std::max(best, s.order());
  return best;
}

int Polynomial::max_gauge_jet_order() const {
  int best = -1;
  for (const auto& [m, c] : terms_)
    for (const auto& [s, k] : m)
      if (s.is_gauge_jet()) best = std::max(best, s.order());
  return best;
}

int Polynomial::degree_in(Symbol s) const {
  int best = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [sym, k] : m)
      if (sym == s) best = std::max(best, k);
  return best;
}

bool Polynomial::contains_kind(Symbol::Kind kind) const {
  for (const auto& [m, c] : terms_)
    for (const auto& [s, k] : m)
      if (s.kind() == kind) return true;
  return false;
}

bool Polynomial::depends_on(Symbol s) const {
  for (const auto& [m, c] : terms_)
    for (const auto& [sym, k] : m)
      if (sym == s) return true;
  return false;
}

std::vector<Symbol> Polynomial::symbols() const {
  std::set<Symbol> seen;
  for (const auto& [m, c] : terms_)
    for (const auto& [s, k] : m) seen.insert(s);
  return {seen.begin(), seen.end()};
}

}  // namespace noether
