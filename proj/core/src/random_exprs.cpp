#include "noether/random_exprs.hpp"

#include "noether/jet_calculus.hpp"

namespace noether {

namespace {

std::vector<Symbol> symbol_pool(const RandomBounds& bounds, int max_jet_order) {
  std::vector<Symbol> pool;
  for (int mu = 0; mu < bounds.dim; ++mu) pool.push_back(Symbol::coordinate(mu));
  for (int alpha = 0; alpha < bounds.fields; ++alpha) {
    pool.push_back(Symbol::field(alpha));
    if (max_jet_order >= 1)
      for (int mu = 0; mu < bounds.dim; ++mu)
        pool.push_back(Symbol::field_jet(alpha, {mu}));
    if (max_jet_order >= 2)
      for (int a = 0; a < bounds.dim; ++a)
        for (int b = a; b < bounds.dim; ++b)
          pool.push_back(Symbol::field_jet(alpha, {a, b}));
  }
  return pool;
}

Polynomial random_poly(RandomStream& rng, const RandomBounds& bounds,
                       int max_jet_order) {
  std::vector<Symbol> pool = symbol_pool(bounds, max_jet_order);
  Polynomial out;
  int terms = rng.range(1, bounds.max_terms);
  for (int t = 0; t < terms; ++t) {
    int coeff = rng.range(1, 4) * (rng.range(0, 1) == 0 ? 1 : -1);
    int degree = rng.range(0, bounds.max_degree);
    Monomial mono;
    for (int k = 0; k < degree; ++k) {
      Symbol s = pool[static_cast<std::size_t>(
          rng.range(0, static_cast<int>(pool.size()) - 1))];
      bool merged = false;
      for (auto& [sym, exp] : mono)
        if (sym == s) {
          ++exp;
          merged = true;
          break;
        }
      if (!merged) mono.emplace_back(s, 1);
    }
    std::sort(mono.begin(), mono.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.add_term(std::move(mono), Rational(coeff));
  }
  return out;
}

}  // namespace

Expr random_polynomial(std::uint64_t seed, const RandomBounds& bounds,
                       int max_jet_order) {
  RandomStream rng(seed);
  return to_expr(random_poly(rng, bounds, max_jet_order));
}

Expr random_lagrangian(std::uint64_t seed, const RandomBounds& bounds) {
  return random_polynomial(seed, bounds, 1);
}

std::vector<Expr> random_flux(std::uint64_t seed, const RandomBounds& bounds) {
  RandomStream rng(seed);
  std::vector<Expr> flux;
  for (int mu = 0; mu < bounds.dim; ++mu)
    flux.push_back(to_expr(random_poly(rng, bounds, 1)));
  return flux;
}

Expr random_divergence(std::uint64_t seed, const RandomBounds& bounds,
                       const FieldSystem& sys) {
  std::vector<Expr> flux = random_flux(seed, bounds);
  Polynomial acc;
  for (int mu = 0; mu < bounds.dim; ++mu)
    acc += total_derivative(to_polynomial(flux[static_cast<std::size_t>(mu)]), mu, sys);
  return to_expr(acc);
}

std::vector<Expr> random_vertical_generator(std::uint64_t seed,
                                            const RandomBounds& bounds) {
  RandomStream rng(seed);
  std::vector<Expr> y0;
  for (int alpha = 0; alpha < bounds.fields; ++alpha)
    y0.push_back(to_expr(random_poly(rng, bounds, 0)));
  return y0;
}

Box random_subbox(RandomStream& rng, const Box& region) {
  Box sub;
  for (int mu = 0; mu < region.dim(); ++mu) {
    double lo = region.lo[static_cast<std::size_t>(mu)];
    double hi = region.hi[static_cast<std::size_t>(mu)];
    double len = hi - lo;
    double a = lo + rng.uniform() * 0.5 * len;
    double b = a + (0.2 + 0.8 * rng.uniform()) * (hi - a);
    sub.lo.push_back(a);
    sub.hi.push_back(std::min(b, hi));
  }
  return sub;
}

}  // namespace noether
