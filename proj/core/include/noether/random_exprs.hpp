#ifndef NOETHER_RANDOM_EXPRS_HPP
#define NOETHER_RANDOM_EXPRS_HPP

#include <cstdint>
#include <vector>

#include "noether/currents.hpp"
#include "noether/expr.hpp"
#include "noether/field_system.hpp"

namespace noether {

/// splitmix64: tiny, owned by this project so generated fixtures are stable
/// across platforms and standard-library versions.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi].
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

struct RandomBounds {
  int dim = 1;
  int fields = 1;
  int max_degree = 3;
  int max_terms = 5;
};

/// Reproducible random polynomial in the coordinates and field jets up to
/// the given jet order, with small integer coefficients. Same seed, same
/// expression, on every platform.
Expr random_polynomial(std::uint64_t seed, const RandomBounds& bounds,
                       int max_jet_order);

/// First-order random Lagrangian (jets up to first order).
Expr random_lagrangian(std::uint64_t seed, const RandomBounds& bounds);

/// Random first-order flux Lambda^mu, one component per dimension.
std::vector<Expr> random_flux(std::uint64_t seed, const RandomBounds& bounds);

/// d_mu Lambda^mu of a random first-order flux: a Lagrangian whose
/// Euler-Lagrange derivatives vanish identically by construction.
Expr random_divergence(std::uint64_t seed, const RandomBounds& bounds,
                       const FieldSystem& sys);

/// Random vertical generator components Y0(phi, x), jets of order zero only,
/// suitable for the minimal-coupling assumption.
std::vector<Expr> random_vertical_generator(std::uint64_t seed,
                                            const RandomBounds& bounds);

/// Random sub-box of a region (each axis shrunk to a random sub-interval of
/// at least a fifth of the original length).
Box random_subbox(RandomStream& rng, const Box& region);

}  // namespace noether

#endif
