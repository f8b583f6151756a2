#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "xqcalc/dist.hpp"
#include "xqcalc/poly.hpp"

namespace xqcalc {

/// SplitMix64 stream. Streams are split off by name, so adding a check never
/// perturbs the samples of another one. Bit-identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent child stream keyed by a stable (FNV-1a) hash of `name`.
  Rng split(std::string_view name) const;

  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

 private:
  std::uint64_t state_;
};

/// Polynomial with integer coefficients in [-3, 3] and total degree at most
/// max_degree (the actual degree cap is drawn first).
Poly random_poly(Rng& rng, int dim, int max_degree);

/// Affine map R^source -> R^target with small integer coefficients.
PolyMap random_affine_map(Rng& rng, int source_dim, int target_dim);

/// Polynomial vector field with integer coefficients.
VectorField random_field(Rng& rng, int dim, int max_degree);

/// Differential operator of order <= 2 with low-degree polynomial coefficients.
DiffOperator random_operator(Rng& rng, int dim);

/// Random finite distribution tree on R^dim built from every node type
/// the exact interpreter accepts.
Dist random_dist(Rng& rng, int dim, int depth);

/// Atomic distributions on R^dim: Dirac, Interval/Box, unit sphere and ball,
/// and the cis/sph parametrisations where they apply.
std::vector<Dist> atomic_dists(Rng& rng, int dim);

/// Every monomial x^m on R^dim with |m| <= max_degree.
std::vector<Exponent> monomials(int dim, int max_degree);

}  // namespace xqcalc
