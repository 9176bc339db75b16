#pragma once

#include <cstdint>
#include <random>

#include "bautin/homog_poly.hpp"
#include "bautin/vector_field.hpp"

namespace bautin::gen {

using Rng = std::mt19937_64;

// Coefficients p/q with |p| <= max_num and 1 <= q <= max_den.
struct CoefficientRange {
  long max_num = 9;
  long max_den = 4;
};

Rational random_rational(Rng& rng, const CoefficientRange& range = {});
Rational random_nonzero_rational(Rng& rng, const CoefficientRange& range = {});
HomogPoly<Rational> random_homog(int degree, Rng& rng, const CoefficientRange& range = {});

// Homogeneous F_n, G_n only.
VectorField<Rational> random_homogeneous_field(int n, Rng& rng, const CoefficientRange& range = {});
// Every part F_k, G_k for k = 2..n populated.
VectorField<Rational> random_field(int n, Rng& rng, const CoefficientRange& range = {});

// F_k = -H_y, G_k = H_x for random homogeneous H of degree k+1, so
// (F)'_x + (G)'_y = 0.
VectorField<Rational> random_divergence_free(int n, bool homogeneous, Rng& rng, const CoefficientRange& range = {});
// F even and G odd in x: invariant under (x, y, t) -> (-x, y, -t).
VectorField<Rational> random_reversible(int n, bool homogeneous, Rng& rng, const CoefficientRange& range = {});
// F_n = y Phi, G_n = -x Phi for random homogeneous Phi of degree n-1, so the
// direct drive x F_n + y G_n vanishes.
VectorField<Rational> random_rotational(int n, Rng& rng, const CoefficientRange& range = {});

}  // namespace bautin::gen
