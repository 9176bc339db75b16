#include "bautin/random_field.hpp"

namespace bautin::gen {

Rational random_rational(Rng& rng, const CoefficientRange& range) {
  std::uniform_int_distribution<long> num(-range.max_num, range.max_num);
  std::uniform_int_distribution<long> den(1, range.max_den);
  const long p = num(rng);
  return Rational(p, den(rng));
}

Rational random_nonzero_rational(Rng& rng, const CoefficientRange& range) {
  while (true) {
    Rational r = random_rational(rng, range);
    if (!r.is_zero()) return r;
  }
}

HomogPoly<Rational> random_homog(int degree, Rng& rng, const CoefficientRange& range) {
  HomogPoly<Rational> p(degree, Rational(0));
  for (std::size_t a = 0; a < p.size(); ++a) p[a] = random_rational(rng, range);
  return p;
}

VectorField<Rational> random_homogeneous_field(int n, Rng& rng, const CoefficientRange& range) {
  VectorField<Rational> vf(n, Rational(0));
  while (vf.F(n).is_zero() && vf.G(n).is_zero()) {
    vf.set_F(n, random_homog(n, rng, range));
    vf.set_G(n, random_homog(n, rng, range));
  }
  return vf;
}

VectorField<Rational> random_field(int n, Rng& rng, const CoefficientRange& range) {
  VectorField<Rational> vf(n, Rational(0));
  for (int k = 2; k <= n; ++k) {
    vf.set_F(k, random_homog(k, rng, range));
    vf.set_G(k, random_homog(k, rng, range));
  }
  return vf;
}

VectorField<Rational> random_divergence_free(int n, bool homogeneous, Rng& rng, const CoefficientRange& range) {
  VectorField<Rational> vf(n, Rational(0));
  for (int k = homogeneous ? n : 2; k <= n; ++k) {
    const auto H = random_homog(k + 1, rng, range);
    vf.set_F(k, -hp_dy(H));
    vf.set_G(k, hp_dx(H));
  }
  return vf;
}

VectorField<Rational> random_reversible(int n, bool homogeneous, Rng& rng, const CoefficientRange& range) {
  VectorField<Rational> vf(n, Rational(0));
  for (int k = homogeneous ? n : 2; k <= n; ++k) {
    auto F = random_homog(k, rng, range);
    auto G = random_homog(k, rng, range);
    for (int a = 0; a <= k; ++a) {
      const int x_exp = k - a;
      if (x_exp % 2 == 1) F[static_cast<std::size_t>(a)] = Rational(0);
      if (x_exp % 2 == 0) G[static_cast<std::size_t>(a)] = Rational(0);
    }
    vf.set_F(k, F);
    vf.set_G(k, G);
  }
  return vf;
}

VectorField<Rational> random_rotational(int n, Rng& rng, const CoefficientRange& range) {
  VectorField<Rational> vf(n, Rational(0));
  HomogPoly<Rational> phi(n - 1, Rational(0));
  while (phi.is_zero()) phi = random_homog(n - 1, rng, range);
  vf.set_F(n, times_y(phi));
  vf.set_G(n, -times_x(phi));
  return vf;
}

}  // namespace bautin::gen
