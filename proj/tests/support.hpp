#pragma once

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "bautin/homog_poly.hpp"
#include "bautin/random_field.hpp"
#include "bautin/rational.hpp"
#include "bautin/vector_field.hpp"

namespace test {

using bautin::HomogPoly;
using bautin::Rational;

// Sparse polynomial keyed by (x exponent, y exponent); an independent
// representation for cross-checking the dense one.
using Sparse = std::map<std::pair<int, int>, Rational>;

inline Sparse to_sparse(const HomogPoly<Rational>& p) {
  Sparse s;
  for (int a = 0; a <= p.degree(); ++a)
    if (!p[static_cast<std::size_t>(a)].is_zero()) s[{p.degree() - a, a}] = p[static_cast<std::size_t>(a)];
  return s;
}

inline void add_term(Sparse& s, int i, int j, const Rational& c) {
  if (c.is_zero()) return;
  auto& slot = s[{i, j}];
  slot = slot + c;
  if (slot.is_zero()) s.erase({i, j});
}

// x d/dy - y d/dx applied term by term.
inline Sparse rot_sparse(const Sparse& p) {
  Sparse out;
  for (const auto& [e, c] : p) {
    const auto [i, j] = e;
    if (j > 0) add_term(out, i + 1, j - 1, c * Rational(j));
    if (i > 0) add_term(out, i - 1, j + 1, -c * Rational(i));
  }
  return out;
}

inline Sparse mul_sparse(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_term(out, ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

// Polynomial from (x exponent, y exponent, coefficient) triples.
inline HomogPoly<Rational> poly(int degree, std::initializer_list<std::tuple<int, int, Rational>> terms) {
  HomogPoly<Rational> p(degree, Rational(0));
  for (const auto& [i, j, c] : terms) p.at(i, j) = p.at(i, j) + c;
  return p;
}

inline bautin::gen::Rng rng(std::uint64_t seed) { return bautin::gen::Rng(seed); }

}  // namespace test
