#pragma once

#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "bautin/bigreal.hpp"
#include "bautin/errors.hpp"
#include "bautin/homog_poly.hpp"
#include "bautin/rational.hpp"

namespace bautin {

// Planar field  x' = -y + sum_k F_k,  y' = x + sum_k G_k,  k = 2..n, with zero
// trace in the linear part.  Parts that were never set are zero polynomials.
template <Scalar S>
class VectorField {
 public:
  using Scalar = S;

  explicit VectorField(int degree, const S& zero = S(0L)) : degree_(degree), zero_(zero) {
    if (degree < 2) throw UsageError("vector field degree must be at least 2");
    for (int k = 2; k <= degree; ++k) {
      F_.emplace_back(k, zero_);
      G_.emplace_back(k, zero_);
    }
  }

  int degree() const noexcept { return degree_; }
  // Zero of the coefficient domain; carries the working precision for BigReal.
  const S& zero() const noexcept { return zero_; }

  const HomogPoly<S>& F(int k) const { return F_[slot(k)]; }
  const HomogPoly<S>& G(int k) const { return G_[slot(k)]; }

  void set_F(int k, HomogPoly<S> p) { F_[checked_slot(k, p)] = std::move(p); }
  void set_G(int k, HomogPoly<S> p) { G_[checked_slot(k, p)] = std::move(p); }

  // f_{i,j}, the coefficient of x^i y^j in the first component.
  const S& f(int i, int j) const { return F_[slot(i + j)].at(i, j); }
  const S& g(int i, int j) const { return G_[slot(i + j)].at(i, j); }
  S& f(int i, int j) { return F_[slot(i + j)].at(i, j); }
  S& g(int i, int j) { return G_[slot(i + j)].at(i, j); }

  // True when only the top-degree parts F_n, G_n may be nonzero.
  bool is_homogeneous() const {
    for (int k = 2; k < degree_; ++k)
      if (!F(k).is_zero() || !G(k).is_zero()) return false;
    return true;
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using T = std::decay_t<decltype(fn(zero_))>;
    VectorField<T> out(degree_, fn(zero_));
    for (int k = 2; k <= degree_; ++k) {
      out.set_F(k, F(k).map(fn));
      out.set_G(k, G(k).map(fn));
    }
    return out;
  }

  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.degree_ == b.degree_ && a.F_ == b.F_ && a.G_ == b.G_;
  }

 private:
  std::size_t slot(int k) const {
    if (k < 2 || k > degree_)
      throw UsageError("part degree " + std::to_string(k) + " outside 2.." +
                       std::to_string(degree_));
    return static_cast<std::size_t>(k - 2);
  }
  std::size_t checked_slot(int k, const HomogPoly<S>& p) const {
    if (p.degree() != k) throw UsageError("part of degree " + std::to_string(k) +
                                          " given a polynomial of degree " +
                                          std::to_string(p.degree()));
    return slot(k);
  }

  int degree_;
  S zero_;
  std::vector<HomogPoly<S>> F_;
  std::vector<HomogPoly<S>> G_;
};

// Text format: first non-comment line "n <degree>", then one term per line
// "F <i> <j> <coeff>" or "G <i> <j> <coeff>" for the coefficient of x^i y^j,
// coeff as an integer, p/q, or decimal.  '#' starts a comment.
VectorField<Rational> parse_vector_field(std::string_view text);
VectorField<BigReal> parse_vector_field_real(std::string_view text, int digits);

std::string serialize_vector_field(const VectorField<Rational>& vf);
std::string serialize_vector_field(const VectorField<BigReal>& vf);

VectorField<Rational> read_vector_field_file(const std::string& path);
VectorField<BigReal> read_vector_field_file_real(const std::string& path, int digits);

// Converts an exact field into a BigReal field at the given precision.
VectorField<BigReal> to_bigreal(const VectorField<Rational>& vf, int digits);

}  // namespace bautin
