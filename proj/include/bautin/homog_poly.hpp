#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "bautin/errors.hpp"
#include "bautin/linear_form.hpp"
#include "bautin/scalar.hpp"

namespace bautin {

// Dense homogeneous bivariate polynomial of degree k.  Entry a holds the
// coefficient of x^(k-a) y^a, so index 0 is the pure x-power (descending x).
template <Scalar S>
class HomogPoly {
 public:
  using Scalar = S;

  HomogPoly() : HomogPoly(0) {}
  explicit HomogPoly(int degree, const S& zero = S(0L)) : degree_(degree) {
    if (degree < 0) throw UsageError("negative polynomial degree");
    coeffs_.assign(static_cast<std::size_t>(degree) + 1, zero);
  }
  HomogPoly(int degree, std::vector<S> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree) + 1)
      throw UsageError("coefficient count must equal degree + 1");
  }

  static HomogPoly monomial(int x_exp, int y_exp, const S& c) {
    HomogPoly p(x_exp + y_exp, c * S(0L));
    p.at(x_exp, y_exp) = c;
    return p;
  }

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const S> coeffs() const noexcept { return coeffs_; }

  const S& operator[](std::size_t a) const { return coeffs_[a]; }
  S& operator[](std::size_t a) { return coeffs_[a]; }

  // Coefficient of x^x_exp y^y_exp.
  const S& at(int x_exp, int y_exp) const { return coeffs_[index_of(x_exp, y_exp)]; }
  S& at(int x_exp, int y_exp) { return coeffs_[index_of(x_exp, y_exp)]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!detail::scalar_is_zero(c)) return false;
    return true;
  }

  bool carries_unknowns() const {
    if constexpr (is_linear_form_v<S>) {
      for (const auto& c : coeffs_)
        if (c.carries_unknowns()) return true;
    }
    return false;
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using T = std::decay_t<decltype(fn(coeffs_.front()))>;
    std::vector<T> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(fn(c));
    return HomogPoly<T>(degree_, std::move(out));
  }

  friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t index_of(int x_exp, int y_exp) const {
    if (x_exp < 0 || y_exp < 0 || x_exp + y_exp != degree_)
      throw UsageError("monomial x^" + std::to_string(x_exp) + " y^" + std::to_string(y_exp) +
                       " is not of degree " + std::to_string(degree_));
    return static_cast<std::size_t>(y_exp);
  }

  int degree_;
  std::vector<S> coeffs_;
};

template <Scalar S>
HomogPoly<S> hp_add(const HomogPoly<S>& a, const HomogPoly<S>& b) {
  if (a.degree() != b.degree())
    throw UsageError("hp_add: degree mismatch " + std::to_string(a.degree()) + " vs " +
                     std::to_string(b.degree()));
  HomogPoly<S> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

template <Scalar S>
HomogPoly<S> hp_sub(const HomogPoly<S>& a, const HomogPoly<S>& b) {
  if (a.degree() != b.degree())
    throw UsageError("hp_sub: degree mismatch " + std::to_string(a.degree()) + " vs " +
                     std::to_string(b.degree()));
  HomogPoly<S> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

template <Scalar S>
HomogPoly<S> operator+(const HomogPoly<S>& a, const HomogPoly<S>& b) { return hp_add(a, b); }
template <Scalar S>
HomogPoly<S> operator-(const HomogPoly<S>& a, const HomogPoly<S>& b) { return hp_sub(a, b); }
template <Scalar S>
HomogPoly<S> operator-(const HomogPoly<S>& a) {
  return a.map([](const S& c) { return -c; });
}

template <Scalar S>
HomogPoly<S> hp_scale(const HomogPoly<S>& p, const S& s) {
  HomogPoly<S> r = p;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] * s;
  return r;
}

template <Scalar S>
HomogPoly<S> hp_mul(const HomogPoly<S>& a, const HomogPoly<S>& b) {
  if (a.carries_unknowns() && b.carries_unknowns())
    throw UsageError("hp_mul: both operands carry unknowns (product would be quadratic)");
  HomogPoly<S> r(a.degree() + b.degree(), a[0] * S(0L));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (is_zero(b[j])) continue;
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  return r;
}

// d/dx; degree 0 maps to the degree-0 zero polynomial.
template <Scalar S>
HomogPoly<S> hp_dx(const HomogPoly<S>& p) {
  const int k = p.degree();
  if (k == 0) return HomogPoly<S>(0, p[0] * S(0L));
  HomogPoly<S> r(k - 1, p[0] * S(0L));
  for (int a = 0; a < k; ++a) r[a] = p[a] * S(static_cast<long>(k - a));
  return r;
}

template <Scalar S>
HomogPoly<S> hp_dy(const HomogPoly<S>& p) {
  const int k = p.degree();
  if (k == 0) return HomogPoly<S>(0, p[0] * S(0L));
  HomogPoly<S> r(k - 1, p[0] * S(0L));
  for (int a = 1; a <= k; ++a) r[a - 1] = p[a] * S(static_cast<long>(a));
  return r;
}

template <Scalar S>
HomogPoly<S> times_x(const HomogPoly<S>& p) {
  HomogPoly<S> r(p.degree() + 1, p[0] * S(0L));
  for (std::size_t a = 0; a < p.size(); ++a) r[a] = p[a];
  return r;
}

template <Scalar S>
HomogPoly<S> times_y(const HomogPoly<S>& p) {
  HomogPoly<S> r(p.degree() + 1, p[0] * S(0L));
  for (std::size_t a = 0; a < p.size(); ++a) r[a + 1] = p[a];
  return r;
}

// The rotational operator x d/dy - y d/dx:
//   x^i y^j  ->  j x^(i+1) y^(j-1) - i x^(i-1) y^(j+1).
template <Scalar S>
HomogPoly<S> rot_apply(const HomogPoly<S>& p) {
  const int k = p.degree();
  HomogPoly<S> r(k, p[0] * S(0L));
  for (int a = 0; a <= k; ++a) {
    if (is_zero(p[a])) continue;
    const int i = k - a;
    if (a > 0) r[a - 1] = r[a - 1] + p[a] * S(static_cast<long>(a));
    if (i > 0) r[a + 1] = r[a + 1] - p[a] * S(static_cast<long>(i));
  }
  return r;
}

// (x^2 + y^2)^p, expressed in the domain of `like`.
template <Scalar S>
HomogPoly<S> circle_power(int p, const S& like = S(0L)) {
  if (p < 1) throw UsageError("circle_power needs p >= 1");
  HomogPoly<S> r(2 * p, like * S(0L));
  Rational binom(1);
  for (int t = 0; t <= p; ++t) {
    r[static_cast<std::size_t>(2 * t)] = from_rational(binom, like);
    binom = binom * Rational(p - t) / Rational(t + 1);
  }
  return r;
}

}  // namespace bautin
