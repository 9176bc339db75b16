#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bautin/errors.hpp"
#include "bautin/homog_poly.hpp"
#include "bautin/linear_form.hpp"
#include "bautin/matrix.hpp"
#include "bautin/vector_field.hpp"

namespace bautin {

// At every even degree k the rotational system has a one-dimensional kernel
// spanned by (x^2+y^2)^(k/2).  The coefficient of x^s y^(k-s) with
// s = 2*floor(k/4) is pinned to zero: v_{2m,2m} when k/2 = 2m and
// v_{2m,2m+2} when k/2 = 2m+1.
struct TieBreakRecord {
  int degree = 0;
  int x_exp = 0;
  int y_exp = 0;
  friend bool operator==(const TieBreakRecord&, const TieBreakRecord&) = default;
};

inline int tiebreak_x_exponent(int k) { return 2 * (k / 4); }
inline TieBreakRecord tiebreak_for_degree(int k) {
  const int s = tiebreak_x_exponent(k);
  return {k, s, k - s};
}

template <Scalar S>
struct RotationalSolution {
  HomogPoly<S> V;
  std::optional<S> L;  // present exactly for even degrees
  std::optional<TieBreakRecord> tiebreak;
};

namespace detail {

// Binomial weight of x^p y^(k-p) in (x^2+y^2)^(k/2); zero for odd p.
inline Rational circle_weight(int k, int p) {
  if (p % 2 != 0) return Rational(0);
  const int h = k / 2;
  const int t = p / 2;
  Rational b(1);
  for (int i = 0; i < t; ++i) b = b * Rational(h - i) / Rational(i + 1);
  return b;
}

}  // namespace detail

// Solves  rot_apply(V) + R = [k even] * L * (x^2+y^2)^(k/2)  for V (and L).
//
// Matching x^p y^(k-p) gives  (k-p+1) c_{p-1} - (p+1) c_{p+1} + R_p = L B_p,
// where c_i is the coefficient of x^i y^(k-i).  Targets of one x-parity only
// couple unknowns of the other parity, so the system splits into two
// bidiagonal chains that are swept one unknown at a time.
template <Scalar S>
RotationalSolution<S> rotational_solve(int k, const HomogPoly<S>& R) {
  if (k < 3) throw UsageError("rotational_solve needs degree >= 3");
  if (R.degree() != k) throw UsageError("rotational_solve: right-hand side has wrong degree");
  const S zero = R[0] * S(0L);
  std::vector<S> c(static_cast<std::size_t>(k) + 1, zero);
  auto rx = [&](int p) -> const S& { return R[static_cast<std::size_t>(k - p)]; };
  auto num = [](long v) { return S(v); };

  RotationalSolution<S> out{HomogPoly<S>(k, zero), std::nullopt, std::nullopt};

  if (k % 2 == 1) {
    // Even targets, odd unknowns: upward from p = 0.
    c[1] = rx(0);
    for (int p = 2; p <= k - 1; p += 2)
      c[p + 1] = (num(k - p + 1) * c[p - 1] + rx(p)) / num(p + 1);
    // Odd targets, even unknowns: downward from p = k.
    c[k - 1] = -rx(k);
    for (int p = k - 2; p >= 1; p -= 2)
      c[p - 1] = (num(p + 1) * c[p + 1] - rx(p)) / num(k - p + 1);
  } else {
    // Even targets: odd unknowns plus L.  Track c_i = alpha_i + beta_i * L with
    // beta exact (it depends on k only).
    std::vector<S> alpha(static_cast<std::size_t>(k) + 1, zero);
    std::vector<Rational> beta(static_cast<std::size_t>(k) + 1, Rational(0));
    alpha[1] = rx(0);
    beta[1] = -detail::circle_weight(k, 0);
    for (int p = 2; p <= k - 2; p += 2) {
      alpha[p + 1] = (num(k - p + 1) * alpha[p - 1] + rx(p)) / num(p + 1);
      beta[p + 1] = (Rational(k - p + 1) * beta[p - 1] - detail::circle_weight(k, p)) / Rational(p + 1);
    }
    // Last target p = k:  c_{k-1} + R_k = L * B_k.
    const Rational pivot = detail::circle_weight(k, k) - beta[k - 1];
    if (pivot.is_zero()) throw InternalError("singular L-chain at degree " + std::to_string(k));
    const S L = (alpha[k - 1] + rx(k)) / from_rational(pivot, zero);
    for (int i = 1; i <= k - 1; i += 2) c[i] = alpha[i] + from_rational(beta[i], zero) * L;
    out.L = L;

    // Odd targets: even unknowns with the kernel pinned at the tie-break slot.
    const int s = tiebreak_x_exponent(k);
    c[s] = zero;
    for (int p = s + 1; p <= k - 1; p += 2)
      c[p + 1] = (num(k - p + 1) * c[p - 1] + rx(p)) / num(p + 1);
    for (int p = s - 1; p >= 1; p -= 2)
      c[p - 1] = (num(p + 1) * c[p + 1] - rx(p)) / num(k - p + 1);
    out.tiebreak = tiebreak_for_degree(k);
  }
  for (int i = 0; i <= k; ++i) out.V[static_cast<std::size_t>(k - i)] = c[i];
  return out;
}

// rot_apply(V) + R - [k even] L (x^2+y^2)^(k/2); zero for a correct solve.
template <Scalar S>
HomogPoly<S> rotational_residual(int k, const HomogPoly<S>& V, const HomogPoly<S>& R,
                                 const std::optional<S>& L) {
  HomogPoly<S> res = hp_add(rot_apply(V), R);
  if (k % 2 == 0) {
    if (!L) throw UsageError("even-degree residual needs L");
    res = hp_sub(res, hp_scale(circle_power(k / 2, R[0]), *L));
  }
  return res;
}

// Same system assembled densely (k+1 matching equations, plus the tie-break
// equation and the L unknown at even degree) and solved by Gaussian
// elimination.  Kept as an independent check on the chain sweeps.
template <FieldScalar S>
RotationalSolution<S> rotational_solve_dense(int k, const HomogPoly<S>& R) {
  if (k < 3) throw UsageError("rotational_solve_dense needs degree >= 3");
  const bool even = k % 2 == 0;
  const S zero = R[0] * S(0L);
  const std::size_t n = static_cast<std::size_t>(k) + 1 + (even ? 1 : 0);
  DenseMatrix<S> A(n, n, zero);
  std::vector<S> b(n, zero);
  // Unknown column i is c_i (x-exponent i); column k+1 is L.
  for (int p = 0; p <= k; ++p) {
    const auto row = static_cast<std::size_t>(p);
    if (p >= 1) A(row, static_cast<std::size_t>(p - 1)) = S(static_cast<long>(k - p + 1));
    if (p + 1 <= k) A(row, static_cast<std::size_t>(p + 1)) = S(-static_cast<long>(p + 1));
    if (even) A(row, static_cast<std::size_t>(k + 1)) = -from_rational(detail::circle_weight(k, p), zero);
    b[row] = -R[static_cast<std::size_t>(k - p)];
  }
  RotationalSolution<S> out{HomogPoly<S>(k, zero), std::nullopt, std::nullopt};
  if (even) {
    A(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(tiebreak_x_exponent(k))) = S(1L);
    out.tiebreak = tiebreak_for_degree(k);
  }
  const auto x = solve_dense(std::move(A), std::move(b));
  for (int i = 0; i <= k; ++i) out.V[static_cast<std::size_t>(k - i)] = x[static_cast<std::size_t>(i)];
  if (even) out.L = x[static_cast<std::size_t>(k + 1)];
  return out;
}

// R_k = sum over d of (V_{k+1-d})'_x F_d + (V_{k+1-d})'_y G_d, over solved terms
// V_m with m >= 2.  The V_2 term equals x F_{k-1} + y G_{k-1}; with
// include_direct = false it is left out.
template <Scalar S>
HomogPoly<S> accumulate_rhs(const VectorField<S>& vf, const std::map<int, HomogPoly<S>>& V, int k,
                            bool include_direct = true) {
  HomogPoly<S> R(k, vf.zero());
  for (int d = 2; d <= vf.degree(); ++d) {
    const int m = k + 1 - d;
    if (m < 2 || (m == 2 && !include_direct)) continue;
    const auto it = V.find(m);
    if (it == V.end()) throw UsageError("accumulate_rhs: V_" + std::to_string(m) + " not solved");
    const HomogPoly<S>& Vm = it->second;
    if (Vm.is_zero() || (vf.F(d).is_zero() && vf.G(d).is_zero())) continue;
    R = hp_add(R, hp_add(hp_mul(hp_dx(Vm), vf.F(d)), hp_mul(hp_dy(Vm), vf.G(d))));
  }
  return R;
}

enum class SeriesMode { Plain, UnknownCarrying };

// How the formal unknowns of a selected level are tied to the series.
//  HomogeneousPart: unknowns are the coefficients of V^h_{k+1}, the solution
//    driven by x F_k + y G_k alone; V_{k+1} = unknowns + U_{k+1}.
//  FullCoefficient: unknowns stand for the coefficients of V_{k+1} itself;
//    U_{k+1} only enters the Lyapunov constant solved at that degree.
// Both give P matrices related by a unimodular change of basis.
enum class UnknownBasis { HomogeneousPart, FullCoefficient };

struct UnknownSlot {
  UnknownId id;
  int degree = 0;
  int x_exp = 0;
  int y_exp = 0;
};

template <class S>
struct BaseScalar {
  using type = S;
};
template <class B>
struct BaseScalar<LinearForm<B>> {
  using type = B;
};
template <class S>
using base_scalar_t = typename BaseScalar<S>::type;

template <Scalar S>
struct LyapunovSeries {
  using Base = base_scalar_t<S>;

  explicit LyapunovSeries(VectorField<Base> src) : source(std::move(src)) {}

  VectorField<Base> source;
  SeriesMode mode = SeriesMode::Plain;
  int max_index = 0;
  std::map<int, HomogPoly<S>> V;   // degrees 2..2*max_index+2
  std::vector<S> L;                // L[j-1] is L_j
  std::vector<TieBreakRecord> tiebreaks;
  std::vector<UnknownSlot> unknowns;   // registration order
  std::vector<Base> unknown_values;    // plain-mode value of each unknown
  UnknownBasis basis = UnknownBasis::HomogeneousPart;

  const S& lyapunov_constant(int j) const {
    if (j < 1 || j > static_cast<int>(L.size()))
      throw UsageError("L_" + std::to_string(j) + " outside the computed budget");
    return L[static_cast<std::size_t>(j - 1)];
  }
  const HomogPoly<S>& term(int k) const {
    const auto it = V.find(k);
    if (it == V.end()) throw UsageError("V_" + std::to_string(k) + " not computed");
    return it->second;
  }
  int max_degree() const { return 2 * max_index + 2; }
};

namespace detail {

template <Scalar S>
HomogPoly<S> half_circle(const S& zero) {
  HomogPoly<S> v(2, zero);
  v[0] = from_rational(Rational(1, 2), zero);
  v[2] = v[0];
  return v;
}

template <class S>
inline constexpr bool exact_domain_v = std::is_same_v<S, Rational> || std::is_same_v<S, LinearForm<Rational>>;

template <Scalar S>
void check_residual(int k, const RotationalSolution<S>& sol, const HomogPoly<S>& R) {
  if constexpr (exact_domain_v<S>) {
    if (!rotational_residual(k, sol.V, R, sol.L).is_zero())
      throw InternalError("nonzero residual at degree " + std::to_string(k));
  }
}

}  // namespace detail

// Lyapunov constants L_1..L_J of the field, solving degrees 3..2J+2 in the
// field's own coefficient domain.
template <Scalar S>
LyapunovSeries<S> compute_series(const VectorField<S>& vf, int J) {
  if (J < 1) throw UsageError("compute_series needs J >= 1");
  LyapunovSeries<S> s(vf);
  s.mode = SeriesMode::Plain;
  s.max_index = J;
  s.V.emplace(2, detail::half_circle(vf.zero()));
  for (int k = 3; k <= 2 * J + 2; ++k) {
    const HomogPoly<S> R = accumulate_rhs(vf, s.V, k);
    auto sol = rotational_solve(k, R);
    detail::check_residual(k, sol, R);
    if (sol.L) s.L.push_back(*sol.L);
    if (sol.tiebreak) s.tiebreaks.push_back(*sol.tiebreak);
    s.V.emplace(k, std::move(sol.V));
  }
  return s;
}

// Unknown-carrying series.  For every selected level k the coefficients of the
// degree-(k+1) Lyapunov term (all but the tie-break slot) are replaced by
// formal unknowns, so every later V and L is a linear form in them.
template <FieldScalar B>
LyapunovSeries<LinearForm<B>> compute_series_unknown(const VectorField<B>& vf, const std::set<int>& levels,
                                                     int J,
                                                     UnknownBasis basis = UnknownBasis::HomogeneousPart) {
  using LF = LinearForm<B>;
  if (J < 1) throw UsageError("compute_series_unknown needs J >= 1");
  if (levels.empty()) throw UsageError("compute_series_unknown needs at least one level");
  for (int lv : levels)
    if (lv < 2 || lv > vf.degree())
      throw UsageError("level " + std::to_string(lv) + " outside 2.." + std::to_string(vf.degree()));

  const VectorField<LF> lf = vf.map([](const B& c) { return LF(c); });
  LyapunovSeries<LF> s(vf);
  s.mode = SeriesMode::UnknownCarrying;
  s.max_index = J;
  s.basis = basis;
  s.V.emplace(2, detail::half_circle(lf.zero()));

  for (int k = 3; k <= 2 * J + 2; ++k) {
    const int level = k - 1;
    if (!levels.contains(level)) {
      const HomogPoly<LF> R = accumulate_rhs(lf, s.V, k);
      auto sol = rotational_solve(k, R);
      detail::check_residual(k, sol, R);
      if (sol.L) s.L.push_back(*sol.L);
      if (sol.tiebreak) s.tiebreaks.push_back(*sol.tiebreak);
      s.V.emplace(k, std::move(sol.V));
      continue;
    }
    // (i) direct drive of this level on its own.
    const HomogPoly<B> direct = hp_add(times_x(vf.F(level)), times_y(vf.G(level)));
    const auto homog = rotational_solve(k, direct);
    // (iii) response to everything the lower levels feed into degree k.
    const HomogPoly<LF> lower = accumulate_rhs(lf, s.V, k, /*include_direct=*/false);
    auto response = rotational_solve(k, lower);
    detail::check_residual(k, response, lower);

    // (ii) one unknown per free coefficient, ascending y-power.
    HomogPoly<LF> unknown_part(k, lf.zero());
    const int pinned = homog.tiebreak ? homog.tiebreak->x_exp : -1;
    for (int a = 0; a <= k; ++a) {
      const int x_exp = k - a;
      if (x_exp == pinned) continue;
      const UnknownId id{static_cast<int>(s.unknowns.size())};
      s.unknowns.push_back({id, k, x_exp, a});
      B value = homog.V[static_cast<std::size_t>(a)];
      if (basis == UnknownBasis::FullCoefficient)
        value = value + response.V[static_cast<std::size_t>(a)].evaluate(s.unknown_values);
      s.unknown_values.push_back(value);
      unknown_part[static_cast<std::size_t>(a)] = LF::unknown(id, from_rational(Rational(1), vf.zero()));
    }
    HomogPoly<LF> Vk = basis == UnknownBasis::HomogeneousPart ? hp_add(unknown_part, response.V)
                                                               : unknown_part;
    if (homog.L) s.L.push_back(LF(*homog.L) + *response.L);
    if (homog.tiebreak) s.tiebreaks.push_back(*homog.tiebreak);
    s.V.emplace(k, std::move(Vk));
  }
  return s;
}

}  // namespace bautin
