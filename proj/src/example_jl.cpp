#include "bautin/example_jl.hpp"

#include <algorithm>
#include <cmath>

namespace bautin::jl {

namespace {

BigReal num(long v, int digits) { return BigReal(v, digits); }

bool near_zero(const BigReal& v, const BigReal& scale) {
  if (v.is_zero()) return true;
  if (scale.is_zero()) return false;
  return log10_abs(v) <= log10_abs(scale) + 10.0 - v.digits();
}

void require_nonzero(const BigReal& den, const BigReal& scale, const std::string& stage) {
  if (near_zero(den, scale)) throw DomainError("stage " + stage + ": zero denominator");
}

BigReal checked_sqrt(const BigReal& radicand, const std::string& stage) {
  if (radicand.sign() < 0) throw DomainError("stage " + stage + ": negative radicand " + radicand.str(12));
  return sqrt(radicand);
}

bool close(const BigReal& a, const BigReal& b) {
  const BigReal scale = abs(a) > abs(b) ? abs(a) : abs(b);
  return near_zero(a - b, scale);
}

// Dense polynomial over Q, ascending powers, no trailing zeros.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

QPoly remainder(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Rational eval_poly(const QPoly& p, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

QPoly q_poly() {
  QPoly p;
  for (long long c : QPolynomial::coefficients()) p.emplace_back(static_cast<long>(c));
  return p;
}

std::vector<QPoly> sturm_chain() {
  std::vector<QPoly> chain{q_poly()};
  chain.push_back(derivative(chain[0]));
  while (true) {
    QPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int changes_at(const std::vector<QPoly>& chain, const Rational& x) {
  std::vector<int> s;
  for (const auto& p : chain) s.push_back(eval_poly(p, x).sign());
  return sign_changes(s);
}

int changes_at_infinity(const std::vector<QPoly>& chain, bool negative) {
  std::vector<int> s;
  for (const auto& p : chain) {
    int sg = p.back().sign();
    if (negative && (p.size() - 1) % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return sign_changes(s);
}

// Roots in (lo, hi], isolated to intervals holding exactly one root each.
void isolate(const std::vector<QPoly>& chain, const Rational& lo, const Rational& hi, int vlo, int vhi,
             std::vector<std::pair<Rational, Rational>>& out) {
  const int count = vlo - vhi;
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  const Rational mid = (lo + hi) / Rational(2);
  const int vmid = changes_at(chain, mid);
  isolate(chain, lo, mid, vlo, vmid, out);
  isolate(chain, mid, hi, vmid, vhi, out);
}

BigReal bisect(BigReal lo, BigReal hi, int iterations) {
  int slo = QPolynomial::eval(lo).sign();
  const int shi = QPolynomial::eval(hi).sign();
  if (slo == 0) return lo;
  if (shi == 0) return hi;
  if (slo == shi) throw InternalError("no sign change of Q in [" + lo.str(20) + ", " + hi.str(20) + "]");
  for (int i = 0; i < iterations; ++i) {
    const BigReal mid = (lo + hi) / BigReal(2L);
    const int sm = QPolynomial::eval(mid).sign();
    if (sm == 0) return mid;
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / BigReal(2L);
}

BigReal horner(const std::vector<long>& c, const BigReal& x) {
  BigReal acc(0L, x.digits());
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + BigReal(c[i], x.digits());
  return acc;
}

}  // namespace

void JLParams::validate() const {
  const int d = digits();
  if (b4.sign() >= 0) throw UsageError("b4 must be negative");
  if (!a3.is_zero() || !b5.is_zero()) throw UsageError("a3 = b5 = 0 is required");
  if (!(a7 == -b4)) throw UsageError("a7 = -b4 is required");
  if (!close(a1 * a1, (b8 - a8) / num(2, d))) throw UsageError("a1^2 != (b8 - a8)/2");
  if (!close(b1 * b1, (b8 + a8) / num(2, d))) throw UsageError("b1^2 != (b8 + a8)/2");
  if (!close(b6 * b6, b6_squared(a9, b4))) throw UsageError("b6^2 does not match its rational function");
}

JLParams zero_params(int digits) {
  const BigReal z(0L, digits);
  return JLParams{z, z, z, z, z, z, z, z, z, z, z, z, z};
}

VectorField<BigReal> jl_vector_field(const JLParams& p) {
  const int d = std::max(p.digits(), BigReal::kMinDigits);
  VectorField<BigReal> vf(3, BigReal(0L, d));
  vf.f(2, 0) = p.a1;
  vf.f(1, 1) = num(-2, d) * p.b1;
  vf.f(0, 2) = p.a3 - p.a1;
  vf.f(2, 1) = -p.a5;
  vf.f(0, 3) = -p.a7;
  vf.g(2, 0) = p.b1;
  vf.g(1, 1) = num(2, d) * p.a1;
  vf.g(0, 2) = -p.b1;
  vf.g(3, 0) = -p.b4;
  vf.g(2, 1) = -p.b5;
  vf.g(1, 2) = -(p.b6 - p.a5);
  return vf;
}

const std::array<long long, 11>& QPolynomial::coefficients() {
  static const std::array<long long, 11> c{210691031040000000LL, 389728972800000000LL, 308644781875200000LL,
                                           136983308014080000LL, 37257726560256000LL,  6325502424166400LL,
                                           642634655826240LL,    33468743564464LL,     447644512436LL,
                                           -5941780227LL,        1324524586LL};
  return c;
}

void QPolynomial::check_anchors() {
  const auto& c = coefficients();
  if (c.front() != 210691031040000000LL || c.back() != 1324524586LL)
    throw InternalError("Q coefficient table does not match its anchors");
}

Rational QPolynomial::eval(const Rational& s) { return eval_poly(q_poly(), s); }

BigReal QPolynomial::eval(const BigReal& s) {
  BigReal acc(0L, s.digits());
  const auto& c = coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * s + BigReal(Rational(static_cast<long>(c[i])), s.digits());
  return acc;
}

BigReal QPolynomial::derivative(const BigReal& s) {
  BigReal acc(0L, s.digits());
  const auto& c = coefficients();
  for (std::size_t i = c.size(); i-- > 1;)
    acc = acc * s + BigReal(Rational(static_cast<long>(c[i]) * static_cast<long>(i)), s.digits());
  return acc;
}

int sturm_real_root_count() {
  QPolynomial::check_anchors();
  const auto chain = sturm_chain();
  return changes_at_infinity(chain, true) - changes_at_infinity(chain, false);
}

std::vector<RealRoot> real_roots(int digits) {
  QPolynomial::check_anchors();
  const auto chain = sturm_chain();
  const QPoly q = q_poly();
  Rational bound(0);
  for (std::size_t i = 0; i + 1 < q.size(); ++i) bound = std::max(bound, abs(q[i] / q.back()));
  bound = bound + Rational(1);
  std::vector<std::pair<Rational, Rational>> intervals;
  isolate(chain, -bound, bound, changes_at(chain, -bound), changes_at(chain, bound), intervals);

  const int iterations = static_cast<int>(BigReal::bits_for_digits(digits)) + 40;
  std::vector<RealRoot> out;
  const BigReal b4(-1L, digits);
  for (const auto& [lo, hi] : intervals) {
    RealRoot r;
    r.value = bisect(BigReal(lo, digits), BigReal(hi, digits), iterations);
    r.b6_squared = b6_squared(r.value * b4, b4);
    r.admissible = r.b6_squared.sign() > 0;
    out.push_back(std::move(r));
  }
  return out;
}

std::pair<SigmaRoot, SigmaRoot> find_sigma_roots(int digits) {
  if (digits < 40) throw UsageError("find_sigma_roots needs at least 40 digits");
  QPolynomial::check_anchors();
  const std::array<std::pair<Rational, Rational>, 2> brackets{
      std::pair{Rational(-17166571, 2500000), Rational(-1716657, 250000)},
      std::pair{Rational(-11335691, 5000000), Rational(-11335689, 5000000)}};
  std::array<SigmaRoot, 2> roots;
  for (std::size_t i = 0; i < 2; ++i) {
    SigmaRoot& r = roots[i];
    r.bracket = brackets[i];
    // Coarse bisection, then Newton once the bracket is ~10^-12 wide.
    BigReal s = bisect(BigReal(brackets[i].first, digits), BigReal(brackets[i].second, digits), 20);
    const BigReal floor_step = pow10(-digits, s);
    for (int it = 0; it < 60; ++it) {
      const BigReal step = QPolynomial::eval(s) / QPolynomial::derivative(s);
      s -= step;
      const BigReal res = QPolynomial::eval(s);
      r.newton_residuals.push_back(res.is_zero() ? -1e4 : log10_abs(res));
      if (abs(step) <= floor_step * abs(s)) break;
    }
    const BigReal res = abs(QPolynomial::eval(s));
    const BigReal tol = pow10(20 - digits, s) * abs(QPolynomial::derivative(s) * s);
    if (!(res < tol)) throw PrecisionError("Newton did not converge for sigma_" + std::to_string(i + 1));
    if (s < BigReal(brackets[i].first, digits) || s > BigReal(brackets[i].second, digits))
      throw InternalError("Newton left the bracket of sigma_" + std::to_string(i + 1));
    r.value = s;
  }
  return {roots[0], roots[1]};
}

BigReal b6_squared(const BigReal& a9, const BigReal& b4) {
  const int d = std::max(a9.digits(), b4.digits());
  // Homogeneous in (a9, b4): evaluate in t = a9 / b4 and restore b4^2.
  if (b4.is_zero()) throw DomainError("stage b6: b4 = 0");
  const BigReal t = a9 / b4;
  const BigReal n = horner({870912000L, 1104076800L, 568011840L, 155084544L, 24208900L, 2086817L, 77851L}, t);
  const BigReal den = horner({1260000L, 777000L, 173525L, 16780L, 596L}, t);
  require_nonzero(den, horner({1260000L, 777000L, 173525L, 16780L, 596L}, abs(t)), "b6");
  return num(25, d) * n * b4 * b4 / (num(36, d) * den);
}

BigReal a8_of(const BigReal& a9, const BigReal& b4, const BigReal& b6) {
  const int d = std::max(a9.digits(), b4.digits());
  const BigReal den = num(20, d) * (a9 + num(4, d) * b4);
  require_nonzero(den, abs(a9) + num(4, d) * abs(b4), "a8");
  return (num(13, d) * a9 * b6 + num(60, d) * b4 * b6) / den;
}

BigReal b8_of(const BigReal& a9, const BigReal& b4) {
  const int d = std::max(a9.digits(), b4.digits());
  const BigReal a2 = a9 * a9;
  const BigReal b2 = b4 * b4;
  const BigReal numer = num(-601, d) * a2 * a9 - num(7240, d) * a2 * b4 - num(30480, d) * a9 * b2 -
                        num(43200, d) * b2 * b4;
  const BigReal den = num(48, d) * (num(2, d) * a2 + num(23, d) * a9 * b4 + num(60, d) * b2);
  require_nonzero(den, num(2, d) * a2 + num(23, d) * abs(a9 * b4) + num(60, d) * b2, "b8");
  return numer / den;
}

JLParams apply_stages(JLParams p, int stages, Branch branch) {
  if (stages < 0 || stages > 6) throw UsageError("stages must be in 0..6");
  const int d = p.digits();
  if (stages >= 1) {
    p.a3 = BigReal(0L, d);
    p.b5 = BigReal(0L, d);
  }
  if (stages >= 2) p.a7 = -p.b4;
  if (stages >= 6) p.a9 = p.sigma * p.b4;
  if (stages >= 5) {
    p.b6 = checked_sqrt(b6_squared(p.a9, p.b4), "b6");
    if (branch == Branch::Negative) p.b6 = -p.b6;
  }
  if (stages >= 4) p.b8 = b8_of(p.a9, p.b4);
  if (stages >= 3) {
    p.a8 = a8_of(p.a9, p.b4, p.b6);
    p.a5 = p.a7 - p.a9 + p.b6 / num(2, d);
    p.a1 = checked_sqrt((p.b8 - p.a8) / num(2, d), "a1");
    p.b1 = checked_sqrt((p.b8 + p.a8) / num(2, d), "b1");
  }
  p.b2 = p.b4.sign() < 0 ? sqrt(-p.b4) : BigReal(0L, d);
  return p;
}

JLParams substitution_chain(const BigReal& b4, const BigReal& sigma, Branch branch) {
  if (b4.sign() >= 0) throw UsageError("b4 must be negative");
  JLParams p = zero_params(b4.digits());
  p.b4 = b4;
  p.sigma = sigma;
  return apply_stages(std::move(p), 6, branch);
}

const std::vector<std::pair<int, int>>& printed_column_order() {
  static const std::vector<std::pair<int, int>> order{{0, 3}, {0, 4}, {1, 2}, {1, 3},
                                                      {2, 1}, {3, 0}, {3, 1}, {4, 0}};
  return order;
}

namespace {

struct Core {
  JLParams params;
  std::vector<BigReal> L;
  std::vector<long double> bounds;
  PMatrix<BigReal> P;
  DeterminantReport det;
};

Core run_core(const BigReal& b4, const BigReal& sigma, Branch branch) {
  Core c;
  c.params = substitution_chain(b4, sigma, branch);
  c.params.validate();
  const auto vf = jl_vector_field(c.params);
  const auto series = compute_series(vf, 8);
  const auto bounds = compute_series(magnitude_field(vf), 8);
  c.L = series.L;
  for (const auto& m : bounds.L) c.bounds.push_back(m.value());
  c.P = reorder_columns(build_P_matrix(vf, UnknownBasis::FullCoefficient), printed_column_order());
  c.det = determinant(c.P);
  return c;
}

DenseMatrix<BigReal> display_matrix(const PMatrix<BigReal>& P, const BigReal& b4) {
  const BigReal b2 = sqrt(-b4);
  DenseMatrix<BigReal> out = P.matrix;
  for (std::size_t r = 0; r < P.size(); ++r)
    for (std::size_t c = 0; c < P.size(); ++c) {
      const int deg = P.columns[c].degree;
      const BigReal scale = deg == 3 ? pow(b2, 2 * static_cast<int>(r) + 1) : pow(b4, static_cast<int>(r));
      out(r, c) = P.matrix(r, c) / scale;
    }
  return out;
}

double fitted_exponent(const BigReal& v, const BigReal& w, const BigReal& b4, const BigReal& b4w) {
  return (log10_abs(v) - log10_abs(w)) / (log10_abs(b4) - log10_abs(b4w));
}

BigReal max_relative_change(const BigReal& a, const BigReal& b) {
  const BigReal scale = abs(a) > abs(b) ? abs(a) : abs(b);
  if (scale.is_zero()) return BigReal(0L, a.digits());
  return abs(a - b) / scale;
}

}  // namespace

ExampleReport reproduce_example(int root, const Rational& b4, int digits, Branch branch, bool verify_scaling) {
  if (root != 1 && root != 2) throw UsageError("root must be 1 or 2");
  if (b4.sign() >= 0) throw UsageError("b4 must be negative");
  const auto roots = find_sigma_roots(digits);
  ExampleReport rep;
  rep.root = root;
  rep.digits = digits;
  rep.branch = branch;
  rep.b4 = b4;
  rep.sigma = root == 1 ? roots.first : roots.second;

  const BigReal B4(b4, digits);
  Core core = run_core(B4, rep.sigma.value, branch);
  rep.params = core.params;
  rep.L = core.L;
  rep.L_bounds = core.bounds;
  rep.L8_scaled = rep.L[7] / pow(B4, 8);
  rep.P = core.P;
  rep.P_display = display_matrix(rep.P, B4);
  rep.det = core.det;
  rep.det_scaled = rep.det.value / pow(B4, 30);

  if (verify_scaling) {
    const BigReal B4w = B4 / BigReal(2L, digits);
    const Core other = run_core(B4w, rep.sigma.value, branch);
    rep.L8_exponent = fitted_exponent(rep.L[7], other.L[7], B4, B4w);
    rep.det_exponent = fitted_exponent(rep.det.value, other.det.value, B4, B4w);
    const auto disp = display_matrix(other.P, B4w);
    double drift = 0;
    for (std::size_t r = 0; r < disp.rows(); ++r) {
      BigReal row_max(0L, digits);
      for (std::size_t c = 0; c < disp.cols(); ++c) row_max = std::max(row_max, abs(rep.P_display(r, c)));
      for (std::size_t c = 0; c < disp.cols(); ++c)
        if (!row_max.is_zero())
          drift = std::max(drift, (abs(disp(r, c) - rep.P_display(r, c)) / row_max).to_double());
    }
    rep.display_drift = drift;
  }
  return rep;
}

void check_precision(const ExampleReport& lo, const ExampleReport& hi) {
  const BigReal tol = pow10(-lo.digits / 2, lo.L8_scaled);
  auto check = [&](const BigReal& a, const BigReal& b, const std::string& what) {
    if (max_relative_change(a, b) >= tol)
      throw PrecisionError(what + " changed by " + max_relative_change(a, b).str(3) + " between " +
                           std::to_string(lo.digits) + " and " + std::to_string(hi.digits) + " digits");
  };
  check(lo.sigma.value, hi.sigma.value, "sigma");
  check(lo.L8_scaled, hi.L8_scaled, "L_8");
  check(lo.det_scaled, hi.det_scaled, "det P");
  for (std::size_t r = 0; r < lo.P_display.rows(); ++r) {
    BigReal row_max(0L, lo.digits);
    for (std::size_t c = 0; c < lo.P_display.cols(); ++c) row_max = std::max(row_max, abs(lo.P_display(r, c)));
    for (std::size_t c = 0; c < lo.P_display.cols(); ++c) {
      const BigReal diff = abs(lo.P_display(r, c) - hi.P_display(r, c));
      if (!row_max.is_zero() && diff / row_max >= tol)
        throw PrecisionError("P entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") not stable");
    }
  }
  for (const ExampleReport* rep : {&lo, &hi})
    for (int j = 0; j < 7; ++j)
      if (!negligible(rep->L[static_cast<std::size_t>(j)], rep->L_bounds[static_cast<std::size_t>(j)], rep->digits))
        throw PrecisionError("L_" + std::to_string(j + 1) + " not zero at " + std::to_string(rep->digits) +
                             " digits");
}

}  // namespace bautin::jl
