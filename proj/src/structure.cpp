#include "bautin/structure.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>

namespace bautin {

std::vector<int> GapProfile::l_indices(int up_to) const {
  std::vector<int> out;
  for (int j = l_step(); j <= up_to; j += l_step()) out.push_back(j);
  return out;
}

std::vector<int> GapProfile::v_degrees(int up_to) const {
  std::vector<int> out;
  for (int k = 2; k <= up_to; ++k)
    if (v_degree_allowed(k)) out.push_back(k);
  return out;
}

GapProfile gap_profile(int n) {
  if (n < 2) throw UsageError("gap_profile needs n >= 2");
  return GapProfile{n};
}

GapReport verify_gaps(const LyapunovSeries<Rational>& series) {
  if (!series.source.is_homogeneous())
    throw UsageError("verify_gaps: the field is not homogeneous, no gap pattern applies");
  GapReport rep;
  rep.profile = gap_profile(series.source.degree());
  rep.max_index = series.max_index;
  for (const auto& [k, v] : series.V) {
    if (k == 2 || v.is_zero()) continue;
    rep.nonzero_V.push_back(k);
    if (!rep.profile.v_degree_allowed(k)) rep.violations.push_back("V_" + std::to_string(k) + " is nonzero");
  }
  for (int j = 1; j <= static_cast<int>(series.L.size()); ++j) {
    if (series.lyapunov_constant(j).is_zero()) continue;
    rep.nonzero_L.push_back(j);
    if (!rep.first_nonzero_observed) rep.first_nonzero_observed = j;
    if (!rep.profile.l_index_allowed(j)) rep.violations.push_back("L_" + std::to_string(j) + " is nonzero");
  }
  rep.all_zero = rep.nonzero_L.empty();
  return rep;
}

int center_number_bound(int n, bool homogeneous) {
  if (n < 2) throw UsageError("center_number_bound needs n >= 2");
  if (homogeneous) return n + 2;
  return n % 2 == 0 ? (n * n + 4 * n - 4) / 2 : (n * n + 4 * n - 5) / 2;
}

std::vector<int> nontrivial_indices(int n, bool homogeneous) {
  const int C = center_number_bound(n, homogeneous);
  std::vector<int> out;
  const int step = homogeneous ? gap_profile(n).l_step() : 1;
  for (int m = 1; m <= C; ++m) out.push_back(m * step);
  return out;
}

Rational det_exact(const DenseMatrix<Rational>& m) {
  if (!m.square()) throw UsageError("det_exact needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  // Clear denominators row by row, then run Bareiss over the integers.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).denominator().get_mpz_t());
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).numerator() * (l / m(r, c).denominator());
    scale *= l;
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  mpq_class det(a[n - 1][n - 1] * sign, scale);
  return Rational(det);
}

DeterminantReport det_pivoted(const DenseMatrix<BigReal>& m) {
  if (!m.square()) throw UsageError("det_pivoted needs a square matrix");
  const std::size_t n = m.rows();
  DeterminantReport rep{BigReal(1L), BigReal(1L), 1.0};
  if (n == 0) return rep;
  int digits = 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) digits = std::max(digits, m(r, c).digits());
  digits = std::max(digits, BigReal::kMinDigits);

  BigReal hadamard(1L, digits);
  BigReal max_in(0L, digits);
  for (std::size_t r = 0; r < n; ++r) {
    BigReal norm2(0L, digits);
    for (std::size_t c = 0; c < n; ++c) {
      norm2 += m(r, c) * m(r, c);
      if (abs(m(r, c)) > max_in) max_in = abs(m(r, c));
    }
    hadamard *= sqrt(norm2);
  }
  rep.hadamard = hadamard;

  DenseMatrix<BigReal> a = m;
  BigReal det(1L, digits);
  BigReal max_u = max_in;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs(a(r, col)) > abs(a(piv, col))) piv = r;
    if (a(piv, col).is_zero()) {
      rep.value = BigReal(0L, digits);
      return rep;
    }
    if (piv != col) {
      a.swap_rows(piv, col);
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const BigReal f = a(r, col) / a(col, col);
      for (std::size_t c = col + 1; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        if (abs(a(r, c)) > max_u) max_u = abs(a(r, c));
      }
    }
  }
  rep.value = det;
  rep.growth = max_in.is_zero() ? 1.0 : (max_u / max_in).to_double();
  return rep;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Center: return "Center(generic)";
    case Verdict::WeakFocus: return "WeakFocus";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

CenterCertificate center_check(const VectorField<Rational>& vf) {
  CenterCertificate cert;
  cert.homogeneous = vf.is_homogeneous();
  cert.bound = center_number_bound(vf.degree(), cert.homogeneous);
  cert.indices = nontrivial_indices(vf.degree(), cert.homogeneous);
  cert.budget = cert.indices.back();
  const auto series = compute_series(vf, cert.budget);
  for (std::size_t pos = 0; pos < cert.indices.size(); ++pos) {
    const Rational& L = series.lyapunov_constant(cert.indices[pos]);
    cert.constants.push_back(L.str());
    if (!cert.weak_focus_order && !L.is_zero()) {
      cert.weak_focus_order = static_cast<int>(pos) + 1;
      cert.weak_focus_index = cert.indices[pos];
    }
  }
  const bool need_det = !cert.weak_focus_order || *cert.weak_focus_order == cert.bound;
  if (need_det) {
    const Rational det = determinant(build_P_matrix(vf));
    cert.det = det.str();
    cert.generic = !det.is_zero();
  }
  if (cert.weak_focus_order) {
    cert.verdict = Verdict::WeakFocus;
    cert.equality_attained = *cert.weak_focus_order == cert.bound && cert.generic;
  } else if (cert.generic) {
    cert.verdict = Verdict::Center;
  } else {
    cert.verdict = Verdict::Inconclusive;
    cert.reason = "degenerate: det P = 0";
  }
  return cert;
}

bool negligible(const BigReal& value, long double bound, int digits) {
  if (value.is_zero()) return true;
  if (!(bound > 0)) return false;
  return log10_abs(value) <= static_cast<double>(10 - digits) + static_cast<double>(std::log10(bound));
}

VectorField<Magnitude> magnitude_field(const VectorField<BigReal>& vf) {
  return vf.map([](const BigReal& c) { return Magnitude(abs(c).to_long_double()); });
}

namespace {

CenterCertificate center_check_once(const VectorField<BigReal>& vf, int digits) {
  CenterCertificate cert;
  cert.digits = digits;
  cert.homogeneous = vf.is_homogeneous();
  cert.bound = center_number_bound(vf.degree(), cert.homogeneous);
  cert.indices = nontrivial_indices(vf.degree(), cert.homogeneous);
  cert.budget = cert.indices.back();
  const auto series = compute_series(vf, cert.budget);
  const auto bounds = compute_series(magnitude_field(vf), cert.budget);
  for (std::size_t pos = 0; pos < cert.indices.size(); ++pos) {
    const int j = cert.indices[pos];
    const BigReal& L = series.lyapunov_constant(j);
    cert.constants.push_back(L.str(std::min(digits, 40)));
    if (!cert.weak_focus_order && !negligible(L, bounds.lyapunov_constant(j).value(), digits)) {
      cert.weak_focus_order = static_cast<int>(pos) + 1;
      cert.weak_focus_index = j;
    }
  }
  const bool need_det = !cert.weak_focus_order || *cert.weak_focus_order == cert.bound;
  if (need_det) {
    const auto det = determinant(build_P_matrix(vf));
    cert.det = det.value.str(std::min(digits, 40));
    cert.generic = !negligible(det.value, det.hadamard.to_long_double(), digits);
  }
  if (cert.weak_focus_order) {
    cert.verdict = Verdict::WeakFocus;
    cert.equality_attained = *cert.weak_focus_order == cert.bound && cert.generic;
  } else if (cert.generic) {
    cert.verdict = Verdict::Center;
  } else {
    cert.verdict = Verdict::Inconclusive;
    cert.reason = "degenerate: det P = 0 to working precision";
  }
  return cert;
}

}  // namespace

CenterCertificate center_check_real(const std::function<VectorField<BigReal>(int)>& make_field, int digits) {
  if (digits < BigReal::kMinDigits)
    throw UsageError("precision must be at least " + std::to_string(BigReal::kMinDigits) + " digits");
  CenterCertificate cert = center_check_once(make_field(digits), digits);
  const CenterCertificate check = center_check_once(make_field(2 * digits), 2 * digits);
  if (check.verdict != cert.verdict || check.weak_focus_order != cert.weak_focus_order ||
      check.generic != cert.generic) {
    cert.verdict = Verdict::Inconclusive;
    cert.reason = "verdict at " + std::to_string(digits) + " digits not reproduced at " +
                  std::to_string(2 * digits) + " digits";
    cert.equality_attained = false;
  }
  return cert;
}

}  // namespace bautin
