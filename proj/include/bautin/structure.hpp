#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bautin/lyapunov.hpp"
#include "bautin/magnitude.hpp"
#include "bautin/matrix.hpp"

namespace bautin {

// Sparsity pattern of a homogeneous degree-n field.
struct GapProfile {
  int n = 0;

  // V_k can be nonzero only for k = 2 + m(n-1).
  bool v_degree_allowed(int k) const { return k == 2 || (k > 2 && (k - 2) % (n - 1) == 0); }
  // Index step between consecutive admissible L_j.
  int l_step() const { return n % 2 == 0 ? n - 1 : (n - 1) / 2; }
  bool l_index_allowed(int j) const { return j >= 1 && j % l_step() == 0; }
  int first_nonzero() const { return l_step(); }
  // Level m of an admissible index: the constant solved at degree 2 + m(n-1).
  int level_of_index(int j) const { return 2 * j / (n - 1); }

  std::vector<int> l_indices(int up_to) const;
  std::vector<int> v_degrees(int up_to) const;
};

GapProfile gap_profile(int n);

struct GapReport {
  GapProfile profile;
  int max_index = 0;
  std::vector<std::string> violations;
  std::vector<int> nonzero_L;
  std::vector<int> nonzero_V;
  std::optional<int> first_nonzero_observed;
  bool all_zero = false;  // partial center condition met up to the budget

  bool pass() const { return violations.empty(); }
};

GapReport verify_gaps(const LyapunovSeries<Rational>& series);

int center_number_bound(int n, bool homogeneous);

// Leading nontrivial Lyapunov constant indices in pattern order, C of them.
std::vector<int> nontrivial_indices(int n, bool homogeneous);

template <FieldScalar S>
struct PMatrix {
  DenseMatrix<S> matrix;
  std::vector<int> row_index;          // row r holds L_{row_index[r]}
  std::vector<UnknownSlot> columns;    // column c is unknown columns[c]
  std::vector<S> offset;               // constant part of each row constant
  std::vector<S> unknown_values;       // plain value of each column unknown
  std::vector<S> row_values;           // plain value of each row constant
  int n = 0;
  bool homogeneous = true;
  UnknownBasis basis = UnknownBasis::HomogeneousPart;
  // Odd homogeneous n: L_{(n-1)/2}, not part of the matrix.
  std::optional<std::pair<int, S>> standalone;

  std::size_t size() const { return matrix.rows(); }
  std::string column_label(std::size_t c) const {
    const auto& u = columns.at(c);
    return "v" + std::to_string(u.x_exp) + "," + std::to_string(u.y_exp);
  }
  std::string row_label(std::size_t r) const { return "L_" + std::to_string(row_index.at(r)); }
};

struct DeterminantReport {
  BigReal value;
  BigReal hadamard;  // product of row 2-norms, an upper bound on |det|
  double growth = 1;  // max |U_ij| / max |A_ij| of the elimination
};

Rational det_exact(const DenseMatrix<Rational>& m);
DeterminantReport det_pivoted(const DenseMatrix<BigReal>& m);

// Permutes columns into the requested (x, y) label order; every label must
// name exactly one column.
template <FieldScalar S>
PMatrix<S> reorder_columns(const PMatrix<S>& P, const std::vector<std::pair<int, int>>& order) {
  if (order.size() != P.columns.size()) throw UsageError("column order has the wrong length");
  std::vector<std::size_t> perm;
  for (const auto& [x, y] : order) {
    std::size_t hit = P.columns.size();
    for (std::size_t c = 0; c < P.columns.size(); ++c)
      if (P.columns[c].x_exp == x && P.columns[c].y_exp == y) hit = c;
    if (hit == P.columns.size())
      throw UsageError("column v" + std::to_string(x) + "," + std::to_string(y) + " not in P");
    for (std::size_t p : perm)
      if (p == hit) throw UsageError("column order repeats a label");
    perm.push_back(hit);
  }
  PMatrix<S> out = P;
  for (std::size_t c = 0; c < perm.size(); ++c) {
    out.columns[c] = P.columns[perm[c]];
    out.unknown_values[c] = P.unknown_values[perm[c]];
    for (std::size_t r = 0; r < P.matrix.rows(); ++r) out.matrix(r, c) = P.matrix(r, perm[c]);
  }
  return out;
}

// Runs the unknown-carrying engine on levels {n} (homogeneous) or {2..n} and
// reads off the coefficients of the designated row constants.
template <FieldScalar S>
PMatrix<S> build_P_matrix(const VectorField<S>& vf, UnknownBasis basis = UnknownBasis::HomogeneousPart) {
  const int n = vf.degree();
  const bool homog = vf.is_homogeneous();
  std::set<int> levels;
  if (homog) {
    levels.insert(n);
  } else {
    for (int k = 2; k <= n; ++k) levels.insert(k);
  }
  std::vector<int> rows = nontrivial_indices(n, homog);
  std::optional<int> standalone_index;
  if (homog && n % 2 == 1) {
    standalone_index = rows.front();
    rows.erase(rows.begin());
  }
  const int J = rows.back();
  const auto series = compute_series_unknown(vf, levels, J, basis);
  if (series.unknowns.size() != rows.size())
    throw InternalError("P matrix: " + std::to_string(rows.size()) + " rows but " +
                        std::to_string(series.unknowns.size()) + " unknowns");

  const S zero = vf.zero();
  PMatrix<S> P;
  P.n = n;
  P.homogeneous = homog;
  P.basis = basis;
  P.row_index = rows;
  P.columns = series.unknowns;
  P.unknown_values = series.unknown_values;
  P.matrix = DenseMatrix<S>(rows.size(), rows.size(), zero);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& form = series.lyapunov_constant(rows[r]);
    P.offset.push_back(form.constant());
    P.row_values.push_back(form.evaluate(series.unknown_values));
    for (std::size_t c = 0; c < series.unknowns.size(); ++c)
      P.matrix(r, c) = form.coefficient(series.unknowns[c].id);
  }
  if (standalone_index) {
    const auto& form = series.lyapunov_constant(*standalone_index);
    if (form.carries_unknowns()) throw InternalError("standalone constant depends on the unknowns");
    P.standalone = std::make_pair(*standalone_index, form.constant());
  }
  return P;
}

inline Rational determinant(const PMatrix<Rational>& P) { return det_exact(P.matrix); }
inline DeterminantReport determinant(const PMatrix<BigReal>& P) { return det_pivoted(P.matrix); }

enum class Verdict { Center, WeakFocus, Inconclusive };

std::string verdict_name(Verdict v);

struct CenterCertificate {
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  int bound = 0;                         // C
  std::optional<int> weak_focus_order;   // W
  std::optional<int> weak_focus_index;   // j of the first nonzero L_j
  std::vector<int> indices;              // nontrivial indices examined
  std::vector<std::string> constants;    // their values, same order
  std::optional<std::string> det;        // det P when it was needed
  bool generic = false;                  // det P != 0
  bool equality_attained = false;        // W == C with det P != 0
  int budget = 0;                        // largest L index computed
  int digits = 0;                        // 0 for exact arithmetic
  bool homogeneous = true;
};

CenterCertificate center_check(const VectorField<Rational>& vf);

// Floating version.  `make_field(d)` must build the same field at d digits;
// the verdict is recomputed at 2*digits and must agree.
CenterCertificate center_check_real(const std::function<VectorField<BigReal>(int)>& make_field, int digits);

// Zero test for a value computed at `digits` whose replay over Magnitude
// returned `bound`.
bool negligible(const BigReal& value, long double bound, int digits);

VectorField<Magnitude> magnitude_field(const VectorField<BigReal>& vf);

}  // namespace bautin
