#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bautin/bigreal.hpp"
#include "bautin/structure.hpp"
#include "bautin/vector_field.hpp"

namespace bautin::jl {

// Cubic family
//   x' = -y + a1 x^2 - 2 b1 xy + (a3 - a1) y^2 - a5 x^2 y - a7 y^3
//   y' =  x + b1 x^2 + 2 a1 xy - b1 y^2 - b4 x^3 - b5 x^2 y - (b6 - a5) x y^2
// together with the auxiliary parameters a8, a9, b8 of the substitution chain.
struct JLParams {
  BigReal a1, b1, a3, a5, a7, a8, a9, b4, b5, b6, b8;
  BigReal sigma;
  BigReal b2;  // sqrt(-b4) when b4 < 0, else 0

  int digits() const { return b4.digits(); }
  // Throws UsageError naming the first violated chain invariant.
  void validate() const;
};

JLParams zero_params(int digits);

VectorField<BigReal> jl_vector_field(const JLParams& p);

enum class Branch { Positive, Negative };  // sign taken for b6

// The degree-10 polynomial whose roots make the seventh constant vanish.
struct QPolynomial {
  // Ascending powers.
  static const std::array<long long, 11>& coefficients();
  static void check_anchors();  // throws InternalError on a transcription slip
  static Rational eval(const Rational& s);
  static BigReal eval(const BigReal& s);
  static BigReal derivative(const BigReal& s);
};

// Number of distinct real roots of Q, by a Sturm sequence in exact arithmetic.
int sturm_real_root_count();

struct RealRoot {
  BigReal value;
  BigReal b6_squared;  // at b4 = -1
  bool admissible = false;  // b6 real
};

// All real roots of Q in ascending order, isolated with Sturm counts and
// refined by bisection.
std::vector<RealRoot> real_roots(int digits);

struct SigmaRoot {
  BigReal value;
  std::pair<Rational, Rational> bracket;
  std::vector<double> newton_residuals;  // log10 |Q| after each Newton step
};

// The two admissible roots, bisected inside their printed brackets and
// polished by Newton.
std::pair<SigmaRoot, SigmaRoot> find_sigma_roots(int digits);

// Rational functions of the chain.
BigReal b6_squared(const BigReal& a9, const BigReal& b4);
BigReal a8_of(const BigReal& a9, const BigReal& b4, const BigReal& b6);
BigReal b8_of(const BigReal& a9, const BigReal& b4);

// Applies the first `stages` substitutions to `p`:
//   1: a3 = b5 = 0;  2: a7 = -b4;  3: a8 = a8(a9, b4, b6) with a1, b1, a5 from
//   the change of variables;  4: b8 = b8(a9, b4);  5: b6 = +-sqrt(b6^2(a9, b4));
//   6: a9 = sigma b4.
// Throws DomainError naming the stage at a negative radicand or zero denominator.
JLParams apply_stages(JLParams p, int stages, Branch branch = Branch::Negative);

JLParams substitution_chain(const BigReal& b4, const BigReal& sigma, Branch branch = Branch::Negative);

// Printed column order v03, v04, v12, v13, v21, v30, v31, v40 (v_ij multiplies x^i y^j).
const std::vector<std::pair<int, int>>& printed_column_order();

struct ExampleReport {
  int root = 1;
  int digits = 0;
  Branch branch = Branch::Negative;
  Rational b4;
  SigmaRoot sigma;
  JLParams params;
  std::vector<BigReal> L;             // L_1..L_8
  std::vector<long double> L_bounds;  // running error bounds for the zero test
  BigReal L8_scaled;                  // L_8 / b4^8
  PMatrix<BigReal> P;                 // printed column order
  DenseMatrix<BigReal> P_display;     // P with the b2 / b4 column powers divided out
  DeterminantReport det;
  BigReal det_scaled;                 // det P / b4^30
  std::optional<double> L8_exponent;  // fitted from a second b4
  std::optional<double> det_exponent;
  std::optional<double> display_drift;  // max relative change of P_display
};

// Runs the chain for root 1 or 2, then the engine and the P matrix.  With
// verify_scaling the whole computation is repeated at b4/2 and the b4
// exponents of L_8 and det P are fitted.
ExampleReport reproduce_example(int root, const Rational& b4, int digits, Branch branch = Branch::Negative,
                                bool verify_scaling = true);

// Throws PrecisionError unless `hi` (computed at higher precision) reproduces
// sigma, L_8, det P and every displayed P entry of `lo` to relative
// 10^(-lo.digits/2), and both runs see L_1..L_7 as zero.
void check_precision(const ExampleReport& lo, const ExampleReport& hi);

}  // namespace bautin::jl
