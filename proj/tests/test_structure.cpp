#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bautin/random_field.hpp"
#include "bautin/structure.hpp"
#include "support.hpp"

using namespace bautin;
using test::poly;

namespace {

// Laplace expansion along the first row.
Rational cofactor_det(const DenseMatrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational acc(0);
  for (std::size_t c = 0; c < n; ++c) {
    DenseMatrix<Rational> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const Rational term = m(0, c) * cofactor_det(minor);
    acc = c % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

DenseMatrix<Rational> random_matrix(std::size_t n, gen::Rng& rng) {
  DenseMatrix<Rational> m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = gen::random_rational(rng);
  return m;
}

template <class S>
std::vector<S> apply(const PMatrix<S>& P) {
  std::vector<S> out;
  for (std::size_t r = 0; r < P.size(); ++r) {
    S acc = P.offset[r];
    for (std::size_t c = 0; c < P.size(); ++c) acc = acc + P.matrix(r, c) * P.unknown_values[c];
    out.push_back(acc);
  }
  return out;
}

}  // namespace

TEST_CASE("gap_profile examples") {
  const auto p4 = gap_profile(4);
  CHECK(p4.l_indices(9) == std::vector<int>{3, 6, 9});
  CHECK(p4.first_nonzero() == 3);
  const auto p5 = gap_profile(5);
  CHECK(p5.l_indices(6) == std::vector<int>{2, 4, 6});
  CHECK(p5.first_nonzero() == 2);
  const auto p3 = gap_profile(3);
  CHECK(p3.l_indices(3) == std::vector<int>{1, 2, 3});
  CHECK(p3.first_nonzero() == 1);
  CHECK(gap_profile(2).first_nonzero() == 1);
  CHECK(gap_profile(6).first_nonzero() == 5);
  CHECK(p4.v_degrees(11) == std::vector<int>{2, 5, 8, 11});
  CHECK(p4.level_of_index(6) == 4);
  CHECK(p5.level_of_index(6) == 3);
  CHECK_THROWS_AS(gap_profile(1), UsageError);
}

TEST_CASE("verify_gaps examples") {
  auto rng = test::rng(21);
  SUBCASE("quadratic") {
    const auto rep = verify_gaps(compute_series(gen::random_homogeneous_field(2, rng), 8));
    CHECK(rep.pass());
    CHECK(rep.first_nonzero_observed == 1);
  }
  SUBCASE("quintic") {
    const auto rep = verify_gaps(compute_series(gen::random_homogeneous_field(5, rng), 8));
    CHECK(rep.pass());
    for (int j : rep.nonzero_L) CHECK(j % 2 == 0);
  }
  SUBCASE("divergence-free") {
    const auto rep = verify_gaps(compute_series(gen::random_divergence_free(3, true, rng), 8));
    CHECK(rep.pass());
    CHECK(rep.all_zero);
  }
  SUBCASE("a corrupted series is caught") {
    auto s = compute_series(gen::random_homogeneous_field(4, rng), 6);
    s.L[0] = Rational(1);
    const auto rep = verify_gaps(s);
    CHECK(!rep.pass());
    CHECK(rep.violations.front() == "L_1 is nonzero");
  }
  CHECK_THROWS_AS(verify_gaps(compute_series(gen::random_field(3, rng), 4)), UsageError);
}

TEST_CASE("center_number_bound examples") {
  CHECK(center_number_bound(3, false) == 8);
  CHECK(center_number_bound(4, true) == 6);
  CHECK(center_number_bound(4, false) == 14);
  CHECK(center_number_bound(5, false) == 20);
  CHECK(center_number_bound(6, false) == 28);
  for (int n = 2; n <= 5; ++n) CHECK(center_number_bound(n, true) == n + 2);
  CHECK_THROWS_AS(center_number_bound(1, true), UsageError);
}

TEST_CASE("non-homogeneous bound equals the number of free coefficients") {
  for (int n = 2; n <= 8; ++n) {
    int count = 0;
    for (int i = 2; i <= n; ++i) count += (i + 2) - (i % 2 == 1 ? 1 : 0);
    CHECK(center_number_bound(n, false) == count);
  }
}

TEST_CASE("det_exact") {
  DenseMatrix<Rational> id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = Rational(1);
  CHECK(det_exact(id) == Rational(1));

  auto rng = test::rng(22);
  auto rep = random_matrix(4, rng);
  for (std::size_t c = 0; c < 4; ++c) rep(2, c) = rep(0, c);
  CHECK(det_exact(rep) == Rational(0));

  for (std::size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const auto m = random_matrix(n, rng);
      CHECK(det_exact(m) == cofactor_det(m));
    }

  // Zero leading pivot forces a row swap.
  DenseMatrix<Rational> swap(2, 2);
  swap(0, 1) = Rational(1);
  swap(1, 0) = Rational(1);
  CHECK(det_exact(swap) == Rational(-1));
}

TEST_CASE("det_pivoted agrees with the exact determinant") {
  auto rng = test::rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = random_matrix(6, rng);
    DenseMatrix<BigReal> b(6, 6);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c) b(r, c) = BigReal(m(r, c), 50);
    const auto rep = det_pivoted(b);
    const BigReal exact(det_exact(m), 50);
    if (exact.is_zero()) continue;
    CHECK(log10_abs(rep.value - exact) < log10_abs(exact) - 40);
    CHECK(abs(rep.value) <= rep.hadamard);
    CHECK(rep.growth >= 1.0);
  }
}

TEST_CASE("build_P_matrix shapes") {
  auto rng = test::rng(24);
  SUBCASE("homogeneous quadratic") {
    const auto P = build_P_matrix(gen::random_homogeneous_field(2, rng));
    CHECK(P.size() == 4);
    CHECK(P.row_index == std::vector<int>{1, 2, 3, 4});
    CHECK(!P.standalone);
    CHECK(!determinant(P).is_zero());
  }
  SUBCASE("homogeneous cubic") {
    const auto vf = gen::random_homogeneous_field(3, rng);
    const auto P = build_P_matrix(vf);
    CHECK(P.size() == 4);
    CHECK(P.row_index == std::vector<int>{2, 3, 4, 5});
    REQUIRE(P.standalone);
    CHECK(P.standalone->first == 1);
    CHECK(P.standalone->second == compute_series(vf, 1).lyapunov_constant(1));
  }
  SUBCASE("homogeneous quartic") {
    const auto P = build_P_matrix(gen::random_homogeneous_field(4, rng));
    CHECK(P.size() == 6);
    CHECK(P.row_index == std::vector<int>{3, 6, 9, 12, 15, 18});
  }
  SUBCASE("general cubic") {
    const auto P = build_P_matrix(gen::random_field(3, rng));
    CHECK(P.size() == 8);
    CHECK(P.row_index == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(P.column_label(0) == "v3,0");
    CHECK(P.column_label(4) == "v4,0");
  }
}

TEST_CASE("property: P times the plain unknowns gives the plain constants") {
  auto rng = test::rng(25);
  for (int n = 2; n <= 5; ++n)
    for (bool homog : {true, false}) {
      if (!homog && n > 4) continue;
      for (auto basis : {UnknownBasis::HomogeneousPart, UnknownBasis::FullCoefficient}) {
        const auto vf = homog ? gen::random_homogeneous_field(n, rng) : gen::random_field(n, rng);
        const auto P = build_P_matrix(vf, basis);
        const auto plain = compute_series(vf, P.row_index.back());
        const auto lhs = apply(P);
        for (std::size_t r = 0; r < P.size(); ++r) {
          CHECK(lhs[r] == plain.lyapunov_constant(P.row_index[r]));
          CHECK(P.row_values[r] == lhs[r]);
          if (homog) CHECK(P.offset[r].is_zero());
        }
      }
    }
}

TEST_CASE("the two unknown bases give the same determinant") {
  auto rng = test::rng(26);
  for (int trial = 0; trial < 3; ++trial) {
    const auto vf = gen::random_field(3, rng);
    CHECK(determinant(build_P_matrix(vf, UnknownBasis::HomogeneousPart)) ==
          determinant(build_P_matrix(vf, UnknownBasis::FullCoefficient)));
  }
}

TEST_CASE("reorder_columns") {
  auto rng = test::rng(27);
  const auto P = build_P_matrix(gen::random_homogeneous_field(2, rng));
  const std::vector<std::pair<int, int>> order{{0, 3}, {1, 2}, {2, 1}, {3, 0}};
  const auto Q = reorder_columns(P, order);
  CHECK(Q.column_label(0) == "v0,3");
  CHECK(Q.matrix(1, 0) == P.matrix(1, 3));
  CHECK(apply(Q) == apply(P));
  // Reversing four columns is an even permutation.
  CHECK(determinant(Q) == determinant(P));
  CHECK_THROWS_AS(reorder_columns(P, {{0, 3}}), UsageError);
  CHECK_THROWS_AS(reorder_columns(P, {{0, 3}, {0, 3}, {2, 1}, {3, 0}}), UsageError);
}

TEST_CASE("rotational family: zero drive gives zero unknowns") {
  auto rng = test::rng(28);
  for (int n : {2, 4, 6}) {
    const auto vf = gen::random_rotational(n, rng);
    const auto P = build_P_matrix(vf);
    for (const auto& v : P.unknown_values) CHECK(v.is_zero());
    for (const auto& L : compute_series(vf, P.row_index.back()).L) CHECK(L.is_zero());
  }
}

TEST_CASE("center_check examples") {
  SUBCASE("divergence-free cubic") {
    auto rng = test::rng(29);
    for (int trial = 0; trial < 3; ++trial) {
      const auto cert = center_check(gen::random_divergence_free(3, trial % 2 == 0, rng));
      CHECK(cert.verdict != Verdict::WeakFocus);
    }
  }
  SUBCASE("cubic f30 = 1") {
    const auto cert = center_check(parse_vector_field("n 3\nF 3 0 1\n"));
    CHECK(cert.verdict == Verdict::WeakFocus);
    CHECK(cert.weak_focus_order == 1);
    CHECK(cert.constants.front() == "3/8");
    CHECK(cert.bound == 5);
  }
  SUBCASE("zero nonlinearity is degenerate") {
    const auto cert = center_check(VectorField<Rational>(3));
    CHECK(cert.verdict == Verdict::Inconclusive);
    CHECK(cert.reason.find("det P = 0") != std::string::npos);
  }
}

TEST_CASE("property: certificate consistency") {
  auto rng = test::rng(30);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    VectorField<Rational> vf = trial % 4 == 0   ? gen::random_divergence_free(n, trial % 8 == 0, rng)
                               : trial % 4 == 1 ? gen::random_homogeneous_field(n, rng)
                                                : gen::random_field(n, rng);
    const auto cert = center_check(vf);
    const auto s = compute_series(vf, cert.budget);
    if (cert.verdict == Verdict::WeakFocus) {
      const int W = *cert.weak_focus_order;
      CHECK(W <= cert.bound);
      for (int pos = 0; pos < W - 1; ++pos) CHECK(s.lyapunov_constant(cert.indices[pos]).is_zero());
      CHECK(!s.lyapunov_constant(cert.indices[W - 1]).is_zero());
    }
    if (cert.verdict == Verdict::Center) {
      CHECK(cert.generic);
      for (int j : cert.indices) CHECK(s.lyapunov_constant(j).is_zero());
    }
  }
}

TEST_CASE("floating center_check matches the exact one") {
  const std::string text = "n 3\nF 3 0 1\nG 2 1 1/3\n";
  const auto exact = center_check(parse_vector_field(text));
  const auto real = center_check_real([&](int d) { return parse_vector_field_real(text, d); }, 40);
  CHECK(real.verdict == exact.verdict);
  CHECK(real.weak_focus_order == exact.weak_focus_order);
  CHECK(real.digits == 40);
  CHECK_THROWS_AS(center_check_real([&](int d) { return parse_vector_field_real(text, d); }, 10), UsageError);
}

TEST_CASE("negligible uses the relative bound") {
  CHECK(negligible(BigReal(0L, 40), 0, 40));
  CHECK(negligible(BigReal(Rational(1, 1000000), 60), 1e20L, 60) == false);
  CHECK(negligible(BigReal::parse("1e-45", 60), 1e10L, 60));
  CHECK(!negligible(BigReal::parse("1e-35", 60), 1e10L, 60));
  CHECK(!negligible(BigReal(1L, 60), 0, 60));
}
