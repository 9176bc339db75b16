#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bautin/lyapunov.hpp"
#include "bautin/random_field.hpp"
#include "bautin/structure.hpp"
#include "support.hpp"

using namespace bautin;
using test::poly;

namespace {

VectorField<Rational> cubic(std::initializer_list<std::tuple<int, int, Rational>> f,
                            std::initializer_list<std::tuple<int, int, Rational>> g) {
  VectorField<Rational> vf(3);
  vf.set_F(3, poly(3, f));
  vf.set_G(3, poly(3, g));
  return vf;
}

}  // namespace

TEST_CASE("rotational_solve: zero right-hand side at odd degree") {
  const auto sol = rotational_solve(3, HomogPoly<Rational>(3));
  CHECK(sol.V.is_zero());
  CHECK(!sol.L);
  CHECK(!sol.tiebreak);
}

// Degree 4 with R = x F_3 + y G_3.  Matching x^4, x^2 y^2, y^4 couples
// (v31, v13, L):
//   [ -1  0  1 ] [v31]   [ f30         ]
//   [  3 -3  2 ] [v13] = [ f12 + g21   ]
//   [  0  1  1 ] [L  ]   [ g03         ]
// and matching x^3 y, x y^3 couples (v40, v22, v04) with v22 pinned to 0:
//   -4 v40 + 2 v22 = -(f21 + g30),  -2 v22 + 4 v04 = -(f03 + g12).
// The 3x3 determinant is 8, and Cramer's rule gives
//   L_1 = (3 f30 + f12 + g21 + 3 g03) / 8,
//   v31 = (-5 f30 + (f12 + g21) + 3 g03) / 8,
//   v13 = (-3 f30 - (f12 + g21) + 5 g03) / 8,
//   v40 = (f21 + g30) / 4,  v04 = -(f03 + g12) / 4.
TEST_CASE("rotational_solve: degree-4 fixtures") {
  SUBCASE("F_3 = x^3") {
    const auto sol = rotational_solve(4, poly(4, {{4, 0, 1}}));
    REQUIRE(sol.L);
    CHECK(*sol.L == Rational(3, 8));
    CHECK(sol.V == poly(4, {{3, 1, Rational(-5, 8)}, {1, 3, Rational(-3, 8)}}));
    REQUIRE(sol.tiebreak);
    CHECK(*sol.tiebreak == TieBreakRecord{4, 2, 2});
  }
  SUBCASE("F_3 = y^3") {
    const auto sol = rotational_solve(4, poly(4, {{1, 3, 1}}));
    CHECK(*sol.L == Rational(0));
    CHECK(sol.V == poly(4, {{0, 4, Rational(-1, 4)}}));
  }
}

TEST_CASE("tie-break slots") {
  // k/2 = 2m pins v_{2m,2m}; k/2 = 2m+1 pins v_{2m,2m+2}.
  CHECK(tiebreak_for_degree(4) == TieBreakRecord{4, 2, 2});
  CHECK(tiebreak_for_degree(6) == TieBreakRecord{6, 2, 4});
  CHECK(tiebreak_for_degree(8) == TieBreakRecord{8, 4, 4});
  CHECK(tiebreak_for_degree(10) == TieBreakRecord{10, 4, 6});
  auto rng = test::rng(3);
  for (int k = 4; k <= 20; k += 2) {
    const auto sol = rotational_solve(k, gen::random_homog(k, rng));
    CHECK(sol.V.at(sol.tiebreak->x_exp, sol.tiebreak->y_exp).is_zero());
  }
}

TEST_CASE("rotational_solve rejects bad input") {
  CHECK_THROWS_AS(rotational_solve(2, HomogPoly<Rational>(2)), UsageError);
  CHECK_THROWS_AS(rotational_solve(5, HomogPoly<Rational>(4)), UsageError);
}

TEST_CASE("accumulate_rhs for a homogeneous cubic") {
  auto rng = test::rng(4);
  const auto vf = gen::random_homogeneous_field(3, rng);
  const auto s = compute_series(vf, 2);
  CHECK(accumulate_rhs(vf, s.V, 4) == hp_add(times_x(vf.F(3)), times_y(vf.G(3))));
  CHECK(s.term(3).is_zero());
  CHECK(accumulate_rhs(vf, s.V, 5).is_zero());
  const auto& V4 = s.term(4);
  CHECK(accumulate_rhs(vf, s.V, 6) == hp_add(hp_mul(hp_dx(V4), vf.F(3)), hp_mul(hp_dy(V4), vf.G(3))));
}

TEST_CASE("compute_series examples") {
  SUBCASE("divergence-free quadratic") {
    VectorField<Rational> vf(2);
    vf.f(2, 0) = Rational(1);
    vf.g(1, 1) = Rational(-2);
    const auto s = compute_series(vf, 6);
    REQUIRE(s.L.size() == 6);
    for (const auto& L : s.L) CHECK(L.is_zero());
  }
  SUBCASE("cubic f30 = 1") {
    const auto s = compute_series(cubic({{3, 0, 1}}, {}), 1);
    CHECK(s.lyapunov_constant(1) == Rational(3, 8));
    CHECK(s.term(2) == poly(2, {{2, 0, Rational(1, 2)}, {0, 2, Rational(1, 2)}}));
    CHECK(s.tiebreaks.size() == 1);
  }
  SUBCASE("random quartic") {
    auto rng = test::rng(5);
    const auto s = compute_series(gen::random_homogeneous_field(4, rng), 3);
    CHECK(s.lyapunov_constant(1).is_zero());
    CHECK(s.lyapunov_constant(2).is_zero());
    CHECK(!s.lyapunov_constant(3).is_zero());
  }
  CHECK_THROWS_AS(compute_series(cubic({}, {}), 0), UsageError);
  CHECK_THROWS_AS(compute_series(cubic({}, {}), 1).lyapunov_constant(2), UsageError);
}

TEST_CASE("cubic L_1 closed form") {
  auto rng = test::rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto vf = gen::random_homogeneous_field(3, rng);
    const Rational expect =
        (Rational(3) * vf.f(3, 0) + vf.f(1, 2) + vf.g(2, 1) + Rational(3) * vf.g(0, 3)) / Rational(8);
    CHECK(compute_series(vf, 1).lyapunov_constant(1) == expect);
  }
}

TEST_CASE("property: residual vanishes at every degree") {
  auto rng = test::rng(7);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      const auto vf = trial == 0 ? gen::random_homogeneous_field(n, rng) : gen::random_field(n, rng);
      const int J = n + 3;
      const auto s = compute_series(vf, J);
      for (int k = 3; k <= 2 * J + 2; ++k) {
        const auto R = accumulate_rhs(vf, s.V, k);
        std::optional<Rational> L;
        if (k % 2 == 0) L = s.lyapunov_constant(k / 2 - 1);
        CHECK(rotational_residual(k, s.term(k), R, L).is_zero());
      }
    }
}

TEST_CASE("property: structured solve equals dense elimination") {
  auto rng = test::rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 3 + trial;
    const auto R = gen::random_homog(k, rng);
    const auto a = rotational_solve(k, R);
    const auto b = rotational_solve_dense(k, R);
    CHECK(a.V == b.V);
    CHECK(a.L == b.L);
    CHECK(a.tiebreak == b.tiebreak);
  }
}

TEST_CASE("property: gap law on homogeneous fields") {
  auto rng = test::rng(9);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 4; ++trial) {
      const auto s = compute_series(gen::random_homogeneous_field(n, rng), 2 * (n + 2));
      const auto rep = verify_gaps(s);
      CHECK_MESSAGE(rep.pass(), "n = " << n);
    }
}

TEST_CASE("property: homogeneity scaling") {
  auto rng = test::rng(10);
  for (int n = 2; n <= 4; ++n) {
    const auto vf = gen::random_homogeneous_field(n, rng);
    const int J = 6 * (n - 1) / 2;
    const auto base = compute_series(vf, J);
    for (const Rational& s : {Rational(2), Rational(-3), Rational(1, 5)}) {
      const auto scaled = compute_series(vf.map([&](const Rational& c) { return c * s; }), J);
      for (int j = 1; j <= J; ++j) {
        if ((2 * j) % (n - 1) != 0) {
          CHECK(scaled.lyapunov_constant(j).is_zero());
          continue;
        }
        const int m = 2 * j / (n - 1);
        CHECK(scaled.lyapunov_constant(j) == pow(s, m) * base.lyapunov_constant(j));
      }
    }
  }
}

TEST_CASE("property: reversible and divergence-free fields have vanishing constants") {
  auto rng = test::rng(11);
  for (int n = 2; n <= 5; ++n)
    for (bool homog : {true, false}) {
      for (const auto& vf : {gen::random_reversible(n, homog, rng), gen::random_divergence_free(n, homog, rng)}) {
        const auto s = compute_series(vf, 8);
        for (const auto& L : s.L) CHECK(L.is_zero());
      }
    }
}

TEST_CASE("property: rotational family has vanishing constants") {
  auto rng = test::rng(12);
  for (int n = 2; n <= 6; ++n) {
    const auto s = compute_series(gen::random_rotational(n, rng), 10);
    for (const auto& L : s.L) CHECK(L.is_zero());
  }
}

TEST_CASE("unknown-carrying mode") {
  auto rng = test::rng(13);
  SUBCASE("quadratic, level 2") {
    const auto vf = gen::random_homogeneous_field(2, rng);
    const auto s = compute_series_unknown(vf, {2}, 4);
    CHECK(s.unknowns.size() == 4);
    for (int j = 1; j <= 4; ++j) {
      const auto& L = s.lyapunov_constant(j);
      CHECK(L.constant().is_zero());
      CHECK(L.carries_unknowns());
      for (const auto& [id, c] : L.terms()) CHECK(id.value < 4);
    }
  }
  SUBCASE("odd cubic: first constant is free of the unknowns") {
    const auto vf = gen::random_homogeneous_field(3, rng);
    const auto s = compute_series_unknown(vf, {3}, 3);
    CHECK(s.unknowns.size() == 4);
    CHECK(!s.lyapunov_constant(1).carries_unknowns());
    CHECK(s.lyapunov_constant(1).constant() == compute_series(vf, 1).lyapunov_constant(1));
  }
  SUBCASE("registration order: degree ascending, then descending x-power") {
    const auto vf = gen::random_field(3, rng);
    const auto s = compute_series_unknown(vf, {2, 3}, 8);
    REQUIRE(s.unknowns.size() == 8);
    for (std::size_t i = 1; i < s.unknowns.size(); ++i) {
      const auto& a = s.unknowns[i - 1];
      const auto& b = s.unknowns[i];
      CHECK((a.degree < b.degree || (a.degree == b.degree && a.x_exp > b.x_exp)));
    }
    CHECK(s.unknowns[0].degree == 3);
    CHECK(s.unknowns[4].degree == 4);
  }
  CHECK_THROWS_AS(compute_series_unknown(gen::random_field(3, rng), {}, 2), UsageError);
  CHECK_THROWS_AS(compute_series_unknown(gen::random_field(3, rng), {4}, 2), UsageError);
  CHECK_THROWS_AS(compute_series_unknown(gen::random_field(3, rng), {1}, 2), UsageError);
}

TEST_CASE("property: unknown mode reproduces plain mode") {
  auto rng = test::rng(14);
  for (int n = 2; n <= 5; ++n)
    for (auto basis : {UnknownBasis::HomogeneousPart, UnknownBasis::FullCoefficient}) {
      for (bool homog : {true, false}) {
        if (!homog && n > 4) continue;
        const auto vf = homog ? gen::random_homogeneous_field(n, rng) : gen::random_field(n, rng);
        std::set<int> levels;
        for (int k = homog ? n : 2; k <= n; ++k) levels.insert(k);
        const int J = n + 2;
        const auto plain = compute_series(vf, J);
        const auto lf = compute_series_unknown(vf, levels, J, basis);
        for (int j = 1; j <= J; ++j)
          CHECK(lf.lyapunov_constant(j).evaluate(lf.unknown_values) == plain.lyapunov_constant(j));
        for (int k = 3; k <= 2 * J + 2; ++k) {
          const auto& Vk = lf.term(k);
          for (int a = 0; a <= k; ++a)
            CHECK(Vk[static_cast<std::size_t>(a)].evaluate(lf.unknown_values) == plain.term(k)[a]);
        }
      }
    }
}

TEST_CASE("engine runs over extended precision") {
  auto rng = test::rng(15);
  const auto vf = gen::random_field(3, rng);
  const auto exact = compute_series(vf, 4);
  const auto real = compute_series(to_bigreal(vf, 50), 4);
  for (int j = 1; j <= 4; ++j) {
    const BigReal e(exact.lyapunov_constant(j), 50);
    const BigReal d = abs(real.lyapunov_constant(j) - e);
    CHECK((d.is_zero() || log10_abs(d) < log10_abs(e) - 40));
  }
}
