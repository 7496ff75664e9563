#include <doctest.h>

#include "latval/errors.hpp"
#include "latval/experiments.hpp"
#include "latval/valuations.hpp"
#include "oracles.hpp"

#include <random>

using namespace latval;

namespace {

ValuationOptions opts(std::uint64_t seed, std::int64_t n = 20000) {
  ValuationOptions o;
  o.mc.samples = n;
  o.mc.seed = seed;
  return o;
}

}  // namespace

TEST_CASE("family names") {
  for (auto f : {Family::L, Family::A, Family::Ak, Family::Gk, Family::Vk}) CHECK(parse_family(to_string(f)) == f);
  CHECK_THROWS_AS(parse_family("Q"), InvalidArgument);
  CHECK(family_has_k(Family::Gk));
  CHECK_FALSE(family_has_k(Family::A));
}

TEST_CASE("L of the unit cube") {
  Polytope C = unit_cube(3);
  auto p = valuation_polynomial(Family::L, C, -1);
  CHECK(p.exact_coeffs == std::vector<Rat>{1, 3, 3, 1});
  auto v = eval_L(C, 2);
  CHECK(v.rational == Rat(27));
}

TEST_CASE("L of a lower-dimensional polytope is scaled by det") {
  Polytope seg = Polytope::convex_hull({{0, 0}, {2, 1}});
  auto v = eval_L(seg, 3);
  CHECK(v.value == doctest::Approx(4 * std::sqrt(5.0)));
  CHECK(evaluate(Family::L, seg, -1, 3).value == 4);  // raw count
}

TEST_CASE("n = 0 conventions") {
  Polytope R = reeve_tetrahedron(2);
  CHECK(evaluate(Family::L, R, -1, 0).value == 1);
  CHECK(evaluate(Family::A, R, -1, 0, opts(1)).value == 0);
  CHECK(evaluate(Family::Ak, R, 0, 0, opts(1)).value == 1);
  CHECK(evaluate(Family::Ak, R, 2, 0, opts(1)).value == 0);
  CHECK(evaluate(Family::Gk, R, 1, 0, opts(1)).value == 0);
}

TEST_CASE("solid-angle valuation of the square is n^2") {
  Polytope S = unit_cube(2);
  for (int n = 1; n <= 5; ++n) {
    auto a = eval_A(S, n, opts(n));
    CHECK(a.exact);
    CHECK(a.value == doctest::Approx(n * n).epsilon(1e-12));
  }
}

TEST_CASE("A_0 is the constant 1 and A_d is A") {
  Polytope R = reeve_tetrahedron(3);
  for (int n = 1; n <= 3; ++n) {
    CHECK(eval_Ak(R, 0, n, opts(1)).value == doctest::Approx(1.0));
    CHECK(eval_Ak(R, 3, n, opts(1)).value == doctest::Approx(eval_A(R, n, opts(1)).value).epsilon(1e-10));
  }
}

TEST_CASE("G_0 = L - 1 and G_d = 0 on random polygons") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 6; ++t) {
    Polytope P = random_polytope(2, 5, 4, rng);
    for (int n = 1; n <= 3; ++n) {
      auto g0 = eval_Gk(P, 0, n, opts(t));
      CHECK(g0.value == doctest::Approx(count_points(P, n) - 1.0).epsilon(1e-12));
      CHECK(eval_Gk(P, 2, n, opts(t)).value == doctest::Approx(0.0));
      CHECK(eval_Gk(P, 1, n, opts(t)).value == doctest::Approx(eval_A(P, n, opts(t)).value).epsilon(1e-10));
    }
  }
}

TEST_CASE("V_k of cubes are binomial") {
  for (int d = 1; d <= 3; ++d) {
    Polytope C = unit_cube(d);
    for (int k = 0; k <= d; ++k) CHECK(eval_Vk(C, k, opts(1)).value == doctest::Approx(oracle::binom(d, k)));
  }
}

TEST_CASE("relative interiors") {
  Polytope tri = standard_simplex(2);
  auto g = relint_valuation(Family::Gk, tri, 0, opts(1));
  CHECK(g.value == doctest::Approx(-1.0).epsilon(1e-12));
  for (int n = 1; n <= 3; ++n) {
    Polytope R = reeve_tetrahedron(4).dilate(n);
    CHECK(relint_valuation(Family::L, R, -1).value == interior_count(R, 1));
  }
  Polytope seg = Polytope::convex_hull({{0}, {1}});
  CHECK(relint_valuation(Family::Ak, seg, 1, opts(2)).value == doctest::Approx(1.0));
  CHECK(relint_valuation(Family::Ak, seg, 0, opts(2)).value == doctest::Approx(-1.0));
}

TEST_CASE("inclusion-exclusion on hyperplane splits") {
  Polytope sq = unit_cube(2).dilate(3);
  AxiomCheck l = check_valuation_axiom(Family::L, -1, sq, {1, 1}, 3, opts(1));
  CHECK(l.exact);
  CHECK(l.residual == 0);
  for (auto [f, k] : {std::pair{Family::A, -1}, std::pair{Family::Gk, 1}, std::pair{Family::Ak, 1}}) {
    AxiomCheck c = check_valuation_axiom(f, k, sq, {1, -1}, 1, opts(3));
    CHECK(c.passed());
  }
  CHECK_THROWS_AS(check_valuation_axiom(Family::L, -1, sq, {1, 0}, 7, opts(1)), InvalidArgument);
}

TEST_CASE("valuation polynomials reproduce direct evaluation") {
  Polytope P = Polytope::convex_hull({{0, 0}, {2, 0}, {0, 1}, {1, 2}});
  for (auto [f, k] : {std::pair{Family::A, -1}, std::pair{Family::Gk, 0}, std::pair{Family::Ak, 1}}) {
    auto p = valuation_polynomial(f, P, k, opts(4));
    for (int n = 0; n <= 4; ++n) {
      auto v = evaluate(f, P, k, n, opts(4));
      CHECK(p(n) == doctest::Approx(v.value).epsilon(1e-9));
    }
  }
}

TEST_CASE("relative-interior Ehrhart polynomials") {
  Polytope C = unit_cube(2);
  auto polys = relint_ehrhart(C);
  REQUIRE(polys.size() == C.faces().size());
  for (std::size_t f = 0; f < polys.size(); ++f) {
    const int dim = C.face(static_cast<int>(f)).dim;
    // relint of an edge of nC has n - 1 points; of the square, (n-1)^2
    for (int n = 1; n <= 4; ++n) {
      const double e = dim == 0 ? 1.0 : dim == 1 ? n - 1.0 : (n - 1.0) * (n - 1.0);
      CHECK(polys[f](n) == doctest::Approx(e));
    }
  }
}
