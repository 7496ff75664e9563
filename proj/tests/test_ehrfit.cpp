#include <doctest.h>

#include "latval/ehrfit.hpp"
#include "latval/errors.hpp"

#include <random>

using namespace latval;

TEST_CASE("exact interpolation recovers a cubic") {
  // p(t) = 1/6 t^3 - t + 2
  auto p = [](std::int64_t t) -> Rat { return Rat(static_cast<long>(t * t * t)) / 6 - t + 2; };
  std::vector<std::pair<std::int64_t, Rat>> v;
  for (int t = 0; t <= 5; ++t) v.push_back({t, p(t)});
  auto f = fit_exact(v, 3);
  REQUIRE(f.exact);
  CHECK(f.exact_coeffs == std::vector<Rat>{2, -1, 0, Rat(1, 6)});
  CHECK(f.eval_exact(-2) == p(-2));
  CHECK(f(4.0) == doctest::Approx(p(4).get_d()));
}

TEST_CASE("inconsistent extra nodes are rejected") {
  std::vector<std::pair<std::int64_t, Rat>> v{{0, 1}, {1, 2}, {2, 5}, {3, 11}};
  CHECK_THROWS_AS(fit_exact(v, 1), InconsistentValues);
  CHECK_THROWS_AS(fit_exact({{0, 1}, {0, 2}}, 1), InvalidArgument);
  CHECK_THROWS_AS(fit_exact({{0, 1}}, 2), InvalidArgument);
}

TEST_CASE("weighted least squares") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> noise(0.0, 0.01);
  std::vector<NodeValue> v;
  for (int t = 0; t <= 8; ++t) v.push_back({t, 0.5 * t * t - 0.25 * t + 1 + noise(rng), 0.01});
  auto f = fit_statistical(v, 2);
  CHECK(std::abs(f.coeffs[2] - 0.5) <= 4 * f.se[2]);
  CHECK(std::abs(f.coeffs[1] + 0.25) <= 4 * f.se[1]);
  CHECK(std::abs(f.coeffs[0] - 1) <= 4 * f.se[0]);
  CHECK(f.se_at(3.0) > 0);
  std::vector<NodeValue> bad{{1, 1, 0.1}, {1, 1, 0.1}, {1, 1, 0.1}};
  CHECK_THROWS_AS(fit_statistical(bad, 2), IllConditioned);
}

TEST_CASE("h* of the standard simplex and the unit cube") {
  // L(Δ_d, t) = C(t + d, d): h* = (1, 0, ..., 0)
  for (int d = 1; d <= 5; ++d) {
    std::vector<Rat> vals;
    for (int t = 0; t <= d; ++t) {
      Int b = 1;
      for (int i = 1; i <= d; ++i) b = b * (t + i) / i;
      vals.push_back(Rat(b));
    }
    auto h = hstar_from_values(vals);
    CHECK(h[0] == 1);
    for (int i = 1; i <= d; ++i) CHECK(h[i] == 0);
  }
  // cube: Eulerian numbers
  std::vector<Rat> c3;
  for (int t = 0; t <= 3; ++t) c3.push_back((t + 1) * (t + 1) * (t + 1));
  CHECK(hstar_from_values(c3) == std::vector<Rat>{1, 4, 1, 0});
}

TEST_CASE("h* and monomial forms round trip") {
  std::vector<Rat> h{1, 3, Rat(-1, 2), 2};
  auto p = from_hstar(h);
  auto back = to_hstar(p);
  CHECK(back.exact_values == h);
  std::vector<Rat> vals;
  for (int t = 0; t <= 3; ++t) vals.push_back(p.eval_exact(t));
  CHECK(hstar_from_values(vals) == h);
}

TEST_CASE("h* of an estimated polynomial carries errors") {
  auto p = FittedPolynomial::from_estimate({1.0, 2.0, 1.0}, {{0.01, 0, 0}, {0, 0.04, 0}, {0, 0, 0.09}});
  auto h = to_hstar(p);
  CHECK_FALSE(h.exact);
  REQUIRE(h.values.size() == 3);
  CHECK(h.values[0] == doctest::Approx(1.0));
  for (double s : h.se) CHECK(s > 0);
}
