#include <doctest.h>

#include "latval/errors.hpp"
#include "latval/experiments.hpp"

using namespace latval;

namespace {

ExperimentOptions opts(std::uint64_t seed, std::int64_t n = 20000) {
  ExperimentOptions o;
  o.mc.samples = n;
  o.mc.seed = seed;
  return o;
}

}  // namespace

TEST_CASE("Reeve vertex angle sum") {
  // grows with h, stays below 1/2
  double prev = 0;
  for (int h : {1, 2, 3, 6, 20}) {
    const double S = reeve_vertex_angle_sum(h);
    CHECK(S > 0);
    CHECK(S < 0.5);
    CHECK(S > prev);
    prev = S;
  }
}

TEST_CASE("Reeve report at a small sample budget") {
  auto r = run_reeve(1, opts(5));
  for (const auto& c : r.claims) {
    INFO(c.description);
    CHECK(c.pass);
  }
  CHECK(r.inputs.at("seed") == "5");
}

TEST_CASE("Reeve report is reproducible") {
  auto a = run_reeve(2, opts(9, 5000));
  auto b = run_reeve(2, opts(9, 5000));
  REQUIRE(a.claims.size() == b.claims.size());
  for (std::size_t i = 0; i < a.claims.size(); ++i) CHECK(a.claims[i].observed == b.claims[i].observed);
}

TEST_CASE("negativity witness in the plane") {
  auto r = run_negativity_witness(2, 0, opts(1));
  CHECK(r.passed());
  CHECK(r.inputs.count("witness"));
  CHECK_THROWS_AS(run_negativity_witness(2, 1, opts(1)), InvalidArgument);
}

TEST_CASE("Gaussian image of subspaces") {
  // R^1 in R^3 with k = 2: image is a line in R^2, so upsilon_2 = 0 = alpha_1.
  Cone L1 = Cone::subspace({{1, 0, 0}}, 3);
  auto a = run_gauss_image(L1, 2, 50, opts(3));
  CHECK(a.passed());
  CHECK(a.claims[0].observed == 0.0);
  CHECK(a.claims[0].expected == 0.0);
  // R^2 with k = 2: the image is all of R^2.
  Cone L2 = Cone::subspace({{1, 0, 0}, {0, 1, 0}}, 3);
  auto b = run_gauss_image(L2, 2, 50, opts(4));
  CHECK(b.passed());
  CHECK(b.claims[0].observed == 1.0);
  CHECK(b.claims[0].expected == 1.0);
  CHECK_THROWS_AS(run_gauss_image(L2, 0, 50, opts(4)), InvalidArgument);
}

TEST_CASE("Gaussian image of the quadrant") {
  Cone Q = Cone::from_generators(std::vector<IntVec>{{1, 0}, {0, 1}}, 2);
  auto r = run_gauss_image(Q, 1, 2000, opts(6));
  CHECK(r.passed());
  CHECK(r.claims[0].expected == doctest::Approx(0.75));
}

TEST_CASE("conjecture scan on small simplices") {
  auto r = run_conjecture_scan(2, 4, opts(2));
  CHECK(r.passed());
  // odd dim + k gives a sign flip, so every such simplex is flagged
  CHECK(std::stoi(r.inputs.at("counterexample_candidates")) > 0);
  CHECK(r.notes.size() == static_cast<std::size_t>(std::stoi(r.inputs.at("counterexample_candidates"))));
}

TEST_CASE("random fixtures are well formed") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const int d = 1 + t % 4;
    Cone C = random_cone(d, rng);
    CHECK(C.ambient_dim() == d);
    Polytope P = random_polytope(d, d + 2, 3, rng);
    CHECK(P.full_dimensional());
  }
}
