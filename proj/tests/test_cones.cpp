#include <doctest.h>

#include "latval/cone.hpp"
#include "latval/errors.hpp"
#include "latval/experiments.hpp"

#include <random>

using namespace latval;

TEST_CASE("orthant structure") {
  for (int d = 1; d <= 4; ++d) {
    std::vector<IntVec> g;
    for (int i = 0; i < d; ++i) {
      IntVec e(d, 0);
      e[i] = 1;
      g.push_back(e);
    }
    Cone C = Cone::from_generators(g, d);
    CHECK(C.dim() == d);
    CHECK(C.is_pointed());
    CHECK(C.rays().size() == static_cast<std::size_t>(d));
    CHECK(C.facet_normals().size() == static_cast<std::size_t>(d));
    auto f = C.f_vector();
    for (int j = 0; j <= d; ++j) {
      long b = 1;
      for (int i = 1; i <= j; ++i) b = b * (d - j + i) / i;
      CHECK(f[j] == b);
    }
    CHECK(euler_check(C) == 0);
  }
}

TEST_CASE("lineality and subspaces") {
  Cone H = Cone::from_generators(std::vector<IntVec>{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}}, 3);
  CHECK(H.lineality_dim() == 1);
  CHECK(H.pointed_dim() == 1);
  CHECK(H.dim() == 2);
  CHECK_FALSE(H.is_pointed());
  Cone L = Cone::subspace({{1, 1, 0}}, 3);
  CHECK(L.is_linear_subspace());
  CHECK(L.faces().size() == 1);
  CHECK(euler_check(L) == -1);
  CHECK(Cone::zero(3).is_zero());
  CHECK(Cone::whole(3).is_linear_subspace());
  CHECK(Cone::whole(3).full_dimensional());
}

TEST_CASE("polar duality") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const int d = 2 + t % 3;
    Cone C = random_cone(d, rng);
    Cone P = C.polar();
    CHECK(P.polar() == C);
    CHECK(P.dim() == d - C.lineality_dim());
    CHECK(P.lineality_dim() == d - C.dim());
    for (const auto& g : C.generators())
      for (const auto& h : P.generators()) CHECK(dot(g, h) <= 0);
  }
  CHECK(Cone::zero(2).polar() == Cone::whole(2));
}

TEST_CASE("containment") {
  Cone Q = Cone::from_generators(std::vector<IntVec>{{1, 0}, {1, 1}}, 2);
  CHECK(Q.contains(RatVec{2, 1}));
  CHECK_FALSE(Q.contains(RatVec{0, 1}));
  Cone Q2 = Cone::from_generators(std::vector<IntVec>{{1, 0}, {0, 1}}, 2);
  CHECK(Q2.contains(Q));
  CHECK_FALSE(Q.contains(Q2));
  CHECK(Q.carrier_face({3, 0}) >= 0);
  CHECK(Q.carrier_face({-1, 0}) == -1);
}

TEST_CASE("exact Moreau decomposition") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int t = 0; t < 40; ++t) {
    const int d = 2 + t % 3;
    Cone C = random_cone(d, rng);
    Cone P = C.polar();
    RatVec x(d);
    for (auto& v : x) v = c(rng);
    try {
      auto m = moreau_project(C, x);
      CHECK(add(m.p, m.q) == x);
      CHECK(dot(m.p, m.q) == 0);
      CHECK(C.contains(m.p));
      CHECK(P.contains(m.q));
      CHECK(C.carrier_face(m.p) == m.face);
    } catch (const DegenerateProjection&) {
      // integer points often sit on a boundary between regions
    }
  }
}

TEST_CASE("Moreau degeneracy is reported") {
  Cone Q = Cone::from_generators(std::vector<IntVec>{{1, 0}, {0, 1}}, 2);
  // (-1, 0) projects onto the apex with q on the boundary of the polar.
  CHECK_THROWS_AS(moreau_project(Q, {-1, 0}), DegenerateProjection);
  auto m = moreau_project(Q, {-1, -1});
  CHECK(is_zero(m.p));
}

TEST_CASE("tangent and normal cones of a square") {
  Polytope S = unit_cube(2);
  for (int v : S.faces_of_dim(0)) {
    Cone T = tangent_cone(S, v);
    CHECK(T.is_pointed());
    CHECK(T.dim() == 2);
    CHECK(T.rays().size() == 2);
    Cone N = normal_cone(S, v);
    CHECK(N == T.polar());
  }
  for (int e : S.faces_of_dim(1)) {
    Cone T = tangent_cone(S, e);
    CHECK(T.lineality_dim() == 1);
    CHECK(normal_cone(S, e).dim() == 1);
  }
  Cone T = tangent_cone(S, S.whole_face());
  CHECK(T == Cone::whole(2));
}

TEST_CASE("tangent cone inside a face") {
  Polytope C = unit_cube(3);
  for (int f : C.faces_of_dim(2)) {
    for (int g : C.subfaces(f)) {
      Cone T = tangent_cone_in_face(C, f, g);
      CHECK(T.dim() == 2);
      CHECK(T.lineality_dim() == C.face(g).dim);
    }
  }
}

TEST_CASE("lower-dimensional polytopes give lower-dimensional tangent cones") {
  Polytope seg = Polytope::convex_hull({{0, 0, 0}, {1, 2, 3}});
  Cone T = tangent_cone(seg, seg.faces_of_dim(0)[0]);
  CHECK(T.dim() == 1);
  CHECK(normal_cone(seg, seg.faces_of_dim(0)[0]).dim() == 3);
}
