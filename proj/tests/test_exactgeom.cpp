#include <doctest.h>

#include "latval/errors.hpp"
#include "latval/experiments.hpp"
#include "latval/linalg.hpp"
#include "latval/polytope.hpp"

using namespace latval;

TEST_CASE("rationals print as p/q and parse back") {
  CHECK(to_string(Rat(3)) == "3/1");
  Rat q(-4, 6);
  q.canonicalize();
  CHECK(to_string(q) == "-2/3");
  CHECK(parse_rat("10/4") == Rat(5, 2));
  CHECK(parse_rat(" 7 ") == 7);
  CHECK_THROWS_AS(parse_rat("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rat("abc"), InvalidArgument);
}

TEST_CASE("rref, rank and nullspace") {
  linalg::Rows m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(linalg::rank(m, 3) == 2);
  auto ns = linalg::nullspace(m, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& r : m) CHECK(dot(r, ns[0]) == 0);
  CHECK(linalg::determinant({{2, 1}, {1, 1}}) == 1);
  CHECK(linalg::determinant({{1, 2}, {2, 4}}) == 0);
  CHECK(linalg::gram_determinant({{1, 1, 0}}) == 2);
}

TEST_CASE("coordinates and projection") {
  linalg::Rows b{{1, 1, 0}, {0, 1, 1}};
  auto c = linalg::coordinates(b, {1, 2, 1});
  REQUIRE(c);
  CHECK((*c)[0] == 1);
  CHECK((*c)[1] == 1);
  CHECK_FALSE(linalg::coordinates(b, {1, 0, 0}));
  RatVec p = linalg::project(b, {1, 0, 0});
  RatVec r = sub(RatVec{1, 0, 0}, p);
  for (const auto& v : b) CHECK(dot(v, r) == 0);
}

TEST_CASE("saturated lattice basis has the right covolume") {
  // span{(2, 4)} meets Z^2 in Z·(1, 2).
  auto b = linalg::saturated_lattice_basis({{2, 4}}, 2);
  REQUIRE(b.size() == 1);
  CHECK(linalg::gram_determinant({to_rat(b[0])}) == 5);
  // The plane x + y + z = 0: covolume^2 = 3.
  auto p = linalg::saturated_lattice_basis({{1, -1, 0}, {0, 1, -1}}, 3);
  REQUIRE(p.size() == 2);
  CHECK(linalg::gram_determinant({to_rat(p[0]), to_rat(p[1])}) == 3);
  // Index-2 sublattice input still saturates.
  auto q = linalg::saturated_lattice_basis({{2, 0, 0}, {0, 2, 0}}, 3);
  CHECK(linalg::gram_determinant({to_rat(q[0]), to_rat(q[1])}) == 1);
}

TEST_CASE("cube and simplex face lattices") {
  for (int d = 1; d <= 4; ++d) {
    Polytope C = unit_cube(d);
    auto f = C.f_vector();
    REQUIRE(static_cast<int>(f.size()) == d + 1);
    for (int j = 0; j <= d; ++j) {
      // f_j(cube) = 2^{d-j} C(d, j)
      long expect = 1;
      for (int i = 0; i < d - j; ++i) expect *= 2;
      long b = 1;
      for (int i = 1; i <= j; ++i) b = b * (d - j + i) / i;
      CHECK(f[j] == expect * b);
    }
    CHECK(static_cast<int>(C.facets().size()) == 2 * d);
    Polytope S = standard_simplex(d);
    auto fs = S.f_vector();
    for (int j = 0; j <= d; ++j) {
      long b = 1;
      for (int i = 1; i <= j + 1; ++i) b = b * (d + 1 - (j + 1) + i) / i;
      CHECK(fs[j] == b);
    }
  }
}

TEST_CASE("lower-dimensional hulls and redundant points") {
  Polytope seg = Polytope::convex_hull({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
  CHECK(seg.dim() == 1);
  CHECK(seg.vertices().size() == 2);
  CHECK(seg.equations().size() == 2);
  Polytope tri = Polytope::convex_hull({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 1}});
  CHECK(tri.dim() == 2);
  CHECK(tri.f_vector() == std::vector<int>{3, 3, 1});
  Polytope pt = Polytope::convex_hull({{3, 4}});
  CHECK(pt.dim() == 0);
  CHECK(pt.faces().size() == 1);
}

TEST_CASE("errors on bad input") {
  CHECK_THROWS_AS(Polytope::convex_hull(std::vector<IntVec>{}), EmptyInput);
  CHECK_THROWS_AS(Polytope::convex_hull({IntVec(7, 0)}), AmbientDimTooLarge);
}

TEST_CASE("H-representation round trip") {
  Polytope R = reeve_tetrahedron(4);
  Polytope R2 = Polytope::from_inequalities(3, R.facets(), R.equations());
  CHECK(R == R2);
  // A half-open description with non-integral vertices is rejected.
  std::vector<Halfspace> h{{{2, 0}, 1}, {{-1, 0}, 0}, {{0, 1}, 1}, {{0, -1}, 0}};
  CHECK_THROWS(Polytope::from_inequalities(2, h));
}

TEST_CASE("membership, carriers and relative interiors") {
  Polytope C = unit_cube(3);
  CHECK(C.contains({Rat(1, 2), 0, 1}));
  CHECK_FALSE(C.contains({Rat(3, 2), 0, 0}));
  const int f = C.carrier_face({Rat(1, 2), 0, 1});
  REQUIRE(f >= 0);
  CHECK(C.face(f).dim == 1);
  for (std::size_t i = 0; i < C.faces().size(); ++i) {
    RatVec x = C.relint_point(static_cast<int>(i));
    CHECK(C.carrier_face(x) == static_cast<int>(i));
    CHECK(C.relint_contains(static_cast<int>(i), x));
  }
  CHECK(C.carrier_face({2, 0, 0}) == -1);
}

TEST_CASE("dilation and translation") {
  Polytope S = standard_simplex(2);
  Polytope S3 = S.dilate(3);
  CHECK(S3.vertices() == std::vector<IntVec>{{0, 0}, {0, 3}, {3, 0}});
  Polytope Z = S.dilate(0);
  CHECK(Z.dim() == 0);
  Polytope T = S.translate({5, -1});
  CHECK(T.vertices() == std::vector<IntVec>{{5, -1}, {5, 0}, {6, -1}});
  CHECK(T.f_vector() == S.f_vector());
}

TEST_CASE("subfaces and face polytopes") {
  Polytope C = unit_cube(3);
  const int whole = C.whole_face();
  CHECK(C.subfaces(whole).size() == C.faces().size());
  CHECK(C.facets_of_face(whole).size() == 6);
  for (int f : C.faces_of_dim(2)) {
    Polytope F = C.face_polytope(f);
    CHECK(F.dim() == 2);
    CHECK(F.f_vector() == std::vector<int>{4, 4, 1});
    CHECK(C.subfaces(f).size() == 9);
  }
}
