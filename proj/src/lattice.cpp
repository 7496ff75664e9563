#include "latval/lattice.hpp"

#include "latval/errors.hpp"
#include "latval/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace latval {

namespace {

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Walks the integer points of nP in a lattice basis of aff(nP) and hands each
// one, with its carrier face, to `visit`.
template <class Visit>
void walk(const Polytope& P, std::int64_t n, Visit&& visit) {
  const int d = P.ambient_dim();
  const int k = P.dim();
  std::vector<IntVec> basis;
  if (k == d) {
    for (int i = 0; i < d; ++i) {
      IntVec e(d, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    basis = P.face(P.whole_face()).affine_basis;
  }
  IntVec origin = P.vertices().front();
  for (auto& x : origin) x *= n;

  linalg::Rows rb;
  for (const auto& b : basis) rb.push_back(to_rat(b));
  std::vector<std::int64_t> lo(k), hi(k);
  for (int j = 0; j < k; ++j) {
    lo[j] = INT64_MAX;
    hi[j] = INT64_MIN;
  }
  for (const auto& v : P.vertices()) {
    RatVec diff(d);
    for (int i = 0; i < d; ++i) diff[i] = Rat(static_cast<long>(v[i] - P.vertices().front()[i]));
    auto c = linalg::coordinates(rb, diff);
    if (!c) throw Error("vertex outside its own affine hull");
    for (int j = 0; j < k; ++j) {
      Rat s = (*c)[j] * Rat(static_cast<long>(n));
      lo[j] = std::min(lo[j], to_int64(floor_rat(s)));
      hi[j] = std::max(hi[j], to_int64(ceil_rat(s)));
    }
  }

  std::map<std::vector<int>, int> face_by_tight;
  for (std::size_t i = 0; i < P.faces().size(); ++i) face_by_tight.emplace(P.faces()[i].tight_facets, static_cast<int>(i));

  const auto& facets = P.facets();
  std::vector<std::int64_t> c(lo);
  IntVec x(d);
  std::vector<int> tight;
  if (k == 0) {
    visit(origin, P.whole_face());
    return;
  }
  while (true) {
    for (int i = 0; i < d; ++i) {
      __int128 s = origin[i];
      for (int j = 0; j < k; ++j) s += static_cast<__int128>(c[j]) * basis[j][i];
      x[i] = static_cast<std::int64_t>(s);
    }
    bool inside = true;
    tight.clear();
    for (std::size_t f = 0; f < facets.size() && inside; ++f) {
      __int128 s = 0;
      for (int i = 0; i < d; ++i) s += static_cast<__int128>(facets[f].normal[i]) * x[i];
      __int128 b = static_cast<__int128>(facets[f].offset) * n;
      if (s > b)
        inside = false;
      else if (s == b)
        tight.push_back(static_cast<int>(f));
    }
    if (inside) {
      auto it = face_by_tight.find(tight);
      if (it == face_by_tight.end()) throw Error("lattice point with no carrier face");
      visit(x, it->second);
    }
    int j = 0;
    while (j < k && c[j] == hi[j]) {
      c[j] = lo[j];
      ++j;
    }
    if (j == k) break;
    ++c[j];
  }
}

}  // namespace

LatticePointSet enumerate_points(const Polytope& P, std::int64_t n) {
  if (n < 0) throw InvalidArgument("dilation factor must be non-negative");
  LatticePointSet out;
  out.by_face.assign(P.faces().size(), 0);
  if (n == 0) {
    out.points.push_back(IntVec(P.ambient_dim(), 0));
    out.face_of.push_back(-1);
    return out;
  }
  std::vector<std::pair<IntVec, int>> tagged;
  walk(P, n, [&](const IntVec& x, int f) {
    tagged.emplace_back(x, f);
    ++out.by_face[f];
  });
  std::sort(tagged.begin(), tagged.end());
  for (auto& [x, f] : tagged) {
    out.points.push_back(std::move(x));
    out.face_of.push_back(f);
  }
  return out;
}

std::vector<std::int64_t> relint_counts(const Polytope& P, std::int64_t n) {
  if (n < 0) throw InvalidArgument("dilation factor must be non-negative");
  std::vector<std::int64_t> by_face(P.faces().size(), 0);
  if (n == 0) return by_face;
  walk(P, n, [&](const IntVec&, int f) { ++by_face[f]; });
  return by_face;
}

std::int64_t count_points(const Polytope& P, std::int64_t n) {
  if (n == 0) return 1;
  std::int64_t total = 0;
  for (auto c : relint_counts(P, n)) total += c;
  return total;
}

std::int64_t interior_count(const Polytope& P, std::int64_t n) {
  if (n == 0) return P.dim() == 0 ? 1 : 0;
  return relint_counts(P, n)[P.whole_face()];
}

double LatticeDet::value() const { return std::sqrt(gram.get_d()); }

bool LatticeDet::is_integer() const { return mpz_perfect_square_p(gram.get_mpz_t()) != 0; }

LatticeDet lattice_determinant(const Polytope& P, int face) {
  if (face < 0 || face >= static_cast<int>(P.faces().size())) throw EmptyFace();
  linalg::Rows basis;
  for (const auto& b : P.face(face).affine_basis) basis.push_back(to_rat(b));
  Rat g = linalg::gram_determinant(basis);
  return LatticeDet{g.get_num()};
}

namespace {

// Pulling triangulation of face f: simplices as vertex index lists.
void triangulate(const Polytope& P, int f, std::vector<std::vector<int>>& out) {
  const Face& F = P.face(f);
  if (F.dim == 0) {
    out.push_back({F.vertices.front()});
    return;
  }
  const int apex = F.vertices.front();
  for (int g : P.facets_of_face(f)) {
    const auto& gv = P.face(g).vertices;
    if (std::binary_search(gv.begin(), gv.end(), apex)) continue;
    std::vector<std::vector<int>> sub;
    triangulate(P, g, sub);
    for (auto& s : sub) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

Rat relative_volume(const Polytope& P, int face) {
  const Face& F = P.face(face);
  if (F.dim == 0) return 1;
  linalg::Rows basis;
  for (const auto& b : F.affine_basis) basis.push_back(to_rat(b));
  std::vector<std::vector<int>> simplices;
  triangulate(P, face, simplices);
  Rat total = 0;
  Int fact = 1;
  for (int i = 2; i <= F.dim; ++i) fact *= i;
  const auto& V = P.vertices();
  for (const auto& s : simplices) {
    linalg::Rows m;
    for (std::size_t i = 1; i < s.size(); ++i) {
      RatVec diff(P.ambient_dim());
      for (int j = 0; j < P.ambient_dim(); ++j) diff[j] = Rat(static_cast<long>(V[s[i]][j] - V[s[0]][j]));
      auto c = linalg::coordinates(basis, diff);
      if (!c) throw Error("simplex vertex outside face hull");
      m.push_back(std::move(*c));
    }
    Rat det = linalg::determinant(std::move(m));
    total += abs(det);
  }
  return total / Rat(fact);
}

double face_volume(const Polytope& P, int face) {
  return to_double(relative_volume(P, face)) * lattice_determinant(P, face).value();
}

}  // namespace latval
