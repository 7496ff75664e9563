#include "latval/polytope.hpp"

#include "latval/errors.hpp"
#include "latval/linalg.hpp"

#include <algorithm>

namespace latval {

namespace {

RatVec homogenize(const IntVec& p) {
  RatVec v;
  v.reserve(p.size() + 1);
  v.emplace_back(1);
  for (auto x : p) v.emplace_back(static_cast<long>(x));
  return v;
}

std::int64_t dot_int(const IntVec& a, const IntVec& x) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * x[i];
  return static_cast<std::int64_t>(s);
}

Rat dot_mixed(const IntVec& a, const RatVec& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(static_cast<long>(a[i])) * x[i];
  return s;
}

}  // namespace

Polytope Polytope::convex_hull(std::span<const IntVec> points) {
  if (points.empty()) throw EmptyInput();
  const int d = static_cast<int>(points.front().size());
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != d) throw InvalidArgument("points have mixed dimensions");
  if (d > kMaxAmbientDim) throw AmbientDimTooLarge(d);
  if (d < 1) throw InvalidArgument("ambient dimension must be positive");
  return build(d, std::vector<IntVec>(points.begin(), points.end()));
}

Polytope Polytope::convex_hull(std::initializer_list<IntVec> points) {
  return convex_hull(std::span<const IntVec>(points.begin(), points.size()));
}

Polytope Polytope::build(int d, std::vector<IntVec> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope P;
  P.ambient_dim_ = d;
  const int n = d + 1;
  linalg::Rows gens;
  for (const auto& p : points) gens.push_back(homogenize(p));
  linalg::Rows span = linalg::span_basis(gens, n);
  P.dim_ = static_cast<int>(span.size()) - 1;

  for (const auto& e : linalg::nullspace(span, n)) {
    RatVec pe = primitive(e);
    Hyperplane h;
    for (int i = 1; i < n; ++i) h.normal.push_back(to_int64(pe[i].get_num()));
    h.offset = to_int64(-pe[0].get_num());
    P.equations_.push_back(std::move(h));
  }

  if (P.dim_ == 0) {
    P.vertices_ = {points.front()};
    Face f;
    f.vertices = {0};
    f.dim = 0;
    P.faces_.push_back(std::move(f));
    return P;
  }

  // Facets of the homogenized cone = extreme rays of its polar inside span.
  dd::ConeData polar = dd::generators(gens, span, n);
  linalg::Rows normals = polar.rays;
  for (const auto& y : normals) {
    Halfspace h;
    for (int i = 1; i < n; ++i) h.normal.push_back(to_int64(y[i].get_num()));
    h.offset = to_int64(-y[0].get_num());
    P.facets_.push_back(std::move(h));
  }

  // Extreme rays of the homogenized cone are the vertices.
  dd::ConeData cone = dd::generators(normals, span, n);
  for (const auto& r : cone.rays) {
    IntVec v(d);
    for (int i = 0; i < d; ++i) {
      Rat c = r[i + 1] / r[0];
      if (c.get_den() != 1) throw Error("hull produced a non-lattice vertex");
      v[i] = to_int64(c.get_num());
    }
    P.vertices_.push_back(std::move(v));
  }
  std::sort(P.vertices_.begin(), P.vertices_.end());
  std::sort(P.facets_.begin(), P.facets_.end(), [](const Halfspace& a, const Halfspace& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });

  const std::size_t nv = P.vertices_.size(), nf = P.facets_.size();
  std::vector<dd::Bits> facet_rays(nf, dd::Bits(nv));
  for (std::size_t j = 0; j < nf; ++j)
    for (std::size_t i = 0; i < nv; ++i)
      if (dot_int(P.facets_[j].normal, P.vertices_[i]) == P.facets_[j].offset) facet_rays[j].set(i);

  for (const auto& rec : dd::face_lattice(facet_rays, nv)) {
    if (rec.rays.none()) continue;  // empty face
    Face f;
    for (std::size_t i = 0; i < nv; ++i)
      if (rec.rays.test(i)) f.vertices.push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < nf; ++j)
      if (rec.facets.test(j)) f.tight_facets.push_back(static_cast<int>(j));
    P.faces_.push_back(std::move(f));
  }
  for (auto& f : P.faces_) {
    linalg::Rows diffs;
    const IntVec& v0 = P.vertices_[f.vertices.front()];
    for (int vi : f.vertices) {
      IntVec diff(d);
      for (int i = 0; i < d; ++i) diff[i] = P.vertices_[vi][i] - v0[i];
      diffs.push_back(to_rat(diff));
    }
    f.dim = linalg::rank(diffs, d);
    f.affine_basis = linalg::saturated_lattice_basis(diffs, d);
  }
  std::sort(P.faces_.begin(), P.faces_.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.vertices) < std::tie(b.dim, b.vertices);
  });
  return P;
}

Polytope Polytope::from_inequalities(int d, std::span<const Halfspace> ineq, std::span<const Hyperplane> eq) {
  if (d > kMaxAmbientDim) throw AmbientDimTooLarge(d);
  const int n = d + 1;
  linalg::Rows rows;
  RatVec t(n, Rat(0));
  t[0] = -1;
  rows.push_back(t);
  for (const auto& h : ineq) {
    RatVec r(n);
    r[0] = Rat(static_cast<long>(-h.offset));
    for (int i = 0; i < d; ++i) r[i + 1] = Rat(static_cast<long>(h.normal[i]));
    rows.push_back(std::move(r));
  }
  linalg::Rows eqs;
  for (const auto& h : eq) {
    RatVec r(n);
    r[0] = Rat(static_cast<long>(-h.offset));
    for (int i = 0; i < d; ++i) r[i + 1] = Rat(static_cast<long>(h.normal[i]));
    eqs.push_back(std::move(r));
  }
  linalg::Rows space = linalg::nullspace(eqs, n);
  dd::ConeData cone = dd::generators(rows, space, n);
  if (!cone.lineality.empty()) throw InvalidArgument("inequality system is unbounded");
  std::vector<IntVec> pts;
  for (const auto& r : cone.rays) {
    if (r[0] == 0) throw InvalidArgument("inequality system is unbounded");
    IntVec v(d);
    for (int i = 0; i < d; ++i) {
      Rat c = r[i + 1] / r[0];
      if (c.get_den() != 1) throw InvalidArgument("inequality system has a non-lattice vertex");
      v[i] = to_int64(c.get_num());
    }
    pts.push_back(std::move(v));
  }
  if (pts.empty()) throw InvalidArgument("inequality system is infeasible");
  return build(d, std::move(pts));
}

std::vector<int> Polytope::faces_of_dim(int j) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dim == j) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> Polytope::f_vector() const {
  std::vector<int> f(dim_ + 1, 0);
  for (const auto& face : faces_) ++f[face.dim];
  return f;
}

int Polytope::find_face(const std::vector<int>& vertex_indices) const {
  std::vector<int> key = vertex_indices;
  std::sort(key.begin(), key.end());
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].vertices == key) return static_cast<int>(i);
  return -1;
}

std::vector<int> Polytope::subfaces(int f) const {
  std::vector<int> out;
  const auto& big = faces_[f].vertices;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const auto& small = faces_[i].vertices;
    if (std::includes(big.begin(), big.end(), small.begin(), small.end())) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> Polytope::facets_of_face(int f) const {
  std::vector<int> out;
  for (int g : subfaces(f))
    if (faces_[g].dim == faces_[f].dim - 1) out.push_back(g);
  return out;
}

bool Polytope::contains(const RatVec& x) const {
  for (const auto& e : equations_)
    if (dot_mixed(e.normal, x) != Rat(static_cast<long>(e.offset))) return false;
  for (const auto& h : facets_)
    if (dot_mixed(h.normal, x) > Rat(static_cast<long>(h.offset))) return false;
  return true;
}

int Polytope::carrier_face(const RatVec& x) const {
  if (!contains(x)) return -1;
  std::vector<int> tight;
  for (std::size_t j = 0; j < facets_.size(); ++j)
    if (dot_mixed(facets_[j].normal, x) == Rat(static_cast<long>(facets_[j].offset)))
      tight.push_back(static_cast<int>(j));
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].tight_facets == tight) return static_cast<int>(i);
  return -1;
}

bool Polytope::relint_contains(int f, const RatVec& x) const { return carrier_face(x) == f; }

RatVec Polytope::relint_point(int f) const {
  RatVec c(ambient_dim_, Rat(0));
  const auto& vs = faces_[f].vertices;
  for (int vi : vs)
    for (int i = 0; i < ambient_dim_; ++i) c[i] += Rat(static_cast<long>(vertices_[vi][i]));
  for (auto& x : c) x /= static_cast<long>(vs.size());
  return c;
}

Polytope Polytope::dilate(std::int64_t n) const {
  if (n < 0) throw InvalidArgument("dilation factor must be non-negative");
  if (n == 0) return build(ambient_dim_, {IntVec(ambient_dim_, 0)});
  Polytope Q = *this;
  for (auto& v : Q.vertices_)
    for (auto& x : v) x *= n;
  for (auto& h : Q.facets_) h.offset *= n;
  for (auto& e : Q.equations_) e.offset *= n;
  return Q;
}

Polytope Polytope::translate(const IntVec& t) const {
  Polytope Q = *this;
  for (auto& v : Q.vertices_)
    for (int i = 0; i < ambient_dim_; ++i) v[i] += t[i];
  for (auto& h : Q.facets_) h.offset += dot_int(h.normal, t);
  for (auto& e : Q.equations_) e.offset += dot_int(e.normal, t);
  return Q;
}

Polytope Polytope::face_polytope(int f) const {
  std::vector<IntVec> pts;
  for (int vi : faces_[f].vertices) pts.push_back(vertices_[vi]);
  return build(ambient_dim_, std::move(pts));
}

bool Polytope::operator==(const Polytope& other) const {
  return ambient_dim_ == other.ambient_dim_ && vertices_ == other.vertices_;
}

}  // namespace latval
