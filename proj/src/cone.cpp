#include "latval/cone.hpp"

#include "latval/errors.hpp"

#include <algorithm>

namespace latval {

namespace {

linalg::Rows nonzero(const linalg::Rows& gens) {
  linalg::Rows out;
  for (const auto& g : gens)
    if (!is_zero(g)) out.push_back(g);
  return out;
}

}  // namespace

Cone Cone::from_generators(const linalg::Rows& generators, int ambient_dim) {
  Cone C;
  C.d_ = ambient_dim;
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != ambient_dim) throw InvalidArgument("generator has wrong dimension");
  linalg::Rows gens = nonzero(generators);
  C.span_ = linalg::span_basis(gens, ambient_dim);
  if (!C.span_.empty()) {
    dd::ConeData polar = dd::generators(gens, C.span_, ambient_dim);
    C.facets_ = polar.rays;
    std::sort(C.facets_.begin(), C.facets_.end());
    dd::ConeData cone = dd::generators(C.facets_, C.span_, ambient_dim);
    for (const auto& l : linalg::span_basis(cone.lineality, ambient_dim)) C.lineality_.push_back(primitive(l));
    C.rays_ = cone.rays;
    std::sort(C.rays_.begin(), C.rays_.end());
  }
  C.build_faces();
  return C;
}

Cone Cone::from_generators(const std::vector<IntVec>& generators, int ambient_dim) {
  linalg::Rows g;
  for (const auto& v : generators) g.push_back(to_rat(v));
  return from_generators(g, ambient_dim);
}

Cone Cone::from_inequalities(const linalg::Rows& normals, int ambient_dim, const linalg::Rows& equations) {
  linalg::Rows space = linalg::nullspace(equations, ambient_dim);
  dd::ConeData data = dd::generators(normals, space, ambient_dim);
  linalg::Rows gens = data.rays;
  for (const auto& l : data.lineality) {
    gens.push_back(l);
    gens.push_back(scale(l, Rat(-1)));
  }
  return from_generators(gens, ambient_dim);
}

Cone Cone::subspace(const linalg::Rows& basis, int ambient_dim) {
  linalg::Rows gens;
  for (const auto& b : basis) {
    gens.push_back(b);
    gens.push_back(scale(b, Rat(-1)));
  }
  return from_generators(gens, ambient_dim);
}

Cone Cone::zero(int ambient_dim) { return from_generators(linalg::Rows{}, ambient_dim); }

Cone Cone::whole(int ambient_dim) {
  linalg::Rows basis;
  for (int i = 0; i < ambient_dim; ++i) {
    RatVec e(ambient_dim, Rat(0));
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  return subspace(basis, ambient_dim);
}

void Cone::build_faces() {
  faces_.clear();
  const std::size_t nr = rays_.size(), nf = facets_.size();
  std::vector<dd::Bits> facet_rays(nf, dd::Bits(nr));
  for (std::size_t j = 0; j < nf; ++j)
    for (std::size_t i = 0; i < nr; ++i)
      if (dot(facets_[j], rays_[i]) == 0) facet_rays[j].set(i);
  for (const auto& rec : dd::face_lattice(facet_rays, nr)) {
    ConeFace f;
    linalg::Rows gens = lineality_;
    for (std::size_t i = 0; i < nr; ++i)
      if (rec.rays.test(i)) {
        f.rays.push_back(static_cast<int>(i));
        gens.push_back(rays_[i]);
      }
    for (std::size_t j = 0; j < nf; ++j)
      if (rec.facets.test(j)) f.facets.push_back(static_cast<int>(j));
    f.dim = linalg::rank(gens, d_);
    faces_.push_back(std::move(f));
  }
  std::sort(faces_.begin(), faces_.end(),
            [](const ConeFace& a, const ConeFace& b) { return std::tie(a.dim, a.rays) < std::tie(b.dim, b.rays); });
}

linalg::Rows Cone::generators() const {
  linalg::Rows g = rays_;
  for (const auto& l : lineality_) {
    g.push_back(l);
    g.push_back(scale(l, Rat(-1)));
  }
  return g;
}

std::vector<int> Cone::f_vector() const {
  std::vector<int> f(dim() + 1, 0);
  for (const auto& face : faces_) ++f[face.dim];
  return f;
}

bool Cone::contains(const RatVec& x) const {
  if (!linalg::in_span(span_, x, d_)) return false;
  for (const auto& y : facets_)
    if (dot(y, x) > 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.d_ != d_) return false;
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

int Cone::carrier_face(const RatVec& x) const {
  if (!contains(x)) return -1;
  std::vector<int> tight;
  for (std::size_t j = 0; j < facets_.size(); ++j)
    if (dot(facets_[j], x) == 0) tight.push_back(static_cast<int>(j));
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].facets == tight) return static_cast<int>(i);
  return -1;
}

linalg::Rows Cone::face_span(int f) const {
  linalg::Rows gens = lineality_;
  for (int r : faces_[f].rays) gens.push_back(rays_[r]);
  return linalg::span_basis(gens, d_);
}

Cone Cone::face_cone(int f) const {
  linalg::Rows gens;
  for (int r : faces_[f].rays) gens.push_back(rays_[r]);
  for (const auto& l : lineality_) {
    gens.push_back(l);
    gens.push_back(scale(l, Rat(-1)));
  }
  return from_generators(gens, d_);
}

Cone Cone::normal_cone_of_face(int f) const {
  linalg::Rows gens;
  for (int j : faces_[f].facets) gens.push_back(facets_[j]);
  for (const auto& e : linalg::nullspace(span_, d_)) {
    gens.push_back(e);
    gens.push_back(scale(e, Rat(-1)));
  }
  return from_generators(gens, d_);
}

Cone Cone::polar() const {
  linalg::Rows gens = facets_;
  for (const auto& e : linalg::nullspace(span_, d_)) {
    gens.push_back(e);
    gens.push_back(scale(e, Rat(-1)));
  }
  return from_generators(gens, d_);
}

Cone Cone::embed(int ambient_dim) const {
  if (ambient_dim < d_) throw InvalidArgument("cannot embed into a smaller space");
  linalg::Rows gens = generators();
  for (auto& g : gens) g.resize(ambient_dim, Rat(0));
  return from_generators(gens, ambient_dim);
}

bool Cone::operator==(const Cone& other) const { return contains(other) && other.contains(*this); }

int euler_check(const Cone& C) {
  int s = 0;
  for (const auto& f : C.faces()) s += (f.dim % 2 == 0) ? 1 : -1;
  return s;
}

MoreauDecomposition moreau_project(const Cone& C, const RatVec& x) {
  if (static_cast<int>(x.size()) != C.ambient_dim()) throw InvalidArgument("point has wrong dimension");
  const auto& rays = C.rays();
  const auto& facets = C.facet_normals();
  for (std::size_t f = 0; f < C.faces().size(); ++f) {
    const ConeFace& F = C.faces()[f];
    RatVec p = linalg::project(C.face_span(static_cast<int>(f)), x);
    bool ok = true;
    for (std::size_t j = 0; j < facets.size() && ok; ++j) {
      if (std::binary_search(F.facets.begin(), F.facets.end(), static_cast<int>(j))) continue;
      if (dot(facets[j], p) >= 0) ok = false;
    }
    if (!ok) continue;
    RatVec q = sub(x, p);
    bool boundary = false;
    for (std::size_t i = 0; i < rays.size() && ok; ++i) {
      if (std::binary_search(F.rays.begin(), F.rays.end(), static_cast<int>(i))) continue;
      Rat s = dot(q, rays[i]);
      if (s > 0) ok = false;
      if (s == 0) boundary = true;
    }
    if (!ok) continue;
    if (boundary) throw DegenerateProjection();
    return {std::move(p), std::move(q), static_cast<int>(f)};
  }
  throw Error("Moreau decomposition found no face");
}

namespace {

Cone cone_at(const Polytope& P, const std::vector<int>& vertices, const RatVec& v) {
  linalg::Rows gens;
  for (int w : vertices) gens.push_back(primitive(sub(to_rat(P.vertices()[w]), v)));
  return Cone::from_generators(gens, P.ambient_dim());
}

}  // namespace

Cone tangent_cone(const Polytope& P, int face) {
  std::vector<int> all(P.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return cone_at(P, all, P.relint_point(face));
}

Cone normal_cone(const Polytope& P, int face) { return tangent_cone(P, face).polar(); }

Cone tangent_cone_in_face(const Polytope& P, int f, int g) {
  return cone_at(P, P.face(f).vertices, P.relint_point(g));
}

}  // namespace latval
