#pragma once

#include "latval/double_description.hpp"
#include "latval/linalg.hpp"
#include "latval/polytope.hpp"

#include <vector>

namespace latval {

struct ConeFace {
  std::vector<int> rays;    // indices into Cone::rays()
  std::vector<int> facets;  // facets of the cone containing this face
  int dim = 0;
};

/// Polyhedral cone C = L + pos(r_1..r_m) in R^d, with L the lineality space
/// and the r_i extreme rays of the pointed part (orthogonal to L). Facet
/// normals live in lin C, so C = {x ∈ lin C : <y_j, x> <= 0}.
class Cone {
 public:
  static Cone from_generators(const linalg::Rows& generators, int ambient_dim);
  static Cone from_generators(const std::vector<IntVec>& generators, int ambient_dim);
  /// {x : <a_i, x> <= 0} ∩ {x : <e_j, x> = 0}.
  static Cone from_inequalities(const linalg::Rows& normals, int ambient_dim, const linalg::Rows& equations = {});
  /// span(basis) as a cone.
  static Cone subspace(const linalg::Rows& basis, int ambient_dim);
  static Cone zero(int ambient_dim);
  static Cone whole(int ambient_dim);

  int ambient_dim() const { return d_; }
  int dim() const { return static_cast<int>(span_.size()); }
  int lineality_dim() const { return static_cast<int>(lineality_.size()); }
  /// dim C - dim L.
  int pointed_dim() const { return dim() - lineality_dim(); }

  const linalg::Rows& rays() const { return rays_; }
  const linalg::Rows& lineality() const { return lineality_; }
  const linalg::Rows& span_basis() const { return span_; }
  const linalg::Rows& facet_normals() const { return facets_; }
  /// Generators: rays, then ±lineality basis.
  linalg::Rows generators() const;

  /// Faces sorted by dimension then ray list; the minimal face (L) first and
  /// C itself last.
  const std::vector<ConeFace>& faces() const { return faces_; }
  std::vector<int> f_vector() const;

  bool is_linear_subspace() const { return rays_.empty(); }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_zero() const { return span_.empty(); }
  bool full_dimensional() const { return dim() == d_; }

  bool contains(const RatVec& x) const;
  bool contains(const Cone& other) const;
  /// -1 when x ∉ C.
  int carrier_face(const RatVec& x) const;

  /// Basis of lin F.
  linalg::Rows face_span(int f) const;
  /// The face as a cone in its own right.
  Cone face_cone(int f) const;
  /// N_F(C) = C° ∩ F^⊥.
  Cone normal_cone_of_face(int f) const;

  Cone polar() const;
  /// The same cone inside R^{ambient_dim}, ambient_dim >= d, padded with zeros.
  Cone embed(int ambient_dim) const;

  bool operator==(const Cone& other) const;

 private:
  Cone() = default;
  void build_faces();

  int d_ = 0;
  linalg::Rows span_;
  linalg::Rows lineality_;
  linalg::Rows rays_;
  linalg::Rows facets_;
  std::vector<ConeFace> faces_;
};

/// Σ (-1)^{dim F} over all faces of C.
int euler_check(const Cone& C);

struct MoreauDecomposition {
  RatVec p;  // Π_C(x)
  RatVec q;  // Π_{C°}(x)
  int face;  // p ∈ relint(face)
};

/// Exact Moreau decomposition. Throws DegenerateProjection when q is not in
/// relint N_F(C), i.e. x sits on a boundary between two face regions.
MoreauDecomposition moreau_project(const Cone& C, const RatVec& x);

/// T_F(P) = pos(P - v) for v ∈ relint F.
Cone tangent_cone(const Polytope& P, int face);
/// N_F(P) = T_F(P)°.
Cone normal_cone(const Polytope& P, int face);
/// Tangent cone of face `f` (as a polytope) at its subface `g`.
Cone tangent_cone_in_face(const Polytope& P, int f, int g);

}  // namespace latval
