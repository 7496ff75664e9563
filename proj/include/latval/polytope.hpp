#pragma once

#include "latval/double_description.hpp"
#include "latval/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace latval {

inline constexpr int kMaxAmbientDim = 6;

/// <normal, x> <= offset
struct Halfspace {
  IntVec normal;
  std::int64_t offset = 0;
};

/// <normal, x> == offset
struct Hyperplane {
  IntVec normal;
  std::int64_t offset = 0;
};

struct Face {
  std::vector<int> vertices;      // indices into Polytope::vertices(), ascending
  std::vector<int> tight_facets;  // facets of the polytope containing this face
  int dim = 0;
  /// Basis of the lattice Z^d ∩ dir(aff F).
  std::vector<IntVec> affine_basis;
};

/// Lattice polytope in V- and H-representation with its full face lattice.
/// Immutable after construction.
class Polytope {
 public:
  /// conv(points). Lower-dimensional hulls are supported; duplicates and
  /// non-extreme points are dropped.
  static Polytope convex_hull(std::span<const IntVec> points);
  static Polytope convex_hull(std::initializer_list<IntVec> points);

  /// {x : <a_i, x> <= b_i} ∩ {x : <e_j, x> = c_j}. Throws if the set is empty
  /// or unbounded, or if a vertex is not integral.
  static Polytope from_inequalities(int ambient_dim, std::span<const Halfspace> ineq,
                                    std::span<const Hyperplane> eq = {});

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == ambient_dim_; }

  const std::vector<IntVec>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const std::vector<Hyperplane>& equations() const { return equations_; }

  /// Faces sorted by dimension, then by vertex list; P itself is last. The
  /// empty face is not listed.
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int i) const { return faces_[i]; }
  int whole_face() const { return static_cast<int>(faces_.size()) - 1; }
  std::vector<int> faces_of_dim(int j) const;
  /// f_0 .. f_dim (f_dim == 1).
  std::vector<int> f_vector() const;

  /// Index of the face with exactly these vertices, or -1.
  int find_face(const std::vector<int>& vertex_indices) const;
  /// Faces G with G ⊆ F (F included).
  std::vector<int> subfaces(int f) const;
  /// Faces G ⊂ F with dim G == dim F - 1.
  std::vector<int> facets_of_face(int f) const;

  bool contains(const RatVec& x) const;
  bool relint_contains(int f, const RatVec& x) const;
  /// The unique face whose relative interior contains x, or -1 if x ∉ P.
  int carrier_face(const RatVec& x) const;

  /// Some point of relint F (the vertex barycenter).
  RatVec relint_point(int f) const;

  Polytope dilate(std::int64_t n) const;
  Polytope translate(const IntVec& t) const;
  /// The face F as a polytope in its own right (same ambient space).
  Polytope face_polytope(int f) const;

  bool operator==(const Polytope& other) const;

 private:
  Polytope() = default;
  static Polytope build(int ambient_dim, std::vector<IntVec> points);

  int ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<IntVec> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Hyperplane> equations_;
  std::vector<Face> faces_;
};

}  // namespace latval
