#pragma once

#include "latval/polytope.hpp"

#include <cstdint>
#include <vector>

namespace latval {

/// Lattice points of a dilate nP, each tagged with the face F of P such that
/// the point lies in relint(nF).
struct LatticePointSet {
  std::vector<IntVec> points;  // lexicographically sorted
  std::vector<int> face_of;    // parallel to points; -1 for the n = 0 dilate
  /// |relint(nF) ∩ Z^d| indexed like P.faces().
  std::vector<std::int64_t> by_face;

  std::size_t size() const { return points.size(); }
};

/// nP ∩ Z^d. n = 0 gives the single point 0.
LatticePointSet enumerate_points(const Polytope& P, std::int64_t n);

/// Only the per-face relative-interior counts (no point storage).
std::vector<std::int64_t> relint_counts(const Polytope& P, std::int64_t n);

std::int64_t count_points(const Polytope& P, std::int64_t n);
/// |relint(nP) ∩ Z^d|.
std::int64_t interior_count(const Polytope& P, std::int64_t n);

/// Covolume of Z^d ∩ dir(aff F) inside dir(aff F). Stored through its square,
/// the Gram determinant of a lattice basis, which is always an integer.
struct LatticeDet {
  Int gram = 1;
  double value() const;
  /// Exact value when gram is a perfect square.
  bool is_integer() const;
};

LatticeDet lattice_determinant(const Polytope& P, int face);

/// |F| / det(F): the volume of F measured in units of its own lattice.
Rat relative_volume(const Polytope& P, int face);
/// Intrinsic Euclidean volume |F| (|vertex| = 1).
double face_volume(const Polytope& P, int face);

}  // namespace latval
