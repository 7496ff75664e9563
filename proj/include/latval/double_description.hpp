#pragma once

#include "latval/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include <vector>

// Exact double description method and face-lattice closure for polyhedral
// cones. Everything else in exactgeom and cones is built on these two calls.
namespace latval::dd {

using Bits = boost::dynamic_bitset<>;

struct ConeData {
  linalg::Rows lineality;  // basis of the largest contained subspace
  linalg::Rows rays;       // extreme rays, primitive and orthogonal to `lineality`
};

/// Generators of {x in span(space) : <a, x> <= 0 for every a in `inequalities`}.
/// `space` is any spanning set of the ambient subspace to work in.
ConeData generators(const linalg::Rows& inequalities, const linalg::Rows& space, int n);

struct FaceRecord {
  Bits rays;    // extreme rays contained in the face
  Bits facets;  // facets containing the face
};

/// All faces (the cone itself included) of a cone with `nrays` extreme rays
/// whose facet j contains exactly the rays in facet_rays[j]. The minimal
/// face (lineality space, or {0}) has an empty ray set.
std::vector<FaceRecord> face_lattice(const std::vector<Bits>& facet_rays, std::size_t nrays);

}  // namespace latval::dd
