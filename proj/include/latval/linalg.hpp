#pragma once

#include "latval/rational.hpp"

#include <optional>
#include <vector>

// Exact rational linear algebra on small dense matrices stored as lists of
// row (or column) vectors.
namespace latval::linalg {

using Rows = std::vector<RatVec>;

/// Reduced row echelon form; zero rows are dropped.
struct Echelon {
  Rows rows;
  std::vector<int> pivots;
};
Echelon rref(Rows rows, int ncols);

int rank(const Rows& rows, int ncols);

/// Basis of the span of `vectors` (the nonzero rref rows).
Rows span_basis(const Rows& vectors, int n);

/// Basis of {x : <r, x> = 0 for all r in rows}.
Rows nullspace(const Rows& rows, int n);

/// Orthogonal projection of x onto span(basis); basis need not be orthogonal.
RatVec project(const Rows& basis, const RatVec& x);

/// Coordinates c with sum c_i basis_i = x, or nullopt if x is outside the span.
std::optional<RatVec> coordinates(const Rows& basis, const RatVec& x);

Rat determinant(Rows m);
Rat gram_determinant(const Rows& vectors);

/// True iff span(a) == span(b).
bool same_span(const Rows& a, const Rows& b, int n);
bool in_span(const Rows& basis, const RatVec& x, int n);

/// Basis of the lattice Z^n ∩ span(vectors) (the saturation), computed from a
/// unimodular column reduction of an integer equation matrix for the span.
std::vector<IntVec> saturated_lattice_basis(const Rows& vectors, int n);

}  // namespace latval::linalg
