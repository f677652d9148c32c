#pragma once

#include <vector>

#include "nhodge/polytope.hpp"

namespace nhodge {

// dim! * volume relative to the lattice of the affine span; 1 for a point.
// E_EMPTY_CELL for the empty polytope.
Integer normalized_volume(const Polytope& p);

// Pulling triangulation as lists of point indices (each of size dim+1).
std::vector<std::vector<int>> pulling_triangulation(const Polytope& p);

// Normalized mixed volume of d lattice polytopes in Z^d (inclusion-exclusion over
// Minkowski sums). E_DIM_MISMATCH if the count differs from the ambient dimension.
Integer mixed_volume(const std::vector<Polytope>& polys);

Polytope minkowski_sum(const std::vector<Polytope>& polys);

// conv of {e_j} x P_j for j in subset (0-based indices), embedded in R^|subset| x R^n.
Polytope cayley_polytope(const std::vector<Polytope>& polys, const std::vector<int>& subset);

// Re-expresses lattice polytopes lying in parallel translates of a common affine
// lattice in the coordinates of that lattice (each translated to contain the origin).
std::vector<Polytope> to_common_lattice(const std::vector<Polytope>& polys, const IntMatrix& lattice_basis);

}  // namespace nhodge
