#pragma once

#include <optional>
#include <vector>

#include "nhodge/exact.hpp"

namespace nhodge {

// Rank over Q.
int rank_of(const RatMatrix& rows);
int rank_of(const IntMatrix& rows);

// Basis of the rational row space orthogonal complement {x : rows * x = 0}, scaled to
// primitive integer vectors.
IntMatrix rational_kernel(const IntMatrix& rows, int ncols);

// Row-style Hermite normal form of the lattice generated by the given vectors.
// Returns the nonzero rows; empty for the zero lattice.
IntMatrix hnf_basis(const IntMatrix& vectors);

// Basis of {x in Z^ncols : rows * x = 0}.
IntMatrix integer_kernel(const IntMatrix& rows, int ncols);

struct AffineLatticeBasis {
  IntVec base_point;
  IntMatrix basis;  // basis of Lin(Aff) ∩ Z^N
};

AffineLatticeBasis affine_lattice_basis(const IntMatrix& points);

// Affine lattice chart: x = base + sum_i y_i * basis[i].
class LatticeChart {
 public:
  LatticeChart() = default;
  explicit LatticeChart(AffineLatticeBasis frame);

  int ambient_dim() const { return static_cast<int>(frame_.base_point.size()); }
  int dim() const { return static_cast<int>(frame_.basis.size()); }
  const IntVec& base_point() const { return frame_.base_point; }
  const IntMatrix& basis() const { return frame_.basis; }

  // Coordinates of x - scale*base, or nullopt if that vector is off the linear span.
  std::optional<RatVec> coordinates(const RatVec& x, const Integer& scale = 1) const;
  std::optional<IntVec> lattice_coordinates(const IntVec& x, const Integer& scale = 1) const;
  IntVec point(const IntVec& y, const Integer& scale = 1) const;
  // d x N matrix M with y = M (x - scale*base) for x on the affine span.
  RatMatrix coordinate_matrix() const;

 private:
  AffineLatticeBasis frame_;
  std::vector<int> pivot_rows_;  // ambient coordinates where basis restricts to an invertible block
  RatMatrix block_inverse_;
};

// Determinant of a square integer matrix (Bareiss).
Integer determinant(IntMatrix m);

}  // namespace nhodge
