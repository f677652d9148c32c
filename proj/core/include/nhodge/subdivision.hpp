#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "nhodge/exact.hpp"
#include "nhodge/pointset.hpp"
#include "nhodge/polytope.hpp"

namespace nhodge {

// x -> gradient . x + constant
struct AffineFunction {
  RatVec gradient;
  Rational constant;

  Rational operator()(const RatVec& x) const;
  Rational operator()(const IntVec& x) const;
};

// Same function as integers: value(x) = (coeffs . x + constant) / denominator.
struct IntegerAffineForm {
  std::vector<std::int64_t> coeffs;
  std::int64_t constant = 0;
  std::int64_t denominator = 1;
};

struct Cell {
  PointSet points;           // support points whose lift lies on the lower face
  std::vector<int> vertices;
  int dim = -1;
  int full_cell = -1;        // a maximal cell containing this one
};

// Subdivision of conv(points) induced by the lower faces of the lifted points.
// Cells are sorted by dimension and cell 0 is the empty cell.
class RegularSubdivision {
 public:
  RegularSubdivision(IntMatrix points, RatVec heights);

  const IntMatrix& points() const { return points_; }
  const RatVec& heights() const { return heights_; }
  const Polytope& base() const { return base_; }
  int dim() const { return base_.dim(); }

  int cell_count() const { return static_cast<int>(cells_.size()); }
  const Cell& cell(int i) const { return cells_.at(i); }
  const std::vector<Cell>& cells() const { return cells_; }
  const Polytope& cell_polytope(int i) const { return cell_polytopes_.at(i); }
  std::vector<int> full_cells() const;
  int find_cell(const PointSet& points) const;  // -1 if not a cell
  bool is_face_of(int small, int big) const { return cells_[small].points.subset_of(cells_[big].points); }

  // The affine function of the lower face over cell i.
  const AffineFunction& nu(int i) const { return nu_.at(cells_.at(i).full_cell); }
  const IntegerAffineForm& nu_form(int i) const { return nu_form_.at(cells_.at(i).full_cell); }

  // Minimal cell containing x; E_OUTSIDE if x is not in the base polytope.
  int locate(const RatVec& x) const;
  Rational nu_at(const RatVec& x) const;

 private:
  IntMatrix points_;
  RatVec heights_;
  Polytope base_;
  std::vector<Cell> cells_;
  std::vector<Polytope> cell_polytopes_;
  std::map<int, AffineFunction> nu_;
  std::map<int, IntegerAffineForm> nu_form_;
};

// expected_dim >= 0 demands that conv(points) has that dimension (E_DEGENERATE otherwise).
RegularSubdivision lower_hull_subdivision(const std::map<IntVec, Rational>& lifted, int expected_dim = -1);

}  // namespace nhodge
