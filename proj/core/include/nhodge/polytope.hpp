#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nhodge/exact.hpp"
#include "nhodge/linalg.hpp"
#include "nhodge/pointset.hpp"

namespace nhodge {

// normal . y >= offset, in the polytope's lattice chart coordinates.
struct Inequality {
  IntVec normal;
  Integer offset;
};

// a . x + c * m >= 0 characterizes m*P among lattice points of the affine span of m*P.
struct DilateInequality {
  std::vector<std::int64_t> a;
  std::int64_t c = 0;
};

struct Face {
  PointSet points;  // generating points lying on the face
  int dim = -1;
};

// Convex hull of finitely many lattice points (optionally all scaled by a common
// denominator), with its complete face lattice. Faces are sorted by dimension; the
// first is the empty face and the last is the polytope itself.
class Polytope {
 public:
  Polytope() = default;  // the empty polytope in R^0
  static Polytope empty(int ambient_dim);
  explicit Polytope(IntMatrix points);
  static Polytope from_rational(const std::vector<RatVec>& points);

  int dim() const { return dim_; }
  int ambient_dim() const { return ambient_dim_; }
  bool is_empty() const { return dim_ < 0; }
  const Integer& denominator() const { return denominator_; }

  // Generating points, deduplicated and sorted, in the scaled integer lattice.
  const IntMatrix& points() const { return points_; }
  std::vector<int> vertex_indices() const;
  IntMatrix vertices() const;  // scaled integer coordinates
  std::vector<RatVec> rational_vertices() const;

  const LatticeChart& chart() const { return chart_; }
  const IntMatrix& chart_points() const { return chart_points_; }
  const std::vector<Inequality>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }
  int index_of_point(const IntVec& p) const;  // -1 if absent
  int face_index(const PointSet& points) const;  // -1 if not a face
  int smallest_face_containing(const PointSet& points) const;

  bool contains(const RatVec& x) const;
  // x in m * P (lattice polytopes only; x integral).
  bool contains_dilate(const IntVec& x, long m) const;

  // Enumerates m*P ∩ Z^N in machine integers; E_TOO_LARGE if coordinates could overflow.
  void for_each_lattice_point(long m, const std::function<void(const std::vector<std::int64_t>&)>& visit) const;
  IntMatrix lattice_points(long m) const;
  // Machine-integer facet system for dilate membership tests.
  std::vector<DilateInequality> dilate_inequalities() const;
  Integer lattice_point_count(long m) const;

 private:
  void build();

  int ambient_dim_ = 0;
  int dim_ = -1;
  Integer denominator_ = 1;
  IntMatrix points_;
  LatticeChart chart_;
  IntMatrix chart_points_;
  std::vector<Inequality> facets_;
  std::vector<Face> faces_;
};

Polytope convex_hull(const std::vector<RatVec>& points);

// Sum over faces of (-1)^dim on every nontrivial interval vanishes.
bool is_eulerian(const Polytope& p);

}  // namespace nhodge
