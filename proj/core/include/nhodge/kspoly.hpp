#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "nhodge/exact.hpp"
#include "nhodge/intpoly.hpp"
#include "nhodge/newton.hpp"
#include "nhodge/pointset.hpp"

namespace nhodge {

enum class Orientation { Standard, Reversed };

// Elements are point sets ordered by inclusion, each with a dimension. Face lattices
// of polytopes and the cell posets of subdivisions both have this shape.
class SetPoset {
 public:
  SetPoset() = default;
  SetPoset(std::vector<PointSet> sets, std::vector<int> dims);
  static SetPoset face_lattice(const Polytope& p);
  static SetPoset cells(const RegularSubdivision& s);

  int size() const { return static_cast<int>(sets_.size()); }
  const PointSet& set(int i) const { return sets_.at(i); }
  int dim(int i) const { return dims_.at(i); }
  bool leq(int a, int b) const { return sets_[a].subset_of(sets_[b]); }
  std::vector<int> interval(int lo, int hi) const;

  // g of [lo,hi] (Standard) or of [lo,hi]* (Reversed), in t. Memoized.
  const IntPoly& g(int lo, int hi, Orientation o) const;

 private:
  std::vector<PointSet> sets_;
  std::vector<int> dims_;
  mutable std::map<std::tuple<int, int, int>, IntPoly> memo_;
};

// g-polynomial of an Eulerian interval; E_NOT_EULERIAN if the recursion is inconsistent.
IntPoly g_poly(const SetPoset& poset, int lo, int hi, Orientation o = Orientation::Standard);

// Staircase coefficients of a symmetric unimodal l with centre codim/2.
IntPoly ltilde(const IntPoly& l, int codim);

// Katz-Stapledon polynomials over one Newton datum. Faces index the face lattice of P,
// cells index the subdivision. The datum must outlive the engine.
class KSEngine {
 public:
  explicit KSEngine(const NewtonData& nd);

  const NewtonData& data() const { return nd_; }
  const SetPoset& faces() const { return faces_; }
  const SetPoset& cells() const { return cells_; }
  int top_face() const { return faces_.size() - 1; }

  // Cells of S contained in face q, in ascending cell order.
  const std::vector<int>& cells_in_face(int q) const;
  int carrier(int cell) const { return nd_.cell(cell).carrier_face; }

  IntPoly h_link(int face, int cell) const;
  IntPoly local_h(int face, int cell) const;  // l_Q(S|_Q, F; t), checked symmetric and nonnegative

  // f_lambda(W, m): W a cell (affine nu) or a face of P (piecewise nu).
  Integer weighted_ehrhart_cell(int cell, const RootOfUnity& lambda, long m) const;
  Integer weighted_ehrhart_face(int face, const RootOfUnity& lambda, long m) const;

  IntPoly hstar_u_cell(int cell, const RootOfUnity& lambda) const;
  IntPoly hstar_u_face(int face, const RootOfUnity& lambda) const;
  IntPoly lstar_u_cell(int cell, const RootOfUnity& lambda) const;
  IntPoly lstar_u_face(int face, const RootOfUnity& lambda) const;

  IntPoly lstar_uv(int face, const RootOfUnity& lambda) const;
  IntPoly hstar_uv(int face, const RootOfUnity& lambda) const;
  IntPoly hstar_uvw(int face, const RootOfUnity& lambda) const;

 private:
  // counts[m-1][r] = #{x in mW : m*nu(x/m) = r/denominator mod 1}
  struct WeightTable {
    std::int64_t denominator = 1;
    std::vector<std::vector<Integer>> counts;
  };
  const WeightTable& cell_table(int cell) const;
  const WeightTable& face_table(int face) const;
  static Integer lookup(const WeightTable& t, const RootOfUnity& lambda, long m);
  IntPoly hstar_from_counts(const WeightTable& t, int dim, const RootOfUnity& lambda) const;

  const NewtonData& nd_;
  SetPoset faces_;
  SetPoset cells_;
  std::vector<std::vector<int>> cells_in_face_;
  mutable std::map<int, WeightTable> cell_tables_;
  mutable std::map<int, WeightTable> face_tables_;
  mutable std::map<std::pair<int, int>, IntPoly> local_h_memo_;
  mutable std::map<std::pair<int, int>, IntPoly> h_link_memo_;
  mutable std::map<std::pair<int, Rational>, IntPoly> lstar_cell_memo_;
  mutable std::map<std::pair<int, Rational>, IntPoly> lstar_face_memo_;
  mutable std::map<std::pair<int, Rational>, IntPoly> lstar_uv_memo_;
};

// Variable changes used throughout.
IntPoly in_variable(const IntPoly& p, const std::string& from, const Monomial& to);
IntPoly reverse(const IntPoly& p, const std::string& var, int degree);  // var^degree * p(1/var)

}  // namespace nhodge
