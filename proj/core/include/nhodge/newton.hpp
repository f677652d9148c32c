#pragma once

#include <map>
#include <set>
#include <vector>

#include "nhodge/exact.hpp"
#include "nhodge/polyinput.hpp"
#include "nhodge/subdivision.hpp"

namespace nhodge {

struct CellInfo {
  int carrier_face = -1;      // smallest face of P containing the cell
  Integer m = 0;              // m_F; 0 for the empty cell
  bool boundary = false;      // carrier face is proper
  bool at_infinity = false;   // contained in a face at infinity (affine / Cayley data)
  bool bad_region = false;    // the cell contributes its m_F to R_f
  RatVec twist;               // gradient of nu_F reduced mod 1
};

// Newton data of a lifted point configuration. For hypersurfaces the points live in
// Z^n; for Cayley data they live in Z^k x Z^n.
class NewtonData {
 public:
  // orthant_coords: coordinates whose hyperplanes bound the faces at infinity. Empty
  // selects the torus convention (R_f from boundary cells).
  NewtonData(Ambient ambient, int n, RegularSubdivision subdivision, std::vector<int> orthant_coords);

  Ambient ambient() const { return ambient_; }
  int n() const { return n_; }
  const RegularSubdivision& subdivision() const { return subdivision_; }
  const Polytope& polytope() const { return subdivision_.base(); }
  int dim() const { return subdivision_.dim(); }
  const std::vector<CellInfo>& cells() const { return cells_; }
  const CellInfo& cell(int i) const { return cells_.at(i); }
  const std::vector<int>& orthant_coords() const { return orthant_coords_; }
  bool uses_infinity() const { return !orthant_coords_.empty(); }

  // Proper faces of P not contained in any orthant hyperplane (P_infinity).
  const std::vector<int>& infinity_faces() const { return infinity_faces_; }
  // Orders m_F of cells in the bad region; R_f = roots of unity of order dividing one of them.
  const std::set<Integer>& bad_orders() const { return bad_orders_; }
  bool is_bad(const RootOfUnity& lambda) const;
  Integer spectrum_order() const { return spectrum_order_; }  // lcm of all m_F
  const std::set<Integer>& cell_orders() const { return cell_orders_; }
  // Roots of unity whose order divides some m_F; no other eigenvalue carries weight.
  std::vector<RootOfUnity> spectrum() const;

  // Cells of the restriction of S to face q of P.
  std::vector<int> cells_in_face(int q) const;

 private:
  Ambient ambient_;
  int n_;
  RegularSubdivision subdivision_;
  std::vector<int> orthant_coords_;
  std::vector<CellInfo> cells_;
  std::vector<int> infinity_faces_;
  std::set<Integer> bad_orders_;
  Integer spectrum_order_ = 1;
  std::set<Integer> cell_orders_;
};

// Union of the roots of unity of order dividing one of the given integers, sorted.
std::vector<RootOfUnity> roots_of_orders(const std::set<Integer>& orders);

// Lifts the support by the valuations; E_DEGENERATE unless dim P = n.
NewtonData build_newton_data(const TPolynomial& p);
NewtonData build_newton_data(Ambient ambient, int n, const ValuationMap& heights);

// m_F for a nonempty cell; E_EMPTY_CELL for the empty cell.
Integer cell_m_index(const NewtonData& nd, int cell);

struct Predicates {
  bool is_convenient = false;
  bool satisfies_condition_s = false;
  std::vector<int> p_infinity_cells;
  std::vector<int> relevant_faces;  // faces of P not in P_infinity (affine) / interior cells (torus)
};

Predicates predicates(const NewtonData& nd);

// Coefficients a_{v,o(v)} of support vectors whose lift lies on the lifted cell.
std::map<IntVec, Rational> initial_poly(const TPolynomial& p, const NewtonData& nd, int cell);

}  // namespace nhodge
