#pragma once

#include <map>
#include <vector>

#include "nhodge/exact.hpp"
#include "nhodge/intpoly.hpp"
#include "nhodge/polyinput.hpp"

// Brute-force reference implementations. Nothing here uses the geometry or
// combinatorics of the main pipeline; only exact arithmetic and linear algebra.
namespace nhodge::oracle {

struct BruteFacet {
  IntVec normal;  // normal . x >= offset on the polytope
  Integer offset;
};

struct BrutePolytope {
  IntMatrix points;
  int dim = -1;
  IntMatrix equations;  // e . (x - points[0]) = 0 on the affine hull
  std::vector<BruteFacet> facets;
};

BrutePolytope brute_polytope(const IntMatrix& points);

// |m P ∩ Z^n| for m = 0..upto by filtering the ambient bounding box. Empty P gives zeros.
std::vector<Integer> ehrhart_series_bruteforce(const IntMatrix& points, int upto);

// Subsets of a point configuration ordered by inclusion, with ranks.
struct SetPosetData {
  std::vector<std::vector<int>> sets;  // sorted point indices
  std::vector<int> dims;

  bool leq(int a, int b) const;
  int find(const std::vector<int>& set) const;  // -1 if absent
};

SetPosetData brute_face_lattice(const IntMatrix& points);

// Toric g by the h/g recursion on [lo, hi] (or on its dual). No memoization.
IntPoly recursion_eval_g(const SetPosetData& poset, int lo, int hi, bool dual = false);

struct BruteSubdivision {
  IntMatrix points;
  SetPosetData faces;  // face lattice of conv(points)
  SetPosetData cells;  // cells of the lower hull, including the empty cell
};

BruteSubdivision brute_subdivision(const std::map<IntVec, Rational>& lifted);

// Local h-polynomial of the restriction to face `face` at cell `cell`, from the definition.
IntPoly recursion_eval_local_h(const BruteSubdivision& s, int face, int cell);

struct CycleType {
  Integer length;
  Integer count;
};

struct N1Monodromy {
  std::vector<CycleType> cycles;
  std::map<RootOfUnity, Integer> eigenvalues;
  Integer points() const;
};

// Roots of f(t, x) near t = 0 grouped by Puiseux orbits; E_UNSUPPORTED_DIM unless n = 1.
N1Monodromy monodromy_n1(const TPolynomial& p);

}  // namespace nhodge::oracle
