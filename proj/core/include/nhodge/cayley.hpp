#pragma once

#include <set>
#include <vector>

#include "nhodge/newton.hpp"
#include "nhodge/polyinput.hpp"

namespace nhodge {

struct Summand {
  ValuationMap heights;
  RegularSubdivision lower;  // lower hull of the lifted support, any dimension
};

// Newton data of a complete intersection f_1 = ... = f_k = 0.
struct CayleyData {
  Ambient ambient;
  int n;
  int k;
  std::vector<Summand> summands;
  NewtonData minkowski;  // P_1 + ... + P_k with the infimal convolution of the lifts
  NewtonData cayley;     // points (e_j, v) in Z^k x Z^n at height o_j(v)
  std::vector<int> subset_faces;  // face of the Cayley polytope over J, indexed by bitmask J (entry 0 unused)
};

// E_DEGENERATE unless dim(P_1 + ... + P_k) = n; E_CAYLEY_MISMATCH if the two order sets
// generate different root sets.
CayleyData build_cayley_data(const CISystem& system);

// All positive divisors of the given integers.
std::set<Integer> divisor_closure(const std::set<Integer>& orders);

}  // namespace nhodge
