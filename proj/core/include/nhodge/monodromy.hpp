#pragma once

#include <string>
#include <vector>

#include "nhodge/cayley.hpp"
#include "nhodge/intpoly.hpp"
#include "nhodge/kspoly.hpp"
#include "nhodge/newton.hpp"

namespace nhodge {

struct HodgeResult {
  RootOfUnity lambda;
  IntPoly e_uvw;
  IntPoly e_uv;    // e_uvw at w = 1
  IntPoly e_diag;  // (-1)^center * e_uv(s, s)
  int center = 0;
  bool concentrated = false;
};

enum class JordanRoute { ViaE, ViaFormula, Both };

struct JordanTable {
  RootOfUnity lambda;
  std::vector<Integer> blocks;  // blocks[m-1] = number of Jordan blocks of size m
  JordanRoute route = JordanRoute::ViaE;

  Integer block(int size) const;
  Integer eigenspace_dim() const;  // sum of m * J_m
  bool operator==(const JordanTable& o) const { return blocks == o.blocks; }
};

struct MultiplicityFactor {
  Integer order;     // m_F
  Integer exponent;  // nonzero
};

// prod (t^order - 1)^exponent. Factors with order 1 are dropped: they only see
// lambda = 1, which is always excluded.
struct MultiplicityFactorization {
  std::vector<MultiplicityFactor> factors;

  Integer multiplicity_of(const RootOfUnity& lambda) const;
  std::string to_string() const;
};

// Torus hypersurface, all lambda.
HodgeResult refined_E_torus(const KSEngine& ks, const RootOfUnity& lambda);
// Hypersurface (torus or affine), lambda outside R_f.
HodgeResult concentrated_E(const KSEngine& ks, const RootOfUnity& lambda);
// Complete intersection over the Cayley data; cayley_ks must be built on cd.cayley.
HodgeResult concentrated_E(const CayleyData& cd, const KSEngine& cayley_ks, const RootOfUnity& lambda);
HodgeResult refined_E_ci(const CayleyData& cd, const KSEngine& cayley_ks, const RootOfUnity& lambda);

JordanTable jordan_via_E(const HodgeResult& h);
JordanTable jordan_via_formula(const KSEngine& ks, const RootOfUnity& lambda);
JordanTable jordan_via_formula(const CayleyData& cd, const KSEngine& cayley_ks, const RootOfUnity& lambda);
// Both routes; E_INCONSISTENT if they disagree.
JordanTable jordan_both(const KSEngine& ks, const RootOfUnity& lambda);
JordanTable jordan_both(const CayleyData& cd, const KSEngine& cayley_ks, const RootOfUnity& lambda);

MultiplicityFactorization multiplicity_product(const NewtonData& nd);
MultiplicityFactorization multiplicity_product(const CayleyData& cd);

// Sum over compositions of dim F of mixed volumes of the supporting faces of the
// summands, in the lattice of the lifted Minkowski cell.
Integer mixed_cell_volume(const CayleyData& cd, int minkowski_cell);

}  // namespace nhodge
