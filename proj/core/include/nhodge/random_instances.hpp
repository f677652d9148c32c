#pragma once

#include <cstdint>
#include <random>

#include "nhodge/polyinput.hpp"

namespace nhodge {

struct InstanceShape {
  Ambient ambient = Ambient::Torus;
  int n = 2;
  int points = 8;       // support size before deduplication, at most 12
  long max_coord = 3;   // exponents in [0, max_coord]
  long max_height = 5;  // t-orders in [0, max_height]
};

// Random polynomial whose Newton polytope has dimension n. Coefficients are +-t^h.
TPolynomial random_hypersurface(std::mt19937_64& rng, const InstanceShape& shape);
// k polynomials, each with an n-dimensional Newton polytope.
CISystem random_complete_intersection(std::mt19937_64& rng, const InstanceShape& shape, int k);

}  // namespace nhodge
