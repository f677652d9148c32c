#include "nhodge/random_instances.hpp"

#include "nhodge/errors.hpp"
#include "nhodge/polytope.hpp"

namespace nhodge {

TPolynomial random_hypersurface(std::mt19937_64& rng, const InstanceShape& shape) {
  if (shape.n < 1 || shape.points < 1 || shape.points > 12) raise(ErrorCode::Syntax, "unsupported instance shape");
  std::uniform_int_distribution<long> coord(0, shape.max_coord);
  std::uniform_int_distribution<long> height(0, shape.max_height);
  std::bernoulli_distribution negative(0.5);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    TPolynomial p{shape.ambient, shape.n, {}};
    IntMatrix support;
    for (int i = 0; i < shape.points; ++i) {
      IntVec v(shape.n);
      for (auto& x : v) x = coord(rng);
      const long h = height(rng);
      p.terms[v] = TCoeff{{static_cast<int>(h), negative(rng) ? -1 : 1}};
      support.push_back(v);
    }
    if (Polytope(support).dim() == shape.n) return p;
  }
  raise(ErrorCode::Internal, "could not draw a full-dimensional support");
}

CISystem random_complete_intersection(std::mt19937_64& rng, const InstanceShape& shape, int k) {
  if (k < 1 || k > shape.n) raise(ErrorCode::Syntax, "complete intersection needs 1 <= k <= n");
  CISystem sys;
  for (int j = 0; j < k; ++j) sys.polys.push_back(random_hypersurface(rng, shape));
  return sys;
}

}  // namespace nhodge
