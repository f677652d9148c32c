#pragma once

#include <functional>

#include "nhodge/errors.hpp"
#include "nhodge/exact.hpp"
#include "nhodge/newton.hpp"
#include "nhodge/pointset.hpp"

namespace test_support {

inline nhodge::IntVec iv(std::initializer_list<long> xs) { return nhodge::to_int_vec(std::vector<long>(xs)); }

inline nhodge::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const nhodge::Error& e) {
    return e.code();
  }
  return nhodge::ErrorCode::Internal;
}

// One-variable heights keyed by the lattice coordinate.
inline nhodge::NewtonData line_data(nhodge::Ambient a, std::initializer_list<std::pair<long, long>> hs) {
  nhodge::ValuationMap m;
  for (auto [x, h] : hs) m[iv({x})] = h;
  return nhodge::build_newton_data(a, 1, m);
}

inline nhodge::PointSet points_of(const nhodge::Polytope& p, std::initializer_list<nhodge::IntVec> pts) {
  nhodge::PointSet s(p.points().size());
  for (const auto& x : pts) s.insert(p.index_of_point(x));
  return s;
}

inline int cell_of(const nhodge::NewtonData& nd, std::initializer_list<nhodge::IntVec> pts) {
  return nd.subdivision().find_cell(points_of(nd.polytope(), pts));
}

inline int face_of(const nhodge::NewtonData& nd, std::initializer_list<nhodge::IntVec> pts) {
  return nd.polytope().face_index(points_of(nd.polytope(), pts));
}

}  // namespace test_support
