#include "nhodge/newton.hpp"

#include <algorithm>

#include "nhodge/errors.hpp"

namespace nhodge {

Integer cell_m_index(const NewtonData& nd, int cell) {
  const auto& s = nd.subdivision();
  if (cell < 0 || cell >= s.cell_count()) raise(ErrorCode::UnknownCell, "cell index " + std::to_string(cell));
  if (s.cell(cell).dim < 0) raise(ErrorCode::EmptyCell, "m_F of the empty cell");
  const AffineFunction& nu = s.nu(cell);
  const LatticeChart& chart = s.cell_polytope(cell).chart();
  Integer m = nu(chart.base_point()).get_den();
  for (const auto& b : chart.basis()) {
    Rational step = 0;
    for (std::size_t i = 0; i < b.size(); ++i) step += nu.gradient[i] * b[i];
    m = lcm_of(m, step.get_den());
  }
  return m;
}

NewtonData::NewtonData(Ambient ambient, int n, RegularSubdivision subdivision, std::vector<int> orthant_coords)
    : ambient_(ambient), n_(n), subdivision_(std::move(subdivision)), orthant_coords_(std::move(orthant_coords)) {
  const Polytope& P = subdivision_.base();
  const int top = static_cast<int>(P.faces().size()) - 1;

  if (uses_infinity()) {
    for (int q = 1; q < top; ++q) {
      const auto idx = P.faces()[q].points.indices();
      bool in_hyperplane = false;
      for (int c : orthant_coords_) {
        bool all_zero = std::all_of(idx.begin(), idx.end(), [&](int i) { return P.points()[i][c] == 0; });
        if (all_zero) in_hyperplane = true;
      }
      if (!in_hyperplane) infinity_faces_.push_back(q);
    }
  }

  cells_.resize(subdivision_.cell_count());
  for (int i = 0; i < subdivision_.cell_count(); ++i) {
    CellInfo& info = cells_[i];
    const Cell& c = subdivision_.cell(i);
    info.carrier_face = P.smallest_face_containing(c.points);
    info.boundary = info.carrier_face != top;
    if (c.dim < 0) continue;
    info.m = cell_m_index(*this, i);
    for (int q : infinity_faces_)
      if (c.points.subset_of(P.faces()[q].points)) info.at_infinity = true;
    info.bad_region = uses_infinity() ? info.at_infinity : info.boundary;
    for (const auto& g : subdivision_.nu(i).gradient) info.twist.push_back(frac_of(g));
    if (info.bad_region) bad_orders_.insert(info.m);
    spectrum_order_ = lcm_of(spectrum_order_, info.m);
    cell_orders_.insert(info.m);
  }
  // 1 is always in R_f, including when no cell lies in the bad region.
  bad_orders_.insert(1);
}

bool NewtonData::is_bad(const RootOfUnity& lambda) const {
  const Integer ord = lambda.order();
  return std::any_of(bad_orders_.begin(), bad_orders_.end(), [&](const Integer& m) { return m % ord == 0; });
}

std::vector<RootOfUnity> NewtonData::spectrum() const { return roots_of_orders(cell_orders_); }

std::vector<RootOfUnity> roots_of_orders(const std::set<Integer>& orders) {
  std::set<RootOfUnity> all;
  for (const auto& m : orders) {
    // divisors of a larger order already cover m
    if (std::any_of(orders.begin(), orders.end(), [&](const Integer& o) { return o != m && o % m == 0; })) continue;
    for (const auto& r : roots_dividing(m)) all.insert(r);
  }
  if (all.empty()) all.insert(RootOfUnity(0, 1));
  return {all.begin(), all.end()};
}

std::vector<int> NewtonData::cells_in_face(int q) const {
  const PointSet& face = polytope().faces().at(q).points;
  std::vector<int> out;
  for (int i = 0; i < subdivision_.cell_count(); ++i)
    if (subdivision_.cell(i).points.subset_of(face)) out.push_back(i);
  return out;
}

NewtonData build_newton_data(Ambient ambient, int n, const ValuationMap& heights) {
  if (heights.empty()) raise(ErrorCode::Empty, "polynomial has empty support");
  std::map<IntVec, Rational> lifted;
  for (const auto& [v, o] : heights) {
    if (static_cast<int>(v.size()) != n) raise(ErrorCode::DimMismatch, "support vector of wrong length");
    lifted[v] = Rational(o);
  }
  RegularSubdivision s = lower_hull_subdivision(lifted);
  if (s.dim() != n)
    raise(ErrorCode::Degenerate, "dim P = " + std::to_string(s.dim()) + " < n = " + std::to_string(n) +
                                     "; the upper-half polyhedron must have dimension n+1");
  std::vector<int> orthant;
  if (ambient == Ambient::Affine)
    for (int i = 0; i < n; ++i) orthant.push_back(i);
  return NewtonData(ambient, n, std::move(s), std::move(orthant));
}

NewtonData build_newton_data(const TPolynomial& p) {
  if (p.ambient == Ambient::Affine) {
    for (const auto& [v, c] : p.terms)
      for (const auto& x : v)
        if (x < 0) raise(ErrorCode::NegativeExponent, "affine support vector " + to_string(v));
  }
  return build_newton_data(p.ambient, p.n, valuations(p));
}

Predicates predicates(const NewtonData& nd) {
  Predicates out;
  const Polytope& P = nd.polytope();
  const auto& s = nd.subdivision();
  const int n = nd.polytope().ambient_dim();

  if (nd.ambient() == Ambient::Affine) {
    out.is_convenient = true;
    for (unsigned mask = 0; mask < (1U << n) && out.is_convenient; ++mask) {
      IntMatrix inside;
      for (const auto& p : P.points()) {
        bool ok = true;
        for (int i = 0; i < n; ++i)
          if (!(mask & (1U << i)) && p[i] != 0) ok = false;
        if (ok) inside.push_back(p);
      }
      const int want = __builtin_popcount(mask);
      const int got = inside.empty() ? -1 : Polytope(inside).dim();
      if (got != want) out.is_convenient = false;
    }
  }

  std::set<Rational> values;
  for (int i = 0; i < s.cell_count(); ++i) {
    if (!nd.cell(i).at_infinity) continue;
    out.p_infinity_cells.push_back(i);
    for (int v : s.cell(i).vertices) values.insert(s.heights()[v]);
  }
  out.satisfies_condition_s = values.size() <= 1;

  const int top = static_cast<int>(P.faces().size()) - 1;
  if (nd.uses_infinity()) {
    for (int q = 0; q <= top; ++q) {
      const PointSet& face = P.faces()[q].points;
      bool inside = false;
      for (int f : nd.infinity_faces())
        if (face.subset_of(P.faces()[f].points)) inside = true;
      if (!inside) out.relevant_faces.push_back(q);
    }
  } else {
    for (int i = 1; i < s.cell_count(); ++i)
      if (nd.cell(i).carrier_face == top) out.relevant_faces.push_back(i);
  }
  return out;
}

std::map<IntVec, Rational> initial_poly(const TPolynomial& p, const NewtonData& nd, int cell) {
  const auto& s = nd.subdivision();
  if (cell < 0 || cell >= s.cell_count()) raise(ErrorCode::UnknownCell, "cell index " + std::to_string(cell));
  std::map<IntVec, Rational> out;
  for (int i : s.cell(cell).points.indices()) {
    const IntVec& v = s.points()[i];
    auto it = p.terms.find(v);
    if (it == p.terms.end()) raise(ErrorCode::UnknownCell, "cell point " + to_string(v) + " is not in the support");
    out[v] = it->second.begin()->second;
  }
  return out;
}

}  // namespace nhodge
