#include "nhodge/subdivision.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "nhodge/errors.hpp"

namespace nhodge {
namespace {

// Affine function through the lifted points (p_i, h_i); free variables set to zero.
AffineFunction interpolate(const IntMatrix& points, const RatVec& heights, const std::vector<int>& idx) {
  const int n = static_cast<int>(points.front().size());
  RatMatrix m;
  for (int i : idx) {
    RatVec row(n + 2);
    for (int j = 0; j < n; ++j) row[j] = points[i][j];
    row[n] = 1;
    row[n + 1] = heights[i];
    m.push_back(std::move(row));
  }
  // Row reduction on the coefficient columns.
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c <= n && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = 0; j < n + 2; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m.size(); ++i)
    if (m[i][n + 1] != 0) raise(ErrorCode::Internal, "lower face points are not coplanar");
  AffineFunction f{RatVec(n, 0), 0};
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == n) {
      f.constant = m[i][n + 1];
    } else {
      f.gradient[pivots[i]] = m[i][n + 1];
    }
  }
  return f;
}

IntegerAffineForm integer_form(const AffineFunction& f) {
  Integer den = f.constant.get_den();
  for (const auto& g : f.gradient) den = lcm_of(den, g.get_den());
  IntegerAffineForm out;
  auto narrow = [](const Integer& v) {
    if (!fits_int64(v) || abs(v) > (Integer(1) << 40)) raise(ErrorCode::TooLarge, "affine function coefficients too large");
    return static_cast<std::int64_t>(v.get_si());
  };
  out.denominator = narrow(den);
  out.constant = narrow(f.constant.get_num() * (den / f.constant.get_den()));
  for (const auto& g : f.gradient) out.coeffs.push_back(narrow(g.get_num() * (den / g.get_den())));
  return out;
}

}  // namespace

Rational AffineFunction::operator()(const RatVec& x) const {
  Rational s = constant;
  for (std::size_t i = 0; i < gradient.size(); ++i) s += gradient[i] * x[i];
  return s;
}

Rational AffineFunction::operator()(const IntVec& x) const {
  Rational s = constant;
  for (std::size_t i = 0; i < gradient.size(); ++i) s += gradient[i] * x[i];
  return s;
}

RegularSubdivision::RegularSubdivision(IntMatrix points, RatVec heights) {
  if (points.empty() || points.size() != heights.size()) raise(ErrorCode::Internal, "bad lifted point set");
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return points[a] < points[b]; });
  for (auto i : order) {
    if (!points_.empty() && points_.back() == points[i]) raise(ErrorCode::Internal, "duplicate support point");
    points_.push_back(points[i]);
    heights_.push_back(heights[i]);
  }
  base_ = Polytope(points_);
  const std::size_t count = points_.size();
  const int n = static_cast<int>(points_.front().size());

  Integer hden = 1;
  for (const auto& h : heights_) hden = lcm_of(hden, h.get_den());
  IntMatrix lifted;
  for (std::size_t i = 0; i < count; ++i) {
    IntVec p = points_[i];
    p.push_back(heights_[i].get_num() * (hden / heights_[i].get_den()));
    lifted.push_back(std::move(p));
  }
  IntVec top = lifted.front();
  top.back() += 1;
  lifted.push_back(top);
  Polytope hull(lifted);

  std::vector<int> to_support(hull.points().size(), -1);
  for (std::size_t i = 0; i < count; ++i) to_support[hull.index_of_point(lifted[i])] = static_cast<int>(i);

  auto support_set = [&](const PointSet& s, bool& has_top) {
    PointSet out(count);
    has_top = false;
    for (int j : s.indices()) {
      if (to_support[j] < 0) {
        has_top = true;
      } else {
        out.insert(to_support[j]);
      }
    }
    return out;
  };

  IntVec up = hull.chart().base_point();
  up.back() += 1;
  auto y_up = hull.chart().coordinates(to_rat_vec(up));
  if (!y_up) raise(ErrorCode::Internal, "vertical direction outside lifted hull");

  std::vector<PointSet> lower;
  for (const auto& f : hull.facets()) {
    Rational s = 0;
    for (std::size_t i = 0; i < f.normal.size(); ++i) s += f.normal[i] * (*y_up)[i];
    if (s <= 0) continue;
    PointSet tight(hull.points().size());
    for (std::size_t i = 0; i < hull.points().size(); ++i)
      if (dot(f.normal, hull.chart_points()[i]) == f.offset) tight.insert(i);
    bool has_top = false;
    lower.push_back(support_set(tight, has_top));
  }
  if (hull.dim() == 0) raise(ErrorCode::Internal, "lifted hull is a point");

  for (const auto& face : hull.faces()) {
    bool has_top = false;
    PointSet s = support_set(face.points, has_top);
    if (has_top) continue;
    bool in_lower = std::any_of(lower.begin(), lower.end(), [&](const PointSet& l) { return s.subset_of(l); });
    if (!in_lower && face.dim >= 0) continue;
    cells_.push_back(Cell{s, {}, face.dim, -1});
  }
  std::sort(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.points < b.points;
  });

  for (auto& c : cells_) {
    for (const auto& v : cells_) {
      if (v.dim == 0 && v.points.subset_of(c.points)) c.vertices.push_back(v.points.indices().front());
    }
    std::sort(c.vertices.begin(), c.vertices.end());
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    for (std::size_t j = cells_.size(); j-- > 0;) {
      if (cells_[j].dim == base_.dim() && cells_[i].points.subset_of(cells_[j].points)) {
        cells_[i].full_cell = static_cast<int>(j);
        break;
      }
    }
    if (cells_[i].full_cell < 0) raise(ErrorCode::Internal, "cell outside every maximal cell");
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].dim != base_.dim()) continue;
    AffineFunction f = interpolate(points_, heights_, cells_[i].points.indices());
    nu_form_.emplace(static_cast<int>(i), integer_form(f));
    nu_.emplace(static_cast<int>(i), std::move(f));
  }
  for (const auto& c : cells_) {
    if (c.dim < 0) {
      cell_polytopes_.push_back(Polytope::empty(n));
      continue;
    }
    IntMatrix verts;
    for (int v : c.vertices) verts.push_back(points_[v]);
    cell_polytopes_.emplace_back(std::move(verts));
  }
}

std::vector<int> RegularSubdivision::full_cells() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].dim == base_.dim()) out.push_back(static_cast<int>(i));
  return out;
}

int RegularSubdivision::find_cell(const PointSet& points) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].points == points) return static_cast<int>(i);
  return -1;
}

int RegularSubdivision::locate(const RatVec& x) const {
  for (std::size_t i = 1; i < cells_.size(); ++i)
    if (cell_polytopes_[i].contains(x)) return static_cast<int>(i);
  raise(ErrorCode::Outside, "point lies outside the subdivided polytope");
}

Rational RegularSubdivision::nu_at(const RatVec& x) const { return nu(locate(x))(x); }

RegularSubdivision lower_hull_subdivision(const std::map<IntVec, Rational>& lifted, int expected_dim) {
  if (lifted.empty()) raise(ErrorCode::Empty, "no lifted points");
  IntMatrix pts;
  RatVec hs;
  for (const auto& [p, h] : lifted) {
    pts.push_back(p);
    hs.push_back(h);
  }
  RegularSubdivision s(std::move(pts), std::move(hs));
  if (expected_dim >= 0 && s.dim() != expected_dim)
    raise(ErrorCode::Degenerate, "the projected polytope has dimension " + std::to_string(s.dim()) +
                                     ", expected " + std::to_string(expected_dim));
  return s;
}

}  // namespace nhodge
