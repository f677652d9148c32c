#include "nhodge/polytope.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_set>

#include "nhodge/errors.hpp"

namespace nhodge {
namespace {

struct Ray {
  IntVec z;         // (-offset, normal) in homogenized chart coordinates
  PointSet tight;   // processed points with z . (1, y) == 0
};

Integer eval_ray(const IntVec& z, const IntVec& y) {
  Integer s = z[0];
  for (std::size_t i = 0; i < y.size(); ++i) s += z[i + 1] * y[i];
  return s;
}

// Double description over the homogenized cone spanned by (1, y_i).
std::vector<Inequality> facet_inequalities(const IntMatrix& ys, int d) {
  const std::size_t count = ys.size();
  std::vector<Inequality> out;
  if (d <= 0) return out;

  // Greedy affinely independent start.
  std::vector<int> start;
  RatMatrix rows;
  for (std::size_t i = 0; i < count && static_cast<int>(start.size()) < d + 1; ++i) {
    RatVec r(d + 1);
    r[0] = 1;
    for (int j = 0; j < d; ++j) r[j + 1] = ys[i][j];
    rows.push_back(r);
    if (rank_of(rows) == static_cast<int>(rows.size())) {
      start.push_back(static_cast<int>(i));
    } else {
      rows.pop_back();
    }
  }
  if (static_cast<int>(start.size()) != d + 1) raise(ErrorCode::Internal, "hull start is not a simplex");

  // Rays of the initial simplicial cone: columns of the inverse.
  RatMatrix aug(d + 1, RatVec(2 * (d + 1), 0));
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) aug[i][j] = rows[i][j];
    aug[i][d + 1 + i] = 1;
  }
  // Gauss-Jordan.
  for (int c = 0; c <= d; ++c) {
    int p = c;
    while (aug[p][c] == 0) ++p;
    std::swap(aug[p], aug[c]);
    Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (int i = 0; i <= d; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (int j = 0; j < 2 * (d + 1); ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  std::vector<Ray> rays;
  for (int j = 0; j <= d; ++j) {
    RatVec col(d + 1);
    for (int i = 0; i <= d; ++i) col[i] = aug[i][d + 1 + j];
    Ray r{primitive_direction(col), PointSet(count)};
    for (int i = 0; i <= d; ++i)
      if (i != j) r.tight.insert(start[i]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> used(count, false);
  for (int s : start) used[s] = true;
  for (std::size_t p = 0; p < count; ++p) {
    if (used[p]) continue;
    std::vector<Integer> val(rays.size());
    std::vector<int> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = eval_ray(rays[r].z, ys[p]);
      if (val[r] > 0) pos.push_back(static_cast<int>(r));
      if (val[r] < 0) neg.push_back(static_cast<int>(r));
    }
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] < 0) continue;
      Ray kept = rays[r];
      if (val[r] == 0) kept.tight.insert(p);
      next.push_back(std::move(kept));
    }
    for (int a : pos) {
      for (int b : neg) {
        PointSet common = rays[a].tight & rays[b].tight;
        if (static_cast<int>(common.count()) < d - 1) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (static_cast<int>(r) == a || static_cast<int>(r) == b) continue;
          if (common.subset_of(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec z(d + 1);
        for (int i = 0; i <= d; ++i) z[i] = val[a] * rays[b].z[i] - val[b] * rays[a].z[i];
        common.insert(p);
        next.push_back(Ray{primitive(std::move(z)), std::move(common)});
      }
    }
    rays = std::move(next);
    used[p] = true;
  }

  for (auto& r : rays) {
    Inequality ineq;
    ineq.offset = -r.z[0];
    ineq.normal.assign(r.z.begin() + 1, r.z.end());
    out.push_back(std::move(ineq));
  }
  return out;
}

int affine_rank(const IntMatrix& ys, const std::vector<int>& idx) {
  if (idx.empty()) return -1;
  IntMatrix diffs;
  for (std::size_t i = 1; i < idx.size(); ++i) diffs.push_back(sub(ys[idx[i]], ys[idx[0]]));
  if (diffs.empty()) return 0;
  return rank_of(diffs);
}

}  // namespace

Polytope Polytope::empty(int ambient_dim) {
  Polytope p;
  p.ambient_dim_ = ambient_dim;
  p.faces_.push_back(Face{PointSet(0), -1});
  return p;
}

Polytope::Polytope(IntMatrix points) : points_(std::move(points)) {
  if (points_.empty()) {
    faces_.push_back(Face{PointSet(0), -1});
    return;
  }
  ambient_dim_ = static_cast<int>(points_.front().size());
  for (const auto& p : points_)
    if (static_cast<int>(p.size()) != ambient_dim_) raise(ErrorCode::DimMismatch, "points of mixed length");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  build();
}

Polytope Polytope::from_rational(const std::vector<RatVec>& points) {
  Integer den = 1;
  for (const auto& p : points)
    for (const auto& x : p) den = lcm_of(den, x.get_den());
  IntMatrix scaled;
  for (const auto& p : points) {
    IntVec s(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i].get_num() * (den / p[i].get_den());
    scaled.push_back(std::move(s));
  }
  Polytope out(std::move(scaled));
  out.denominator_ = den;
  return out;
}

void Polytope::build() {
  chart_ = LatticeChart(affine_lattice_basis(points_));
  dim_ = chart_.dim();
  chart_points_.clear();
  for (const auto& p : points_) {
    auto y = chart_.lattice_coordinates(p);
    if (!y) raise(ErrorCode::Internal, "point off its own affine lattice");
    chart_points_.push_back(std::move(*y));
  }
  facets_ = facet_inequalities(chart_points_, dim_);

  const std::size_t count = points_.size();
  std::vector<PointSet> facet_sets;
  for (const auto& f : facets_) {
    PointSet s(count);
    for (std::size_t i = 0; i < count; ++i)
      if (dot(f.normal, chart_points_[i]) == f.offset) s.insert(i);
    facet_sets.push_back(std::move(s));
  }

  std::unordered_set<PointSet, PointSetHash> seen;
  std::vector<PointSet> all;
  auto add_face = [&](PointSet s) {
    if (seen.insert(s).second) all.push_back(std::move(s));
  };
  add_face(PointSet::full(count));
  add_face(PointSet(count));
  for (const auto& f : facet_sets) {
    const std::size_t existing = all.size();
    add_face(f);
    for (std::size_t i = 0; i < existing; ++i) add_face(all[i] & f);
  }

  faces_.clear();
  for (auto& s : all) faces_.push_back(Face{s, affine_rank(chart_points_, s.indices())});
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.points < b.points;
  });
}

std::vector<int> Polytope::vertex_indices() const {
  std::vector<int> out;
  for (const auto& f : faces_)
    if (f.dim == 0) out.push_back(f.points.indices().front());
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix Polytope::vertices() const {
  IntMatrix out;
  for (int i : vertex_indices()) out.push_back(points_[i]);
  return out;
}

std::vector<RatVec> Polytope::rational_vertices() const {
  std::vector<RatVec> out;
  for (int i : vertex_indices()) {
    RatVec v(ambient_dim_);
    for (int j = 0; j < ambient_dim_; ++j) v[j] = make_rational(points_[i][j], denominator_);
    out.push_back(std::move(v));
  }
  return out;
}

int Polytope::index_of_point(const IntVec& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return -1;
  return static_cast<int>(it - points_.begin());
}

int Polytope::face_index(const PointSet& points) const {
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].points == points) return static_cast<int>(i);
  return -1;
}

int Polytope::smallest_face_containing(const PointSet& points) const {
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (points.subset_of(faces_[i].points)) return static_cast<int>(i);
  return -1;
}

bool Polytope::contains(const RatVec& x) const {
  if (is_empty()) return false;
  RatVec scaled(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = x[i] * denominator_;
  auto y = chart_.coordinates(scaled);
  if (!y) return false;
  for (const auto& f : facets_) {
    Rational s = 0;
    for (std::size_t i = 0; i < f.normal.size(); ++i) s += f.normal[i] * (*y)[i];
    if (s < f.offset) return false;
  }
  return true;
}

bool Polytope::contains_dilate(const IntVec& x, long m) const {
  if (is_empty()) return false;
  auto y = chart_.coordinates(to_rat_vec(x), Integer(m));
  if (!y) return false;
  for (const auto& f : facets_) {
    Rational s = 0;
    for (std::size_t i = 0; i < f.normal.size(); ++i) s += f.normal[i] * (*y)[i];
    if (s < f.offset * m) return false;
  }
  return true;
}

void Polytope::for_each_lattice_point(long m, const std::function<void(const std::vector<std::int64_t>&)>& visit) const {
  if (is_empty()) return;
  if (denominator_ != 1) raise(ErrorCode::Internal, "lattice points of a non-lattice polytope");
  const int d = dim_;
  const int n = ambient_dim_;
  constexpr long kLimit = 1L << 40;
  auto small = [&](const Integer& v) { return abs(v) < kLimit; };

  std::vector<long> lo(d, std::numeric_limits<long>::max()), hi(d, std::numeric_limits<long>::min());
  for (const auto& y : chart_points_) {
    for (int i = 0; i < d; ++i) {
      if (!small(y[i] * m)) raise(ErrorCode::TooLarge, "dilate too large for enumeration");
      lo[i] = std::min(lo[i], y[i].get_si() * m);
      hi[i] = std::max(hi[i], y[i].get_si() * m);
    }
  }
  std::vector<std::vector<long>> normals;
  std::vector<long> offsets;
  for (const auto& f : facets_) {
    std::vector<long> a(d);
    for (int i = 0; i < d; ++i) {
      if (!small(f.normal[i])) raise(ErrorCode::TooLarge, "facet normal too large");
      a[i] = f.normal[i].get_si();
    }
    if (!small(f.offset * m)) raise(ErrorCode::TooLarge, "facet offset too large");
    normals.push_back(std::move(a));
    offsets.push_back(f.offset.get_si() * m);
  }
  std::vector<long> base(n);
  std::vector<std::vector<long>> basis(d, std::vector<long>(n));
  for (int i = 0; i < n; ++i) {
    if (!small(chart_.base_point()[i] * m)) raise(ErrorCode::TooLarge, "base point too large");
    base[i] = chart_.base_point()[i].get_si() * m;
    for (int j = 0; j < d; ++j) {
      if (!small(chart_.basis()[j][i])) raise(ErrorCode::TooLarge, "lattice basis too large");
      basis[j][i] = chart_.basis()[j][i].get_si();
    }
  }

  std::vector<long> y(lo);
  std::vector<std::int64_t> x(n);
  if (d == 0) {
    for (int i = 0; i < n; ++i) x[i] = base[i];
    visit(x);
    return;
  }
  while (true) {
    bool inside = true;
    for (std::size_t f = 0; f < normals.size() && inside; ++f) {
      __int128 s = 0;
      for (int i = 0; i < d; ++i) s += static_cast<__int128>(normals[f][i]) * y[i];
      if (s < offsets[f]) inside = false;
    }
    if (inside) {
      for (int i = 0; i < n; ++i) {
        __int128 s = base[i];
        for (int j = 0; j < d; ++j) s += static_cast<__int128>(basis[j][i]) * y[j];
        x[i] = static_cast<std::int64_t>(s);
      }
      visit(x);
    }
    int k = 0;
    while (k < d && y[k] == hi[k]) {
      y[k] = lo[k];
      ++k;
    }
    if (k == d) break;
    ++y[k];
  }
}

std::vector<DilateInequality> Polytope::dilate_inequalities() const {
  std::vector<DilateInequality> out;
  if (is_empty()) return out;
  const RatMatrix M = chart_.coordinate_matrix();
  for (const auto& f : facets_) {
    // normal . M (x - m*base) >= m*offset
    RatVec row(ambient_dim_, 0);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < ambient_dim_; ++j) row[j] += f.normal[i] * M[i][j];
    Rational c = -Rational(f.offset);
    for (int j = 0; j < ambient_dim_; ++j) c -= row[j] * chart_.base_point()[j];
    row.push_back(c);
    IntVec scaled = primitive_direction(row);
    DilateInequality ineq;
    for (const auto& v : scaled) {
      if (!fits_int64(v) || abs(v) > (Integer(1) << 40)) raise(ErrorCode::TooLarge, "facet coefficients too large");
    }
    for (int j = 0; j < ambient_dim_; ++j) ineq.a.push_back(scaled[j].get_si());
    ineq.c = scaled.back().get_si();
    out.push_back(std::move(ineq));
  }
  return out;
}

IntMatrix Polytope::lattice_points(long m) const {
  IntMatrix out;
  for_each_lattice_point(m, [&](const std::vector<std::int64_t>& x) {
    IntVec v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = static_cast<long>(x[i]);
    out.push_back(std::move(v));
  });
  std::sort(out.begin(), out.end());
  return out;
}

Integer Polytope::lattice_point_count(long m) const {
  Integer c = 0;
  for_each_lattice_point(m, [&](const std::vector<std::int64_t>&) { ++c; });
  return c;
}

Polytope convex_hull(const std::vector<RatVec>& points) {
  if (points.empty()) raise(ErrorCode::Internal, "convex_hull of no points");
  return Polytope::from_rational(points);
}

bool is_eulerian(const Polytope& p) {
  const auto& faces = p.faces();
  for (std::size_t a = 0; a < faces.size(); ++a) {
    for (std::size_t b = 0; b < faces.size(); ++b) {
      if (a == b || !faces[a].points.subset_of(faces[b].points) || faces[a].dim >= faces[b].dim) continue;
      long sum = 0;
      for (const auto& g : faces) {
        if (faces[a].points.subset_of(g.points) && g.points.subset_of(faces[b].points)) sum += (g.dim % 2 == 0) ? 1 : -1;
      }
      if (sum != 0) return false;
    }
  }
  return true;
}

}  // namespace nhodge
