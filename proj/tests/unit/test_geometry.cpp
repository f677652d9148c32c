#include <algorithm>
#include <random>

#include "doctest.h"
#include "nhodge/errors.hpp"
#include "nhodge/polytope.hpp"
#include "nhodge/subdivision.hpp"
#include "nhodge/volume.hpp"

using namespace nhodge;

namespace {

IntVec iv(std::initializer_list<long> xs) { return to_int_vec(std::vector<long>(xs)); }
RatVec rv(std::initializer_list<long> xs) { return to_rat_vec(iv(xs)); }

Polytope poly(std::initializer_list<std::initializer_list<long>> pts) {
  IntMatrix m;
  for (auto p : pts) m.push_back(iv(p));
  return Polytope(m);
}

std::map<IntVec, Rational> lift(std::initializer_list<std::pair<long, long>> hs) {
  std::map<IntVec, Rational> out;
  for (auto [x, h] : hs) out[iv({x})] = h;
  return out;
}

int count_dim(const Polytope& p, int d) {
  return static_cast<int>(std::count_if(p.faces().begin(), p.faces().end(), [d](const Face& f) { return f.dim == d; }));
}

IntMatrix random_points(std::mt19937_64& rng, int n, int count, long lo, long hi) {
  std::uniform_int_distribution<long> c(lo, hi);
  IntMatrix pts;
  for (int i = 0; i < count; ++i) {
    IntVec p(n);
    for (auto& x : p) x = c(rng);
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("face lattices of small polytopes") {
  Polytope seg = convex_hull({rv({0}), rv({3})});
  CHECK(seg.dim() == 1);
  CHECK(seg.faces().size() == 4);

  Polytope sq = poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(sq.faces().size() == 10);
  CHECK(count_dim(sq, 0) == 4);
  CHECK(count_dim(sq, 1) == 4);
  CHECK(sq.faces().front().dim == -1);
  CHECK(sq.faces().back().dim == 2);

  Polytope pt = poly({{2, 5}});
  CHECK(pt.dim() == 0);
  CHECK(pt.faces().size() == 2);

  Polytope cube = poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  CHECK(count_dim(cube, 0) == 8);
  CHECK(count_dim(cube, 1) == 12);
  CHECK(count_dim(cube, 2) == 6);
  CHECK(is_eulerian(cube));
}

TEST_CASE("non-vertex points and rational hulls") {
  Polytope tri = poly({{0, 0}, {2, 0}, {0, 2}, {1, 0}, {1, 1}, {0, 1}, {1, 1}});
  CHECK(tri.vertices().size() == 3);
  CHECK(tri.points().size() == 6);
  CHECK(count_dim(tri, 1) == 3);
  Polytope half = convex_hull({RatVec{make_rational(1, 2)}, RatVec{2}});
  CHECK(half.dim() == 1);
  auto verts = half.rational_vertices();
  REQUIRE(verts.size() == 2);
  CHECK(verts[0][0] == make_rational(1, 2));
  CHECK(half.contains(RatVec{1}));
  CHECK_FALSE(half.contains(RatVec{make_rational(1, 4)}));
}

TEST_CASE("random face lattices are Eulerian") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 3;
    Polytope p(random_points(rng, n, 3 + trial % 7, -2, 2));
    CHECK(is_eulerian(p));
    // Faces are cut out exactly: every face's points are the points tight on it.
    for (const auto& f : p.facets()) {
      int tight = 0;
      for (const auto& y : p.chart_points()) {
        Integer v = dot(f.normal, y);
        CHECK(v >= f.offset);
        if (v == f.offset) ++tight;
      }
      CHECK(tight >= p.dim());
    }
  }
}

TEST_CASE("lattice points") {
  Polytope seg = poly({{0}, {3}});
  CHECK(seg.lattice_points(2).size() == 7);
  CHECK(seg.lattice_points(0) == IntMatrix{iv({0})});
  CHECK(Polytope::empty(2).lattice_points(3).empty());
  CHECK(poly({{0, 0}, {1, 0}, {0, 1}}).lattice_points(1).size() == 3);
  CHECK(poly({{0, 0}, {1, 0}, {0, 1}}).lattice_point_count(3) == 10);
  // A lower-dimensional polytope in a skew lattice.
  Polytope diag = poly({{0, 0, 0}, {2, 2, 4}});
  CHECK(diag.lattice_point_count(1) == 3);
  CHECK(diag.contains_dilate(iv({2, 2, 4}), 2));
  CHECK_FALSE(diag.contains_dilate(iv({1, 2, 3}), 2));
}

TEST_CASE("lower hull subdivision examples") {
  auto one = lower_hull_subdivision(lift({{0, 0}, {3, 1}}));
  REQUIRE(one.full_cells().size() == 1);
  CHECK(one.cell_count() == 4);
  int full = one.full_cells().front();
  CHECK(one.nu(full).gradient == RatVec{make_rational(1, 3)});
  CHECK(one.nu(full).constant == 0);

  auto flat = lower_hull_subdivision(lift({{0, 0}, {1, 0}, {2, 0}}));
  CHECK(flat.full_cells().size() == 1);
  CHECK(flat.cell_count() == 4);
  CHECK(flat.cell(flat.full_cells().front()).points.count() == 3);
  CHECK(flat.nu_at(RatVec{1}) == 0);

  auto kink = lower_hull_subdivision(lift({{0, 0}, {1, -1}, {2, 0}}));
  CHECK(kink.full_cells().size() == 2);
  CHECK(kink.cell_count() == 6);
  CHECK(kink.nu_at(RatVec{1}) == -1);
  CHECK(kink.nu_at(RatVec{make_rational(1, 2)}) == make_rational(-1, 2));
  CHECK(kink.nu_at(RatVec{make_rational(3, 2)}) == make_rational(-1, 2));

  // Points above the lower hull are not in any cell.
  auto above = lower_hull_subdivision(lift({{0, 0}, {1, 5}, {2, 0}}));
  CHECK(above.cell_count() == 4);
  CHECK_FALSE(above.cell(above.full_cells().front()).points.contains(1));
}

TEST_CASE("locate_cell") {
  auto kink = lower_hull_subdivision(lift({{0, 0}, {1, -1}, {2, 0}}));
  int c = kink.locate(RatVec{make_rational(1, 2)});
  CHECK(kink.cell(c).dim == 1);
  CHECK(kink.cell(c).vertices == std::vector<int>{0, 1});
  int v = kink.locate(RatVec{1});
  CHECK(kink.cell(v).dim == 0);
  CHECK(kink.cell(v).vertices == std::vector<int>{1});
  CHECK_THROWS_AS(kink.locate(RatVec{5}), Error);
}

TEST_CASE("degenerate lifts are rejected when a dimension is demanded") {
  std::map<IntVec, Rational> line = {{iv({0, 0}), 0}, {iv({1, 1}), 1}};
  CHECK_THROWS_AS(lower_hull_subdivision(line, 2), Error);
  CHECK(lower_hull_subdivision(line).dim() == 1);
}

TEST_CASE("subdivision invariants on random lifts") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> h(0, 5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 3;
    std::map<IntVec, Rational> lifted;
    for (const auto& p : random_points(rng, n, 4 + trial % 8, 0, 3)) lifted[p] = h(rng);
    auto s = lower_hull_subdivision(lifted);
    for (int i = 1; i < s.cell_count(); ++i) {
      const Cell& c = s.cell(i);
      // nu is integral on vertices and agrees with the heights of points on the cell.
      for (int p : c.points.indices()) {
        Rational val = s.nu(i)(s.points()[p]);
        CHECK(val == s.heights()[p]);
      }
      for (int f : s.full_cells()) {
        if (!s.is_face_of(i, f)) continue;
        for (int v : c.vertices) CHECK(s.nu(f)(s.points()[v]) == s.heights()[v]);
      }
    }
    // Maximal cells cover the polytope: volumes add up.
    Integer total = 0;
    for (int f : s.full_cells()) total += normalized_volume(s.cell_polytope(f));
    CHECK(total == normalized_volume(s.base()));
    // Heights are never below nu.
    for (std::size_t p = 0; p < s.points().size(); ++p) CHECK(s.heights()[p] >= s.nu_at(to_rat_vec(s.points()[p])));
  }
}

TEST_CASE("normalized volume") {
  CHECK(normalized_volume(poly({{0, 0}, {3, 1}})) == 1);
  CHECK(normalized_volume(poly({{0}, {3}})) == 3);
  CHECK(normalized_volume(poly({{0, 0}, {1, 0}, {0, 1}})) == 1);
  CHECK(normalized_volume(poly({{0, 0}, {2, 0}, {0, 2}})) == 4);
  CHECK(normalized_volume(poly({{4, 4}})) == 1);
  CHECK(normalized_volume(poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})) == 6);
  CHECK_THROWS_AS(normalized_volume(Polytope::empty(2)), Error);
}

TEST_CASE("normalized volume is invariant under unimodular maps and translations") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> c(-2, 2);
  IntMatrix shear = {iv({1, 2, 0}), iv({0, 1, -1}), iv({1, 2, 1})};  // det 1
  REQUIRE(abs(determinant(shear)) == 1);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix pts = random_points(rng, 3, 4 + trial % 5, 0, 2);
    Polytope p(pts);
    IntVec shift = iv({c(rng), c(rng), c(rng)});
    IntMatrix mapped;
    for (const auto& x : pts) {
      IntVec y(3, 0);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) y[i] += shear[i][j] * x[j];
      mapped.push_back(add(y, shift));
    }
    CHECK(normalized_volume(p) == normalized_volume(Polytope(mapped)));
  }
}

TEST_CASE("mixed volume") {
  Polytope e1 = poly({{0, 0}, {1, 0}});
  Polytope e2 = poly({{0, 0}, {0, 1}});
  CHECK(mixed_volume({e1, e2}) == 1);
  Polytope sq = poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(mixed_volume({sq, sq}) == 2);
  Polytope simplex = poly({{0, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(mixed_volume({simplex, simplex, simplex}) == normalized_volume(simplex));
  CHECK(mixed_volume({e1, e1}) == 0);
  CHECK_THROWS_AS(mixed_volume({e1}), Error);
}

TEST_CASE("Minkowski sums and Cayley polytopes") {
  Polytope s = minkowski_sum({poly({{0}, {1}}), poly({{0}, {2}})});
  CHECK(s.vertices() == IntMatrix{iv({0}), iv({3})});

  Polytope c1 = cayley_polytope({poly({{0}, {1}})}, {0});
  CHECK(c1.dim() == 1);
  CHECK(c1.vertices() == IntMatrix{iv({1, 0}), iv({1, 1})});

  Polytope c2 = cayley_polytope({poly({{0}, {1}}), poly({{0}, {1}})}, {0, 1});
  CHECK(c2.dim() == 2);
  CHECK(c2.vertices() == IntMatrix{iv({0, 1, 0}), iv({0, 1, 1}), iv({1, 0, 0}), iv({1, 0, 1})});
}

}  // TEST_SUITE
