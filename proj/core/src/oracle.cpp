#include "nhodge/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "nhodge/errors.hpp"
#include "nhodge/linalg.hpp"

namespace nhodge::oracle {
namespace {

IntMatrix differences(const IntMatrix& pts, const std::vector<int>& idx) {
  IntMatrix out;
  for (std::size_t i = 1; i < idx.size(); ++i) out.push_back(sub(pts[idx[i]], pts[idx[0]]));
  return out;
}

int affine_dim(const IntMatrix& pts, const std::vector<int>& idx) {
  if (idx.empty()) return -1;
  IntMatrix d = differences(pts, idx);
  return d.empty() ? 0 : rank_of(d);
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      visit(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

IntPoly t_minus_one(int k) {
  IntPoly out = 1;
  for (int i = 0; i < k; ++i) out *= IntPoly::variable("t") - IntPoly(1);
  return out;
}

IntPoly flip(const IntPoly& p, int degree) {
  Monomial inv;
  inv.exponents["t"] = -1;
  Monomial shift;
  shift.exponents["t"] = degree;
  return p.substitute({{"t", inv}}) * IntPoly::monomial(shift);
}

}  // namespace

BrutePolytope brute_polytope(const IntMatrix& points) {
  BrutePolytope out;
  IntMatrix pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  out.points = pts;
  if (pts.empty()) return out;
  const int n = static_cast<int>(pts[0].size());
  std::vector<int> all(pts.size());
  std::iota(all.begin(), all.end(), 0);
  out.dim = affine_dim(pts, all);
  IntMatrix diffs = differences(pts, all);
  out.equations = diffs.empty() ? rational_kernel({IntVec(n, 0)}, n) : rational_kernel(diffs, n);
  if (out.dim <= 0) return out;

  std::vector<std::vector<int>> seen;
  for_each_subset(static_cast<int>(pts.size()), out.dim, [&](const std::vector<int>& s) {
    if (affine_dim(pts, s) != out.dim - 1) return;
    IntMatrix rows = differences(pts, s);
    for (const auto& e : out.equations) rows.push_back(e);
    IntMatrix normal = rows.empty() ? rational_kernel({IntVec(n, 0)}, n) : rational_kernel(rows, n);
    if (normal.size() != 1) return;
    IntVec a = normal[0];
    const Integer level = dot(a, pts[s[0]]);
    bool above = false, below = false;
    std::vector<int> on;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Integer v = dot(a, pts[i]) - level;
      if (v > 0) above = true;
      if (v < 0) below = true;
      if (v == 0) on.push_back(static_cast<int>(i));
    }
    if (above && below) return;
    if (std::find(seen.begin(), seen.end(), on) != seen.end()) return;
    seen.push_back(on);
    if (below)
      for (auto& x : a) x = -x;
    out.facets.push_back({a, dot(a, pts[s[0]])});
  });
  return out;
}

std::vector<Integer> ehrhart_series_bruteforce(const IntMatrix& points, int upto) {
  std::vector<Integer> out(upto + 1, 0);
  BrutePolytope p = brute_polytope(points);
  if (p.dim < 0) return out;
  const int n = static_cast<int>(p.points[0].size());
  IntVec lo = p.points[0], hi = p.points[0];
  for (const auto& x : p.points) {
    for (int i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], x[i]);
      hi[i] = std::max(hi[i], x[i]);
    }
  }
  for (int m = 0; m <= upto; ++m) {
    Integer volume = 1;
    for (int i = 0; i < n; ++i) volume *= (hi[i] - lo[i]) * m + 1;
    if (volume > 100000) raise(ErrorCode::TooLarge, "bounding box of the dilate is too large");
    IntVec x(n);
    for (int i = 0; i < n; ++i) x[i] = lo[i] * m;
    IntVec base = p.points[0];
    for (auto& b : base) b *= m;
    while (true) {
      bool inside = true;
      IntVec rel = sub(x, base);
      for (const auto& e : p.equations)
        if (dot(e, rel) != 0) inside = false;
      for (const auto& f : p.facets)
        if (inside && dot(f.normal, x) < f.offset * m) inside = false;
      if (inside) ++out[m];
      int i = 0;
      while (i < n && x[i] == hi[i] * m) {
        x[i] = lo[i] * m;
        ++i;
      }
      if (i == n) break;
      ++x[i];
    }
  }
  return out;
}

bool SetPosetData::leq(int a, int b) const {
  return std::includes(sets[b].begin(), sets[b].end(), sets[a].begin(), sets[a].end());
}

int SetPosetData::find(const std::vector<int>& set) const {
  auto it = std::find(sets.begin(), sets.end(), set);
  return it == sets.end() ? -1 : static_cast<int>(it - sets.begin());
}

SetPosetData brute_face_lattice(const IntMatrix& points) {
  BrutePolytope p = brute_polytope(points);
  SetPosetData out;
  out.sets.push_back({});
  out.dims.push_back(-1);
  if (p.dim < 0) return out;
  std::vector<int> all(p.points.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<int>> found{all};
  for (const auto& f : p.facets) {
    std::vector<int> on;
    for (std::size_t i = 0; i < p.points.size(); ++i)
      if (dot(f.normal, p.points[i]) == f.offset) on.push_back(static_cast<int>(i));
    found.push_back(on);
  }
  // close under intersection
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<int> meet;
      std::set_intersection(found[i].begin(), found[i].end(), found[j].begin(), found[j].end(), std::back_inserter(meet));
      if (!meet.empty() && std::find(found.begin(), found.end(), meet) == found.end()) found.push_back(meet);
    }
  }
  for (const auto& s : found) {
    out.sets.push_back(s);
    out.dims.push_back(affine_dim(p.points, s));
  }
  return out;
}

IntPoly recursion_eval_g(const SetPosetData& poset, int lo, int hi, bool dual) {
  if (!poset.leq(lo, hi)) raise(ErrorCode::Internal, "not an interval");
  const int rank = poset.dims[hi] - poset.dims[lo];
  if (rank == 0) return 1;
  const int d = rank - 1;
  // h = sum over x below the top of g(bottom, x) (t-1)^(d - rho(x)), taken in the dual order if asked
  IntPoly h;
  for (std::size_t x = 0; x < poset.sets.size(); ++x) {
    const int xi = static_cast<int>(x);
    if (!poset.leq(lo, xi) || !poset.leq(xi, hi)) continue;
    if (!dual && xi == hi) continue;
    if (dual && xi == lo) continue;
    const int rho = dual ? poset.dims[hi] - poset.dims[xi] : poset.dims[xi] - poset.dims[lo];
    IntPoly g = dual ? recursion_eval_g(poset, xi, hi, true) : recursion_eval_g(poset, lo, xi, false);
    h += g * t_minus_one(d - rho);
  }
  std::vector<Integer> hc = h.coefficients("t");
  hc.resize(rank + 1, 0);
  std::vector<Integer> gc;
  for (int i = 0; 2 * i <= d; ++i) gc.push_back(hc[i] - (i > 0 ? hc[i - 1] : Integer(0)));
  return IntPoly::univariate("t", gc);
}

BruteSubdivision brute_subdivision(const std::map<IntVec, Rational>& lifted) {
  BruteSubdivision out;
  Integer den = 1;
  for (const auto& [v, h] : lifted) den = lcm_of(den, h.get_den());
  IntMatrix up;
  for (const auto& [v, h] : lifted) {
    out.points.push_back(v);
    IntVec p = v;
    p.push_back(Rational(h * den).get_num());
    up.push_back(p);
  }
  out.faces = brute_face_lattice(out.points);
  out.cells.sets.push_back({});
  out.cells.dims.push_back(-1);

  BrutePolytope hull = brute_polytope(up);  // same point order: both sorted by the base coordinates
  const std::size_t last = up[0].size() - 1;
  std::vector<std::vector<int>> lower;
  // heights affine on the configuration: a single cell
  const bool flat = hull.dim == *std::max_element(out.faces.dims.begin(), out.faces.dims.end());
  for (const auto& f : hull.facets) {
    if (flat || f.normal[last] <= 0) continue;
    std::vector<int> on;
    for (std::size_t i = 0; i < up.size(); ++i)
      if (dot(f.normal, up[i]) == f.offset) on.push_back(static_cast<int>(i));
    lower.push_back(on);
  }
  if (lower.empty()) {
    std::vector<int> all(up.size());
    std::iota(all.begin(), all.end(), 0);
    lower.push_back(all);
  }
  for (const auto& cell : lower) {
    IntMatrix sub_pts;
    for (int i : cell) sub_pts.push_back(out.points[i]);
    SetPosetData local = brute_face_lattice(sub_pts);
    for (std::size_t j = 1; j < local.sets.size(); ++j) {
      std::vector<int> global;
      for (int i : local.sets[j]) global.push_back(cell[i]);
      std::sort(global.begin(), global.end());
      if (out.cells.find(global) >= 0) continue;
      out.cells.sets.push_back(global);
      out.cells.dims.push_back(local.dims[j]);
    }
  }
  return out;
}

IntPoly recursion_eval_local_h(const BruteSubdivision& s, int face, int cell) {
  const auto& F = s.cells.sets[cell];
  auto inside = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  // smallest face of P containing the cell
  int carrier = -1;
  for (std::size_t q = 0; q < s.faces.sets.size(); ++q)
    if (inside(F, s.faces.sets[q]) && (carrier < 0 || s.faces.dims[q] < s.faces.dims[carrier])) carrier = static_cast<int>(q);
  const int dim_top = s.faces.dims[face];
  IntPoly out;
  for (std::size_t q = 0; q < s.faces.sets.size(); ++q) {
    const int qi = static_cast<int>(q);
    if (!s.faces.leq(carrier, qi) || !s.faces.leq(qi, face)) continue;
    const int dq = s.faces.dims[qi];
    IntPoly sum;
    for (std::size_t c = 0; c < s.cells.sets.size(); ++c) {
      const int ci = static_cast<int>(c);
      if (!inside(s.cells.sets[ci], s.faces.sets[qi]) || !s.cells.leq(cell, ci)) continue;
      sum += recursion_eval_g(s.cells, cell, ci) * t_minus_one(dq - s.cells.dims[ci]);
    }
    IntPoly link = flip(sum, dq - s.cells.dims[cell]);
    IntPoly term = link * recursion_eval_g(s.faces, qi, face, true);
    if ((dim_top - dq) % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

Integer N1Monodromy::points() const {
  Integer total = 0;
  for (const auto& c : cycles) total += c.length * c.count;
  return total;
}

N1Monodromy monodromy_n1(const TPolynomial& p) {
  if (p.n != 1) raise(ErrorCode::UnsupportedDim, "root tracking needs n = 1");
  // lowest t-order of each coefficient
  std::vector<std::pair<Integer, Integer>> lift;
  for (const auto& [v, c] : p.terms) {
    if (c.empty()) continue;
    lift.emplace_back(v[0], Integer(c.begin()->first));
  }
  if (lift.empty()) raise(ErrorCode::Empty, "empty support");
  std::sort(lift.begin(), lift.end());

  // lower convex chain, monotone in the exponent
  std::vector<std::pair<Integer, Integer>> chain;
  for (const auto& pt : lift) {
    while (chain.size() >= 2) {
      const auto& a = chain[chain.size() - 2];
      const auto& b = chain.back();
      Integer cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
      if (cross > 0) break;
      chain.pop_back();
    }
    chain.push_back(pt);
  }

  N1Monodromy out;
  std::map<Integer, Integer> by_length;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Integer dx = chain[i].first - chain[i - 1].first;
    const Integer dh = chain[i].second - chain[i - 1].second;
    Integer g = gcd(dx, Integer(abs(dh)));
    // dx roots with valuation -dh/dx: gcd(dx, dh) orbits of length dx / gcd
    by_length[dx / g] += g;
  }
  if (p.ambient == Ambient::Affine && chain.front().first > 0) by_length[1] += 1;  // x = 0 is a fixed point
  for (const auto& [len, count] : by_length) {
    out.cycles.push_back({len, count});
    for (const auto& root : roots_dividing(len)) out.eigenvalues[root] += count;
  }
  return out;
}

}  // namespace nhodge::oracle
