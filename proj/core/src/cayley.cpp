#include "nhodge/cayley.hpp"

#include "nhodge/errors.hpp"

namespace nhodge {

std::set<Integer> divisor_closure(const std::set<Integer>& orders) {
  std::set<Integer> out;
  for (const auto& m : orders) {
    if (m <= 0) raise(ErrorCode::Internal, "order must be positive");
    for (Integer d = 1; d * d <= m; ++d) {
      if (m % d != 0) continue;
      out.insert(d);
      out.insert(m / d);
    }
  }
  return out;
}

namespace {

std::map<IntVec, Rational> lift(const ValuationMap& heights) {
  std::map<IntVec, Rational> out;
  for (const auto& [v, h] : heights) out[v] = Rational(h);
  return out;
}

// Lower hull vertices of P_1 + ... + P_k are sums of lower hull vertices of the summands.
std::map<IntVec, Rational> minkowski_lift(const std::vector<Summand>& summands, int n) {
  std::map<IntVec, Rational> acc{{IntVec(n, 0), Rational(0)}};
  for (const auto& s : summands) {
    std::vector<std::pair<IntVec, Rational>> verts;
    for (const auto& c : s.lower.cells()) {
      if (c.dim != 0) continue;
      const int i = c.vertices.front();
      verts.emplace_back(s.lower.points()[i], s.lower.heights()[i]);
    }
    std::map<IntVec, Rational> next;
    for (const auto& [p, h] : acc) {
      for (const auto& [q, hq] : verts) {
        IntVec sum = add(p, q);
        Rational total = h + hq;
        auto it = next.find(sum);
        if (it == next.end() || total < it->second) next[sum] = total;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

CayleyData build_cayley_data(const CISystem& system) {
  const int k = system.k();
  const int n = system.n();
  const Ambient ambient = system.ambient();
  if (k < 1 || k > n) raise(ErrorCode::Syntax, "complete intersection needs 1 <= k <= n");

  std::vector<Summand> summands;
  std::map<IntVec, Rational> cayley_lift;
  for (int j = 0; j < k; ++j) {
    const TPolynomial& p = system.polys[j];
    if (p.ambient == Ambient::Affine)
      for (const auto& [v, c] : p.terms)
        for (const auto& x : v)
          if (x < 0) raise(ErrorCode::NegativeExponent, "affine support vector " + to_string(v));
    ValuationMap h = valuations(p);
    for (const auto& [v, o] : h) {
      IntVec pt(k, 0);
      pt[j] = 1;
      pt.insert(pt.end(), v.begin(), v.end());
      cayley_lift[pt] = Rational(o);
    }
    RegularSubdivision lower = lower_hull_subdivision(lift(h));
    summands.push_back(Summand{std::move(h), std::move(lower)});
  }

  RegularSubdivision msub = lower_hull_subdivision(minkowski_lift(summands, n));
  if (msub.dim() != n)
    raise(ErrorCode::Degenerate, "dim(P_1 + ... + P_k) = " + std::to_string(msub.dim()) + " < n = " + std::to_string(n));
  std::vector<int> morth;
  if (ambient == Ambient::Affine)
    for (int i = 0; i < n; ++i) morth.push_back(i);
  NewtonData minkowski(ambient, n, std::move(msub), std::move(morth));

  RegularSubdivision csub = lower_hull_subdivision(cayley_lift, n + k - 1);
  std::vector<int> corth;
  for (int j = 0; j < k; ++j) corth.push_back(j);
  if (ambient == Ambient::Affine)
    for (int i = 0; i < n; ++i) corth.push_back(k + i);
  NewtonData cayley(ambient, n, std::move(csub), std::move(corth));

  if (divisor_closure(minkowski.bad_orders()) != divisor_closure(cayley.bad_orders()))
    raise(ErrorCode::CayleyMismatch, "bad eigenvalue sets of the Minkowski and Cayley data differ");

  const Polytope& pt = cayley.polytope();
  std::vector<int> subset_faces(std::size_t{1} << k, -1);
  for (unsigned mask = 1; mask < (1U << k); ++mask) {
    PointSet pts(pt.points().size());
    for (std::size_t i = 0; i < pt.points().size(); ++i) {
      bool in = false;
      for (int j = 0; j < k; ++j)
        if ((mask & (1U << j)) && pt.points()[i][j] == 1) in = true;
      if (in) pts.insert(i);
    }
    subset_faces[mask] = pt.face_index(pts);
    if (subset_faces[mask] < 0) raise(ErrorCode::Internal, "Cayley subset is not a face");
  }

  return CayleyData{ambient, n, k, std::move(summands), std::move(minkowski), std::move(cayley), std::move(subset_faces)};
}

}  // namespace nhodge
