#include "nhodge/volume.hpp"

#include <map>

#include "nhodge/errors.hpp"
#include "nhodge/linalg.hpp"

namespace nhodge {
namespace {

using Triangulation = std::vector<std::vector<int>>;

Triangulation triangulate_face(const Polytope& p, int face, std::map<int, Triangulation>& memo) {
  if (auto it = memo.find(face); it != memo.end()) return it->second;
  const Face& g = p.faces()[face];
  Triangulation out;
  if (g.dim == 0) {
    out.push_back({g.points.indices().front()});
  } else {
    int apex = -1;
    for (int i : g.points.indices()) {
      // The lowest-index vertex of the face.
      for (const auto& f : p.faces()) {
        if (f.dim == 0 && f.points.contains(i)) {
          apex = i;
          break;
        }
      }
      if (apex >= 0) break;
    }
    for (std::size_t h = 0; h < p.faces().size(); ++h) {
      const Face& sub = p.faces()[h];
      if (sub.dim != g.dim - 1 || !sub.points.subset_of(g.points) || sub.points.contains(apex)) continue;
      for (auto simplex : triangulate_face(p, static_cast<int>(h), memo)) {
        simplex.push_back(apex);
        out.push_back(std::move(simplex));
      }
    }
  }
  memo.emplace(face, out);
  return out;
}

}  // namespace

std::vector<std::vector<int>> pulling_triangulation(const Polytope& p) {
  if (p.is_empty()) raise(ErrorCode::EmptyCell, "triangulation of the empty polytope");
  std::map<int, Triangulation> memo;
  return triangulate_face(p, static_cast<int>(p.faces().size()) - 1, memo);
}

Integer normalized_volume(const Polytope& p) {
  if (p.is_empty()) raise(ErrorCode::EmptyCell, "volume of the empty polytope");
  if (p.denominator() != 1) raise(ErrorCode::Internal, "volume of a non-lattice polytope");
  const int d = p.dim();
  if (d == 0) return 1;
  Integer total = 0;
  for (const auto& simplex : pulling_triangulation(p)) {
    IntMatrix m;
    const IntVec& origin = p.chart_points()[simplex.back()];
    for (int i = 0; i < d; ++i) m.push_back(sub(p.chart_points()[simplex[i]], origin));
    total += abs(determinant(std::move(m)));
  }
  return total;
}

Polytope minkowski_sum(const std::vector<Polytope>& polys) {
  if (polys.empty()) raise(ErrorCode::Internal, "Minkowski sum of nothing");
  IntMatrix acc = polys.front().vertices();
  for (std::size_t i = 1; i < polys.size(); ++i) {
    if (polys[i].ambient_dim() != polys.front().ambient_dim()) raise(ErrorCode::DimMismatch, "Minkowski summands differ in ambient dimension");
    IntMatrix next;
    for (const auto& a : acc)
      for (const auto& b : polys[i].vertices()) next.push_back(add(a, b));
    acc = Polytope(std::move(next)).vertices();
  }
  return Polytope(std::move(acc));
}

Integer mixed_volume(const std::vector<Polytope>& polys) {
  const int d = static_cast<int>(polys.size());
  if (d == 0) raise(ErrorCode::DimMismatch, "mixed volume of no polytopes");
  for (const auto& p : polys) {
    if (p.ambient_dim() != d) raise(ErrorCode::DimMismatch, "mixed volume needs d polytopes in Z^d");
    if (p.is_empty()) raise(ErrorCode::DimMismatch, "mixed volume of an empty polytope");
  }
  Integer total = 0;
  for (unsigned mask = 1; mask < (1U << d); ++mask) {
    std::vector<Polytope> chosen;
    for (int i = 0; i < d; ++i)
      if (mask & (1U << i)) chosen.push_back(polys[i]);
    Polytope s = minkowski_sum(chosen);
    if (s.dim() < d) continue;
    Integer v = normalized_volume(s);
    const int sign = ((d - static_cast<int>(chosen.size())) % 2 == 0) ? 1 : -1;
    total += sign * v;
  }
  Integer fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  if (total % fact != 0) raise(ErrorCode::Internal, "mixed volume sum not divisible by d!");
  return total / fact;
}

Polytope cayley_polytope(const std::vector<Polytope>& polys, const std::vector<int>& subset) {
  if (subset.empty()) raise(ErrorCode::Internal, "Cayley polytope of an empty subset");
  const int k = static_cast<int>(subset.size());
  IntMatrix pts;
  for (int j = 0; j < k; ++j) {
    for (const auto& v : polys.at(subset[j]).vertices()) {
      IntVec p(k, 0);
      p[j] = 1;
      p.insert(p.end(), v.begin(), v.end());
      pts.push_back(std::move(p));
    }
  }
  return Polytope(std::move(pts));
}

std::vector<Polytope> to_common_lattice(const std::vector<Polytope>& polys, const IntMatrix& lattice_basis) {
  if (polys.empty()) return {};
  const int n = polys.front().ambient_dim();
  LatticeChart chart(AffineLatticeBasis{IntVec(n, 0), lattice_basis});
  std::vector<Polytope> out;
  for (const auto& p : polys) {
    IntMatrix verts = p.vertices();
    IntVec shift = verts.front();
    IntMatrix mapped;
    for (const auto& v : verts) {
      auto y = chart.lattice_coordinates(sub(v, shift));
      if (!y) raise(ErrorCode::DimMismatch, "polytope does not lie in the common lattice");
      mapped.push_back(std::move(*y));
    }
    out.emplace_back(std::move(mapped));
  }
  return out;
}

}  // namespace nhodge
