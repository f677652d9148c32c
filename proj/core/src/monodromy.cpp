#include "nhodge/monodromy.hpp"

#include <algorithm>

#include "nhodge/errors.hpp"
#include "nhodge/volume.hpp"

namespace nhodge {
namespace {

Monomial mono(std::initializer_list<std::pair<const char*, int>> exps) {
  Monomial m;
  for (auto [v, e] : exps) m.exponents[v] = e;
  return m;
}

IntPoly uvw2() { return IntPoly::monomial(mono({{"u", 1}, {"v", 1}, {"w", 2}})); }

IntPoly sign(int e) { return (e % 2 == 0) ? IntPoly(1) : IntPoly(-1); }

// p / (u v w^a)^k with exactness checked
IntPoly divide(const IntPoly& p, int k, int w_power, const std::string& context) {
  IntPoly q = p * IntPoly::monomial(mono({{"u", -k}, {"v", -k}, {"w", -k * w_power}}));
  q.require_polynomial(context);
  return q;
}

HodgeResult finish(const RootOfUnity& lambda, IntPoly e_uvw, int center, bool concentrated) {
  HodgeResult h;
  h.lambda = lambda;
  h.e_uvw = std::move(e_uvw);
  h.e_uv = h.e_uvw.evaluate("w", 1);
  h.e_diag = sign(center) * h.e_uv.substitute({{"u", mono({{"s", 1}})}, {"v", mono({{"s", 1}})}});
  h.center = center;
  h.concentrated = concentrated;
  return h;
}

IntPoly concentrated_core(const KSEngine& ks, const RootOfUnity& lambda, int k) {
  const NewtonData& nd = ks.data();
  if (nd.is_bad(lambda)) raise(ErrorCode::BadLambda, "eigenvalue " + lambda.to_string() + " lies in R_f");
  const int center = nd.n() - k;
  IntPoly l = ks.lstar_uv(ks.top_face(), lambda);
  IntPoly e = sign(center) * IntPoly::monomial(mono({{"w", center}})) * l;
  return divide(e, k, 0, "concentrated E");
}

JordanTable formula_core(const KSEngine& ks, const RootOfUnity& lambda, int k) {
  const NewtonData& nd = ks.data();
  if (nd.is_bad(lambda)) raise(ErrorCode::BadLambda, "eigenvalue " + lambda.to_string() + " lies in R_f");
  const int top = ks.top_face();
  const int dimp = ks.faces().dim(top);
  const int center = nd.n() - k;
  IntPoly rhs;
  Integer special = 0;
  for (int c : ks.cells_in_face(top)) {
    const Integer l = ks.lstar_u_cell(c, lambda).evaluate("u", 1).sum_of_coefficients();
    if (l == 0) continue;
    const int d = ks.cells().dim(c);
    IntPoly lt = ltilde(ks.local_h(top, c), dimp - d);
    if (d == 1) special += l * lt.coeff("t", 0);
    rhs += IntPoly(l) * IntPoly::monomial(mono({{"s", d + 1}})) * in_variable(lt, "t", mono({{"s", 2}}));
  }
  JordanTable table;
  table.lambda = lambda;
  table.route = JordanRoute::ViaFormula;
  table.blocks.assign(center + 1, 0);
  const IntPoly in_s = rhs.with_variables({"s"});
  for (const auto& [e, c] : in_s.terms()) {
    const int m = e[0] - 2 * k;
    if (m < 0 || m > center)
      raise(ErrorCode::Inconsistent, "Jordan formula has a term s^" + std::to_string(e[0]) + " outside the allowed range");
    table.blocks[center - m] = c;  // J_{center+1-m}
  }
  for (const auto& b : table.blocks)
    if (b < 0) raise(ErrorCode::Inconsistent, "negative Jordan block count");
  if (k == 1 && special != table.block(nd.n()))
    raise(ErrorCode::Inconsistent, "special value of J for the largest block disagrees");
  return table;
}

void require_agreement(const JordanTable& a, const JordanTable& b) {
  if (!(a == b)) raise(ErrorCode::Inconsistent, "Jordan tables from E and from the local formula differ");
}

void normalize(MultiplicityFactorization& mf) {
  std::map<Integer, Integer> merged;
  for (const auto& f : mf.factors)
    if (f.order != 1) merged[f.order] += f.exponent;
  mf.factors.clear();
  for (const auto& [m, e] : merged)
    if (e != 0) mf.factors.push_back({m, e});
}

Polytope lifted_cell(const RegularSubdivision& s, int cell) {
  IntMatrix pts;
  for (int v : s.cell(cell).vertices) {
    IntVec p = s.points()[v];
    const Rational& h = s.heights()[v];
    if (!is_integral(h)) raise(ErrorCode::Internal, "non-integral height at a cell vertex");
    p.push_back(h.get_num());
    pts.push_back(std::move(p));
  }
  return Polytope(pts);
}

// Cells entering the multiplicity product, each with its sign.
std::vector<std::pair<int, int>> multiplicity_cells(const NewtonData& nd) {
  std::vector<std::pair<int, int>> out;
  const auto& s = nd.subdivision();
  const int n = nd.n();
  for (int i = 1; i < s.cell_count(); ++i) {
    const int d = s.cell(i).dim;
    if (nd.ambient() == Ambient::Torus) {
      if (d == n) out.emplace_back(i, 1);
    } else {
      const CellInfo& info = nd.cell(i);
      if (!info.at_infinity && d == nd.polytope().faces()[info.carrier_face].dim) out.emplace_back(i, (n - d) % 2 ? -1 : 1);
    }
  }
  return out;
}

void compositions(int total, int parts, std::vector<int>& cur, const std::function<void()>& visit) {
  if (parts == 0) {
    if (total == 0) visit();
    return;
  }
  for (int m = 1; m <= total - (parts - 1); ++m) {
    cur.push_back(m);
    compositions(total - m, parts - 1, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

Integer JordanTable::block(int size) const {
  if (size < 1 || size > static_cast<int>(blocks.size())) return 0;
  return blocks[size - 1];
}

Integer JordanTable::eigenspace_dim() const {
  Integer total = 0;
  for (std::size_t m = 0; m < blocks.size(); ++m) total += blocks[m] * static_cast<long>(m + 1);
  return total;
}

Integer MultiplicityFactorization::multiplicity_of(const RootOfUnity& lambda) const {
  Integer total = 0;
  const Integer ord = lambda.order();
  for (const auto& f : factors)
    if (f.order % ord == 0) total += f.exponent;
  return total;
}

std::string MultiplicityFactorization::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    out += "(t^" + f.order.get_str() + "-1)^" + f.exponent.get_str();
  }
  return out;
}

HodgeResult refined_E_torus(const KSEngine& ks, const RootOfUnity& lambda) {
  const NewtonData& nd = ks.data();
  if (nd.ambient() != Ambient::Torus) raise(ErrorCode::NotApplicable, "refined E is available for the torus only");
  const int n = nd.n();
  IntPoly rhs = IntPoly(lambda.epsilon()) * (uvw2() - IntPoly(1)).pow(n) + sign(n - 1) * ks.hstar_uvw(ks.top_face(), lambda);
  IntPoly e = divide(rhs, 1, 2, "refined E");
  const bool concentrated = !nd.is_bad(lambda);
  return finish(lambda, std::move(e), n - 1, concentrated);
}

HodgeResult concentrated_E(const KSEngine& ks, const RootOfUnity& lambda) {
  return finish(lambda, concentrated_core(ks, lambda, 1), ks.data().n() - 1, true);
}

HodgeResult concentrated_E(const CayleyData& cd, const KSEngine& cayley_ks, const RootOfUnity& lambda) {
  return finish(lambda, concentrated_core(cayley_ks, lambda, cd.k), cd.n - cd.k, true);
}

HodgeResult refined_E_ci(const CayleyData& cd, const KSEngine& cayley_ks, const RootOfUnity& lambda) {
  if (cd.ambient != Ambient::Torus) raise(ErrorCode::NotApplicable, "refined E is available for the torus only");
  const int n = cd.n;
  const IntPoly base = uvw2() - IntPoly(1);
  IntPoly rhs = IntPoly(lambda.epsilon()) * base.pow(n);
  for (unsigned mask = 1; mask < (1U << cd.k); ++mask) {
    const int face = cd.subset_faces[mask];
    const int dim = cayley_ks.faces().dim(face);
    const int size = __builtin_popcount(mask);
    const int power = n + size - 1 - dim;
    if (power < 0) raise(ErrorCode::Internal, "negative power in the Cayley sum");
    rhs += sign(dim - 1) * base.pow(power) * cayley_ks.hstar_uvw(face, lambda);
  }
  IntPoly e = divide(rhs, cd.k, 2, "refined E of a complete intersection");
  return finish(lambda, std::move(e), n - cd.k, !cd.cayley.is_bad(lambda));
}

JordanTable jordan_via_E(const HodgeResult& h) {
  if (!h.concentrated) raise(ErrorCode::NotApplicable, "E is not concentrated for " + h.lambda.to_string());
  const int center = h.center;
  std::vector<Integer> c(2 * center + 1, 0);
  const IntPoly in_s = h.e_diag.with_variables({"s"});
  for (const auto& [e, coeff] : in_s.terms()) {
    if (e[0] < 0 || e[0] > 2 * center) raise(ErrorCode::NotApplicable, "E(s,s) has degree outside [0, 2*center]");
    c[e[0]] = coeff;
  }
  for (int i = 0; i <= 2 * center; ++i) {
    if (c[i] < 0) raise(ErrorCode::NotApplicable, "E(s,s) has a negative coefficient");
    if (c[i] != c[2 * center - i]) raise(ErrorCode::NotApplicable, "E(s,s) is not symmetric about its center");
  }
  JordanTable table;
  table.lambda = h.lambda;
  table.route = JordanRoute::ViaE;
  table.blocks.assign(center + 1, 0);
  for (int i = 0; i <= center; ++i) {
    Integer q = c[i] - (i >= 2 ? c[i - 2] : Integer(0));
    if (q < 0) raise(ErrorCode::NotApplicable, "E(s,s) is not a sum of Jordan staircases");
    table.blocks[center - i] = q;  // J_{center+1-i}
  }
  return table;
}

JordanTable jordan_via_formula(const KSEngine& ks, const RootOfUnity& lambda) { return formula_core(ks, lambda, 1); }

JordanTable jordan_via_formula(const CayleyData& cd, const KSEngine& cayley_ks, const RootOfUnity& lambda) {
  return formula_core(cayley_ks, lambda, cd.k);
}

JordanTable jordan_both(const KSEngine& ks, const RootOfUnity& lambda) {
  JordanTable a = jordan_via_E(concentrated_E(ks, lambda));
  JordanTable b = jordan_via_formula(ks, lambda);
  require_agreement(a, b);
  a.route = JordanRoute::Both;
  return a;
}

JordanTable jordan_both(const CayleyData& cd, const KSEngine& cayley_ks, const RootOfUnity& lambda) {
  JordanTable a = jordan_via_E(concentrated_E(cd, cayley_ks, lambda));
  JordanTable b = jordan_via_formula(cd, cayley_ks, lambda);
  require_agreement(a, b);
  a.route = JordanRoute::Both;
  return a;
}

MultiplicityFactorization multiplicity_product(const NewtonData& nd) {
  MultiplicityFactorization mf;
  const auto& s = nd.subdivision();
  for (auto [cell, sgn] : multiplicity_cells(nd))
    mf.factors.push_back({nd.cell(cell).m, normalized_volume(lifted_cell(s, cell)) * sgn});
  normalize(mf);
  return mf;
}

Integer mixed_cell_volume(const CayleyData& cd, int cell) {
  const NewtonData& nd = cd.minkowski;
  const auto& s = nd.subdivision();
  const int n = cd.n;
  const Cell& c = s.cell(cell);
  if (c.dim < 0) raise(ErrorCode::EmptyCell, "mixed cell volume of the empty cell");
  if (c.dim < cd.k) return 0;  // no composition of dim F into k positive parts

  // inner normal in the relative interior of the normal cone of the lifted cell
  RatVec dir(n + 1, 0);
  for (int g : s.full_cells()) {
    if (!s.is_face_of(cell, g)) continue;
    const AffineFunction& nu = s.nu(g);
    for (int i = 0; i < n; ++i) dir[i] -= nu.gradient[i];
    dir[n] += 1;
  }
  for (const auto& ineq : nd.polytope().dilate_inequalities()) {
    bool contains = true;
    for (int v : c.vertices) {
      __int128 val = ineq.c;
      for (int i = 0; i < n; ++i) val += static_cast<__int128>(ineq.a[i]) * s.points()[v][i].get_si();
      if (val != 0) contains = false;
    }
    if (!contains) continue;
    for (int i = 0; i < n; ++i) dir[i] += ineq.a[i];
  }

  std::vector<Polytope> faces;
  for (const auto& summand : cd.summands) {
    Rational best;
    bool first = true;
    IntMatrix argmin;
    for (const auto& [v, h] : summand.heights) {
      IntVec p = v;
      p.push_back(h);
      Rational val = 0;
      for (int i = 0; i <= n; ++i) val += dir[i] * p[i];
      if (first || val < best) {
        best = val;
        argmin.clear();
        first = false;
      }
      if (val == best) argmin.push_back(std::move(p));
    }
    faces.emplace_back(argmin);
  }

  const Polytope lifted = lifted_cell(s, cell);
  const IntMatrix& basis = lifted.chart().basis();
  std::vector<Polytope> local = to_common_lattice(faces, basis);

  Integer total = 0;
  std::vector<int> parts;
  compositions(c.dim, cd.k, parts, [&] {
    std::vector<Polytope> args;
    for (int i = 0; i < cd.k; ++i)
      for (int r = 0; r < parts[i]; ++r) args.push_back(local[i]);
    total += mixed_volume(args);
  });
  return total;
}

MultiplicityFactorization multiplicity_product(const CayleyData& cd) {
  MultiplicityFactorization mf;
  for (auto [cell, sgn] : multiplicity_cells(cd.minkowski))
    mf.factors.push_back({cd.minkowski.cell(cell).m, mixed_cell_volume(cd, cell) * sgn});
  normalize(mf);
  return mf;
}

}  // namespace nhodge
