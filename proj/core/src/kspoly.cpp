#include "nhodge/kspoly.hpp"

#include <algorithm>
#include <numeric>

#include "nhodge/errors.hpp"

namespace nhodge {
namespace {

const IntPoly& t_minus_one_pow(int k) {
  static std::vector<IntPoly> cache;
  if (k < 0) raise(ErrorCode::Internal, "negative power of (t-1)");
  while (static_cast<int>(cache.size()) <= k) {
    cache.push_back(cache.empty() ? IntPoly(1) : cache.back() * (IntPoly::variable("t") - IntPoly(1)));
  }
  return cache[k];
}

Monomial mono(std::initializer_list<std::pair<const char*, int>> exps) {
  Monomial m;
  for (auto [v, e] : exps) m.exponents[v] = e;
  return m;
}

std::int64_t positive_mod(__int128 a, std::int64_t d) {
  __int128 r = a % d;
  if (r < 0) r += d;
  return static_cast<std::int64_t>(r);
}

}  // namespace

IntPoly in_variable(const IntPoly& p, const std::string& from, const Monomial& to) {
  return p.substitute({{from, to}});
}

IntPoly reverse(const IntPoly& p, const std::string& var, int degree) {
  IntPoly r = p.substitute({{var, mono({{var.c_str(), -1}})}});
  return r * IntPoly::monomial(mono({{var.c_str(), degree}}));
}

SetPoset::SetPoset(std::vector<PointSet> sets, std::vector<int> dims) : sets_(std::move(sets)), dims_(std::move(dims)) {}

SetPoset SetPoset::face_lattice(const Polytope& p) {
  std::vector<PointSet> sets;
  std::vector<int> dims;
  for (const auto& f : p.faces()) {
    sets.push_back(f.points);
    dims.push_back(f.dim);
  }
  return SetPoset(std::move(sets), std::move(dims));
}

SetPoset SetPoset::cells(const RegularSubdivision& s) {
  std::vector<PointSet> sets;
  std::vector<int> dims;
  for (const auto& c : s.cells()) {
    sets.push_back(c.points);
    dims.push_back(c.dim);
  }
  return SetPoset(std::move(sets), std::move(dims));
}

std::vector<int> SetPoset::interval(int lo, int hi) const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (leq(lo, x) && leq(x, hi)) out.push_back(x);
  return out;
}

const IntPoly& SetPoset::g(int lo, int hi, Orientation o) const {
  const auto key = std::make_tuple(lo, hi, static_cast<int>(o));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (!leq(lo, hi)) raise(ErrorCode::Internal, "g of a non-interval");
  const int r = dims_[hi] - dims_[lo];
  IntPoly result = 1;
  if (r > 0) {
    const std::vector<int> elems = interval(lo, hi);
    long euler = 0;
    for (int x : elems) euler += (dims_[x] % 2 == 0) ? 1 : -1;
    if (euler != 0) raise(ErrorCode::NotEulerian, "interval fails the Euler relation");
    IntPoly rest;
    for (int x : elems) {
      if (o == Orientation::Standard) {
        if (x == hi) continue;
        rest += t_minus_one_pow(dims_[hi] - dims_[x]) * g(lo, x, o);
      } else {
        if (x == lo) continue;
        rest += t_minus_one_pow(dims_[x] - dims_[lo]) * g(x, hi, o);
      }
    }
    std::vector<Integer> coeffs;
    for (int i = 0; 2 * i < r; ++i) coeffs.push_back(-rest.coeff("t", i));
    result = IntPoly::univariate("t", coeffs);
    if (!(reverse(result, "t", r) - result == rest))
      raise(ErrorCode::NotEulerian, "g recursion is inconsistent on an interval of rank " + std::to_string(r));
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

IntPoly g_poly(const SetPoset& poset, int lo, int hi, Orientation o) { return poset.g(lo, hi, o); }

IntPoly ltilde(const IntPoly& l, int codim) {
  std::vector<Integer> a = l.coefficients("t");
  if (static_cast<int>(a.size()) > codim + 1) raise(ErrorCode::NotUnimodal, "degree exceeds " + std::to_string(codim));
  a.resize(codim + 1, 0);
  for (int i = 0; i <= codim; ++i)
    if (a[i] != a[codim - i]) raise(ErrorCode::NotUnimodal, l.to_string() + " is not symmetric about " + std::to_string(codim) + "/2");
  std::vector<Integer> out;
  for (int i = 0; 2 * i <= codim; ++i) {
    Integer d = a[i] - (i > 0 ? a[i - 1] : Integer(0));
    if (d < 0) raise(ErrorCode::NotUnimodal, l.to_string() + " is not unimodal");
    out.push_back(d);
  }
  return IntPoly::univariate("t", out);
}

KSEngine::KSEngine(const NewtonData& nd)
    : nd_(nd), faces_(SetPoset::face_lattice(nd.polytope())), cells_(SetPoset::cells(nd.subdivision())) {
  for (int q = 0; q < faces_.size(); ++q) cells_in_face_.push_back(nd.cells_in_face(q));
}

const std::vector<int>& KSEngine::cells_in_face(int q) const { return cells_in_face_.at(q); }

IntPoly KSEngine::h_link(int face, int cell) const {
  const auto key = std::make_pair(face, cell);
  if (auto it = h_link_memo_.find(key); it != h_link_memo_.end()) return it->second;
  const int dq = faces_.dim(face);
  const int df = cells_.dim(cell);
  IntPoly rhs;
  for (int c : cells_in_face(face)) {
    if (!cells_.leq(cell, c)) continue;
    rhs += cells_.g(cell, c, Orientation::Standard) * t_minus_one_pow(dq - cells_.dim(c));
  }
  IntPoly h = reverse(rhs, "t", dq - df);
  h.require_polynomial("h-polynomial of a link");
  return h_link_memo_.emplace(key, h).first->second;
}

IntPoly KSEngine::local_h(int face, int cell) const {
  const auto key = std::make_pair(face, cell);
  if (auto it = local_h_memo_.find(key); it != local_h_memo_.end()) return it->second;
  const int sigma = carrier(cell);
  if (!faces_.leq(sigma, face)) raise(ErrorCode::Internal, "cell is not in the restricted subdivision");
  const int dq = faces_.dim(face);
  IntPoly l;
  for (int q : faces_.interval(sigma, face)) {
    IntPoly term = h_link(q, cell) * faces_.g(q, face, Orientation::Reversed);
    if ((dq - faces_.dim(q)) % 2 == 0) {
      l += term;
    } else {
      l -= term;
    }
  }
  const int span = dq - cells_.dim(cell);
  if (!l.is_polynomial() || !(reverse(l, "t", span) == l))
    raise(ErrorCode::Internal, "local h-polynomial " + l.to_string() + " is not symmetric");
  for (const auto& [e, c] : l.terms())
    if (c < 0) raise(ErrorCode::Internal, "local h-polynomial " + l.to_string() + " has a negative coefficient");
  return local_h_memo_.emplace(key, l).first->second;
}

const KSEngine::WeightTable& KSEngine::cell_table(int cell) const {
  if (auto it = cell_tables_.find(cell); it != cell_tables_.end()) return it->second;
  const auto& s = nd_.subdivision();
  const IntegerAffineForm& nu = s.nu_form(cell);
  const Polytope& poly = s.cell_polytope(cell);
  WeightTable t;
  t.denominator = nu.denominator;
  const int d = poly.dim();
  for (long m = 1; m <= d + 2; ++m) {
    std::vector<Integer> counts(t.denominator, 0);
    std::vector<long> raw(t.denominator, 0);
    poly.for_each_lattice_point(m, [&](const std::vector<std::int64_t>& x) {
      __int128 v = static_cast<__int128>(nu.constant) * m;
      for (std::size_t i = 0; i < x.size(); ++i) v += static_cast<__int128>(nu.coeffs[i]) * x[i];
      ++raw[positive_mod(v, t.denominator)];
    });
    for (std::size_t r = 0; r < raw.size(); ++r) counts[r] = raw[r];
    t.counts.push_back(std::move(counts));
  }
  return cell_tables_.emplace(cell, std::move(t)).first->second;
}

const KSEngine::WeightTable& KSEngine::face_table(int face) const {
  if (auto it = face_tables_.find(face); it != face_tables_.end()) return it->second;
  const auto& s = nd_.subdivision();
  const int d = faces_.dim(face);
  WeightTable t;
  if (d < 0) return face_tables_.emplace(face, std::move(t)).first->second;

  struct Piece {
    std::vector<DilateInequality> ineqs;
    const IntegerAffineForm* nu;
  };
  std::vector<Piece> pieces;
  for (int c : cells_in_face(face)) {
    if (cells_.dim(c) != d) continue;
    pieces.push_back(Piece{s.cell_polytope(c).dilate_inequalities(), &s.nu_form(c)});
    t.denominator = std::lcm(t.denominator, s.nu_form(c).denominator);
  }
  IntMatrix verts;
  for (int i : faces_.set(face).indices()) verts.push_back(s.points()[i]);
  Polytope poly(std::move(verts));

  for (long m = 1; m <= d + 2; ++m) {
    std::vector<long> raw(t.denominator, 0);
    poly.for_each_lattice_point(m, [&](const std::vector<std::int64_t>& x) {
      for (const auto& piece : pieces) {
        bool inside = true;
        for (const auto& ineq : piece.ineqs) {
          __int128 v = static_cast<__int128>(ineq.c) * m;
          for (std::size_t i = 0; i < x.size(); ++i) v += static_cast<__int128>(ineq.a[i]) * x[i];
          if (v < 0) {
            inside = false;
            break;
          }
        }
        if (!inside) continue;
        __int128 v = static_cast<__int128>(piece.nu->constant) * m;
        for (std::size_t i = 0; i < x.size(); ++i) v += static_cast<__int128>(piece.nu->coeffs[i]) * x[i];
        ++raw[positive_mod(v, piece.nu->denominator) * (t.denominator / piece.nu->denominator)];
        return;
      }
      raise(ErrorCode::Internal, "lattice point of a face lies in no maximal cell");
    });
    std::vector<Integer> counts(raw.begin(), raw.end());
    t.counts.push_back(std::move(counts));
  }
  return face_tables_.emplace(face, std::move(t)).first->second;
}

Integer KSEngine::lookup(const WeightTable& t, const RootOfUnity& lambda, long m) {
  if (m < 1 || m > static_cast<long>(t.counts.size())) raise(ErrorCode::Internal, "weight table index out of range");
  const Integer order = lambda.order();
  if (Integer(t.denominator) % order != 0) return 0;
  const Integer r = lambda.phase().get_num() * (Integer(t.denominator) / order);
  return t.counts[m - 1][r.get_si()];
}

Integer KSEngine::weighted_ehrhart_cell(int cell, const RootOfUnity& lambda, long m) const {
  if (cells_.dim(cell) < 0) return 0;
  if (m == 0) return lambda.epsilon();
  const WeightTable& t = cell_table(cell);
  if (m <= static_cast<long>(t.counts.size())) return lookup(t, lambda, m);
  const auto& s = nd_.subdivision();
  const IntegerAffineForm& nu = s.nu_form(cell);
  Integer count = 0;
  const Integer order = lambda.order();
  s.cell_polytope(cell).for_each_lattice_point(m, [&](const std::vector<std::int64_t>& x) {
    Integer v = Integer(static_cast<long>(nu.constant)) * m;
    for (std::size_t i = 0; i < x.size(); ++i) v += Integer(static_cast<long>(nu.coeffs[i])) * static_cast<long>(x[i]);
    Rational phase = frac_of(make_rational(v, static_cast<long>(nu.denominator)));
    if (phase == lambda.phase()) ++count;
  });
  (void)order;
  return count;
}

Integer KSEngine::weighted_ehrhart_face(int face, const RootOfUnity& lambda, long m) const {
  if (faces_.dim(face) < 0) return 0;
  if (m == 0) return lambda.epsilon();
  const WeightTable& t = face_table(face);
  if (m > static_cast<long>(t.counts.size())) raise(ErrorCode::Internal, "dilation beyond the tabulated range");
  return lookup(t, lambda, m);
}

IntPoly KSEngine::hstar_from_counts(const WeightTable& t, int dim, const RootOfUnity& lambda) const {
  std::vector<Integer> f(dim + 3);
  f[0] = lambda.epsilon();
  for (int j = 1; j <= dim + 2; ++j) f[j] = lookup(t, lambda, j);
  std::vector<Integer> h(dim + 3, 0);
  for (int i = 0; i <= dim + 2; ++i) {
    for (int j = 0; j <= i; ++j) {
      Integer term = binomial(dim + 1, i - j) * f[j];
      if ((i - j) % 2 == 0) {
        h[i] += term;
      } else {
        h[i] -= term;
      }
    }
  }
  if (h[dim + 2] != 0) raise(ErrorCode::NonPolynomial, "weighted Ehrhart counts are not polynomial in m");
  h.pop_back();
  return IntPoly::univariate("u", h);
}

IntPoly KSEngine::hstar_u_cell(int cell, const RootOfUnity& lambda) const {
  const int d = cells_.dim(cell);
  if (d < 0) return IntPoly(lambda.epsilon());
  return hstar_from_counts(cell_table(cell), d, lambda);
}

IntPoly KSEngine::hstar_u_face(int face, const RootOfUnity& lambda) const {
  const int d = faces_.dim(face);
  if (d < 0) return IntPoly(lambda.epsilon());
  return hstar_from_counts(face_table(face), d, lambda);
}

IntPoly KSEngine::lstar_u_cell(int cell, const RootOfUnity& lambda) const {
  const auto key = std::make_pair(cell, lambda.phase());
  if (auto it = lstar_cell_memo_.find(key); it != lstar_cell_memo_.end()) return it->second;
  const int d = cells_.dim(cell);
  IntPoly l;
  for (int g = 0; g < cells_.size(); ++g) {
    if (!cells_.leq(g, cell)) continue;
    IntPoly h = hstar_u_cell(g, lambda);
    if (h.is_zero()) continue;
    IntPoly term = h * in_variable(cells_.g(g, cell, Orientation::Reversed), "t", mono({{"u", 1}}));
    if ((d - cells_.dim(g)) % 2 == 0) {
      l += term;
    } else {
      l -= term;
    }
  }
  return lstar_cell_memo_.emplace(key, l).first->second;
}

IntPoly KSEngine::lstar_u_face(int face, const RootOfUnity& lambda) const {
  const auto key = std::make_pair(face, lambda.phase());
  if (auto it = lstar_face_memo_.find(key); it != lstar_face_memo_.end()) return it->second;
  const int d = faces_.dim(face);
  IntPoly l;
  for (int q : faces_.interval(0, face)) {
    IntPoly h = hstar_u_face(q, lambda);
    if (h.is_zero()) continue;
    IntPoly term = h * in_variable(faces_.g(q, face, Orientation::Reversed), "t", mono({{"u", 1}}));
    if ((d - faces_.dim(q)) % 2 == 0) {
      l += term;
    } else {
      l -= term;
    }
  }
  return lstar_face_memo_.emplace(key, l).first->second;
}

IntPoly KSEngine::lstar_uv(int face, const RootOfUnity& lambda) const {
  const auto key = std::make_pair(face, lambda.phase());
  if (auto it = lstar_uv_memo_.find(key); it != lstar_uv_memo_.end()) return it->second;
  IntPoly out;
  for (int c : cells_in_face(face)) {
    IntPoly l = lstar_u_cell(c, lambda);
    if (l.is_zero()) continue;
    IntPoly shifted = in_variable(l, "u", mono({{"u", 1}, {"v", -1}})) * IntPoly::monomial(mono({{"v", cells_.dim(c) + 1}}));
    out += shifted * in_variable(local_h(face, c), "t", mono({{"u", 1}, {"v", 1}}));
  }
  out.require_polynomial("two-variable l*");
  return lstar_uv_memo_.emplace(key, out).first->second;
}

IntPoly KSEngine::hstar_uv(int face, const RootOfUnity& lambda) const {
  IntPoly out;
  for (int c : cells_in_face(face)) {
    IntPoly l = lstar_u_cell(c, lambda);
    if (l.is_zero()) continue;
    IntPoly shifted = in_variable(l, "u", mono({{"u", 1}, {"v", -1}})) * IntPoly::monomial(mono({{"v", cells_.dim(c) + 1}}));
    out += shifted * in_variable(h_link(face, c), "t", mono({{"u", 1}, {"v", 1}}));
  }
  out.require_polynomial("two-variable h*");
  return out;
}

IntPoly KSEngine::hstar_uvw(int face, const RootOfUnity& lambda) const {
  IntPoly out;
  for (int q : faces_.interval(0, face)) {
    IntPoly l = lstar_uv(q, lambda);
    if (l.is_zero()) continue;
    IntPoly g = in_variable(faces_.g(q, face, Orientation::Standard), "t", mono({{"u", 1}, {"v", 1}, {"w", 2}}));
    out += l * g * IntPoly::monomial(mono({{"w", faces_.dim(q) + 1}}));
  }
  out.require_polynomial("three-variable h*");
  return out;
}

}  // namespace nhodge
