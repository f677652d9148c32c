#include "nhodge/consistency.hpp"

#include <cstdio>
#include <functional>
#include <optional>

#include "nhodge/cayley.hpp"
#include "nhodge/errors.hpp"
#include "nhodge/kspoly.hpp"
#include "nhodge/monodromy.hpp"
#include "nhodge/oracle.hpp"
#include "nhodge/volume.hpp"

namespace nhodge {
namespace {

class Collector {
 public:
  explicit Collector(std::string digest) : digest_(std::move(digest)) {}

  void equal(const std::string& name, const std::string& expected, const std::string& actual) {
    out_.push_back({name, digest_, expected, actual, expected == actual});
  }
  void holds(const std::string& name, bool ok, const std::string& detail = "") {
    out_.push_back({name, digest_, "true", ok ? "true" : "false" + (detail.empty() ? "" : ": " + detail), ok});
  }
  // Runs body; an exception becomes a failed report.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      out_.push_back({name, digest_, "no error", e.what(), false});
    }
  }
  std::vector<OracleReport> take() { return std::move(out_); }

 private:
  std::string digest_;
  std::vector<OracleReport> out_;
};

std::string str(const Integer& x) { return x.get_str(); }

std::string join(const std::vector<Integer>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].get_str();
  return out + "]";
}

std::vector<int> as_vector(const PointSet& s) {
  std::vector<int> out;
  for (int i : s.indices()) out.push_back(i);
  return out;
}

IntPoly w_part(const IntPoly& p, int k) {
  IntPoly out;
  const IntPoly full = p.with_variables({"u", "v", "w"});
  for (const auto& [e, c] : full.terms())
    if (e[2] == k) out += IntPoly::monomial(Monomial{c, {{"u", e[0]}, {"v", e[1]}, {"w", e[2]}}});
  return out;
}

bool symmetric_about(const IntPoly& diag, int center) {
  const IntPoly in_s = diag.with_variables({"s"});
  for (const auto& [e, c] : in_s.terms()) {
    const int mirror = 2 * center - e[0];
    if (mirror < 0 || in_s.coefficient({{"s", mirror}}) != c || c < 0) return false;
  }
  return true;
}

void corrupt(MultiplicityFactorization& mf) {
  for (auto& f : mf.factors) f.exponent += 1;
}

void structural_checks(Collector& c, const NewtonData& nd, const KSEngine& ks) {
  const auto& s = nd.subdivision();
  c.guarded("newton.m_divisibility", [&] {
    bool ok = true;
    for (int i = 1; i < s.cell_count(); ++i)
      for (int j = 1; j < s.cell_count(); ++j)
        if (i != j && s.is_face_of(i, j) && nd.cell(j).m % nd.cell(i).m != 0) ok = false;
    c.holds("newton.m_divisibility", ok);
  });
  c.guarded("newton.vertex_integrality", [&] {
    bool ok = true;
    for (int i = 1; i < s.cell_count(); ++i)
      for (int v : s.cell(i).vertices)
        if (!is_integral(s.nu(i)(s.points()[v]))) ok = false;
    c.holds("newton.vertex_integrality", ok);
  });
  c.guarded("kspoly.local_h", [&] {
    // local_h raises on asymmetry or negative coefficients; ltilde raises unless unimodal
    for (int q = 0; q < ks.faces().size(); ++q)
      for (int cell : ks.cells_in_face(q)) ltilde(ks.local_h(q, cell), ks.faces().dim(q) - ks.cells().dim(cell));
    c.holds("kspoly.local_h", true);
  });
}

void oracle_checks(Collector& c, const NewtonData& nd, const KSEngine& ks, const SuiteOptions& opt) {
  const auto& s = nd.subdivision();
  if (s.points().size() > opt.max_oracle_points) return;
  const int top = ks.top_face();
  const int dim = nd.dim();
  c.guarded("oracle.partition_of_unity", [&] {
    std::vector<Integer> counts;
    try {
      counts = oracle::ehrhart_series_bruteforce(nd.polytope().points(), dim + 2);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::TooLarge) return;
      throw;
    }
    std::vector<Integer> sums;
    for (int m = 0; m <= dim + 2; ++m) {
      Integer total = 0;
      for (const auto& lam : nd.spectrum()) total += ks.weighted_ehrhart_face(top, lam, m);
      sums.push_back(total);
    }
    c.equal("oracle.partition_of_unity", join(counts), join(sums));
  });
  c.guarded("oracle.g", [&] {
    auto lattice = oracle::brute_face_lattice(nd.polytope().points());
    const int btop = lattice.find(as_vector(ks.faces().set(top)));
    c.equal("oracle.g", oracle::recursion_eval_g(lattice, 0, btop).to_string(),
            ks.faces().g(0, top, Orientation::Standard).to_string());
    c.equal("oracle.g_dual", oracle::recursion_eval_g(lattice, 0, btop, true).to_string(),
            ks.faces().g(0, top, Orientation::Reversed).to_string());
  });
  c.guarded("oracle.local_h", [&] {
    std::map<IntVec, Rational> lifted;
    for (std::size_t i = 0; i < s.points().size(); ++i) lifted[s.points()[i]] = s.heights()[i];
    auto brute = oracle::brute_subdivision(lifted);
    const int btop = brute.faces.find(as_vector(ks.faces().set(top)));
    bool ok = btop >= 0 && static_cast<int>(brute.cells.sets.size()) == s.cell_count();
    std::string detail;
    for (int cell = 0; ok && cell < s.cell_count(); ++cell) {
      const int bc = brute.cells.find(as_vector(s.cell(cell).points));
      if (bc < 0) {
        ok = false;
        detail = "cell missing from the brute-force subdivision";
        break;
      }
      IntPoly a = oracle::recursion_eval_local_h(brute, btop, bc);
      IntPoly b = ks.local_h(top, cell);
      if (!(a == b)) {
        ok = false;
        detail = a.to_string() + " vs " + b.to_string();
      }
    }
    c.holds("oracle.local_h", ok, detail);
  });
}

void lambda_checks(Collector& c, const NewtonData& nd, const KSEngine& ks, const MultiplicityFactorization& mf,
                   const RootOfUnity& lam) {
  const std::string tag = "[" + lam.to_string() + "]";
  if (nd.is_bad(lam)) {
    if (nd.ambient() == Ambient::Torus) {
      c.guarded("hodge.w_specialization" + tag, [&] {
        HodgeResult r = refined_E_torus(ks, lam);
        c.equal("hodge.w_specialization" + tag, r.e_uvw.evaluate("w", 1).to_string(), r.e_uv.to_string());
      });
    }
    return;
  }
  c.guarded("jordan" + tag, [&] {
    HodgeResult e = concentrated_E(ks, lam);
    c.equal("hodge.w_concentration" + tag, w_part(e.e_uvw, nd.n() - 1).to_string(), e.e_uvw.to_string());
    c.holds("hodge.symmetry" + tag, symmetric_about(e.e_diag, e.center), e.e_diag.to_string());
    if (nd.ambient() == Ambient::Torus) {
      HodgeResult r = refined_E_torus(ks, lam);
      c.equal("hodge.refined_vs_concentrated" + tag, e.e_uvw.to_string(), r.e_uvw.to_string());
    }
    JordanTable a = jordan_via_E(e);
    JordanTable b = jordan_via_formula(ks, lam);
    c.equal("jordan.route_agreement" + tag, join(a.blocks), join(b.blocks));
    c.equal("multiplicity.cross_check" + tag, str(a.eigenspace_dim()), str(mf.multiplicity_of(lam)));
  });
}

void root_tracking(Collector& c, const TPolynomial& f, const NewtonData& nd, const KSEngine& ks) {
  c.guarded("oracle.root_tracking", [&] {
    auto orbit = oracle::monodromy_n1(f);
    std::map<RootOfUnity, Integer> main;
    Integer others = 0;
    for (const auto& lam : nd.spectrum()) {
      if (lam.is_one()) continue;
      Integer d = jordan_via_E(concentrated_E(ks, lam)).eigenspace_dim();
      if (d != 0) main[lam] = d;
      others += d;
    }
    // lambda = 1: refined E on the torus; on the affine line, all roots minus the rest
    Integer fixed;
    if (nd.ambient() == Ambient::Torus) {
      fixed = refined_E_torus(ks, RootOfUnity(0, 1)).e_uvw.sum_of_coefficients();
    } else if (nd.polytope().index_of_point(IntVec{0}) >= 0) {
      fixed = normalized_volume(nd.polytope()) - others;
    } else {
      return;
    }
    if (fixed != 0) main[RootOfUnity(0, 1)] = fixed;
    auto render = [](const std::map<RootOfUnity, Integer>& m) {
      std::string out;
      for (const auto& [lam, k] : m) out += lam.to_string() + "^" + k.get_str() + " ";
      return out;
    };
    c.equal("oracle.root_tracking", render(orbit.eigenvalues), render(main));
  });
}

}  // namespace

std::string instance_digest(const std::string& text) {
  // FNV-1a, 64 bit
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<OracleReport> consistency_suite(const TPolynomial& f, const SuiteOptions& options) {
  Collector c(instance_digest(to_string(f)));
  NewtonData nd = build_newton_data(f);
  KSEngine ks(nd);
  MultiplicityFactorization mf = multiplicity_product(nd);
  if (options.corrupt_multiplicity) corrupt(mf);
  structural_checks(c, nd, ks);
  if (options.oracle_geometry) oracle_checks(c, nd, ks, options);
  for (const auto& lam : nd.spectrum()) lambda_checks(c, nd, ks, mf, lam);
  if (f.n == 1) root_tracking(c, f, nd, ks);
  return c.take();
}

std::vector<OracleReport> consistency_suite(const CISystem& system, const SuiteOptions& options) {
  std::string text;
  for (const auto& p : system.polys) text += to_string(p) + ";";
  Collector c(instance_digest(text));
  CayleyData cd = build_cayley_data(system);
  const auto from_sum = divisor_closure(cd.minkowski.bad_orders());
  const auto from_cayley = divisor_closure(cd.cayley.bad_orders());
  c.equal("cayley.bad_sets", join({from_sum.begin(), from_sum.end()}), join({from_cayley.begin(), from_cayley.end()}));
  KSEngine cks(cd.cayley);
  structural_checks(c, cd.cayley, cks);
  MultiplicityFactorization mf = multiplicity_product(cd);
  if (options.corrupt_multiplicity) corrupt(mf);
  std::set<Integer> orders = cd.cayley.cell_orders();
  orders.insert(cd.minkowski.cell_orders().begin(), cd.minkowski.cell_orders().end());

  std::optional<NewtonData> single;
  if (cd.k == 1) single.emplace(build_newton_data(system.polys[0]));
  std::optional<KSEngine> sks;
  if (single) {
    sks.emplace(*single);
    c.equal("ci.k1_multiplicity", multiplicity_product(*single).to_string(), mf.to_string());
  }

  for (const auto& lam : roots_of_orders(orders)) {
    const std::string tag = "[" + lam.to_string() + "]";
    if (cd.ambient == Ambient::Torus) {
      c.guarded("ci.refined" + tag, [&] {
        HodgeResult r = refined_E_ci(cd, cks, lam);
        c.equal("ci.w_specialization" + tag, r.e_uvw.evaluate("w", 1).to_string(), r.e_uv.to_string());
        if (sks) c.equal("ci.k1_refined" + tag, refined_E_torus(*sks, lam).e_uvw.to_string(), r.e_uvw.to_string());
      });
    }
    if (cd.cayley.is_bad(lam)) continue;
    c.guarded("ci.jordan" + tag, [&] {
      HodgeResult e = concentrated_E(cd, cks, lam);
      c.equal("ci.w_concentration" + tag, w_part(e.e_uvw, cd.n - cd.k).to_string(), e.e_uvw.to_string());
      c.holds("ci.symmetry" + tag, symmetric_about(e.e_diag, e.center), e.e_diag.to_string());
      if (cd.ambient == Ambient::Torus)
        c.equal("ci.refined_vs_concentrated" + tag, e.e_uvw.to_string(), refined_E_ci(cd, cks, lam).e_uvw.to_string());
      JordanTable a = jordan_via_E(e);
      JordanTable b = jordan_via_formula(cd, cks, lam);
      c.equal("ci.jordan_route_agreement" + tag, join(a.blocks), join(b.blocks));
      c.equal("ci.multiplicity_cross_check" + tag, str(a.eigenspace_dim()), str(mf.multiplicity_of(lam)));
      if (sks) {
        c.equal("ci.k1_concentrated" + tag, concentrated_E(*sks, lam).e_uvw.to_string(), e.e_uvw.to_string());
        c.equal("ci.k1_jordan" + tag, join(jordan_via_formula(*sks, lam).blocks), join(b.blocks));
      }
    });
  }
  return c.take();
}

}  // namespace nhodge
