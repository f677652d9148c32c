// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nhodge/cayley.hpp"
#include "nhodge/consistency.hpp"
#include "nhodge/errors.hpp"
#include "nhodge/kspoly.hpp"
#include "nhodge/monodromy.hpp"
#include "nhodge/oracle.hpp"
#include "nhodge/random_instances.hpp"
#include "nhodge/volume.hpp"

using namespace nhodge;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void reports(const std::vector<OracleReport>& rs, int& checks) {
    for (const auto& r : rs) {
      ++checks;
      if (!r.pass) failures.push_back(r.name + " on " + r.digest + ": expected " + r.expected + ", got " + r.actual);
    }
  }
};

using Clock = std::chrono::steady_clock;

bool run(const std::string& id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > limit_seconds) {
    std::ostringstream msg;
    msg << "runtime " << secs << " s exceeds " << limit_seconds << " s";
    out.failures.push_back(msg.str());
  }
  const bool pass = out.failures.empty();
  std::printf("%s %s: %s [%.2f s]%s%s\n", pass ? "PASS" : "FAIL", id.c_str(), title.c_str(), secs,
              out.summary.empty() ? "" : " ", out.summary.c_str());
  for (std::size_t i = 0; i < out.failures.size() && i < 10; ++i) std::printf("    %s\n", out.failures[i].c_str());
  if (out.failures.size() > 10) std::printf("    ... %zu more\n", out.failures.size() - 10);
  std::fflush(stdout);
  return pass;
}

std::multiset<Integer> full_cell_orders(const NewtonData& nd) {
  std::multiset<Integer> out;
  for (int i = 1; i < nd.subdivision().cell_count(); ++i) out.insert(nd.cell(i).m);
  return out;
}

std::vector<std::string> phases(const std::vector<RootOfUnity>& roots) {
  std::vector<std::string> out;
  for (const auto& r : roots) out.push_back(r.to_string());
  return out;
}

bool root_tracking_passes(const std::vector<OracleReport>& rs) {
  for (const auto& r : rs)
    if (r.name == "oracle.root_tracking") return r.pass;
  return false;
}

IntMatrix polygon(int m) {
  // lattice m-gons, m = 3..8
  static const std::vector<std::vector<std::pair<long, long>>> shapes = {
      {{0, 0}, {1, 0}, {0, 1}},
      {{0, 0}, {1, 0}, {1, 1}, {0, 1}},
      {{0, 0}, {2, 0}, {3, 1}, {1, 2}, {0, 1}},
      {{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}},
      {{0, 0}, {2, 0}, {4, 1}, {4, 2}, {3, 3}, {1, 3}, {0, 1}},
      {{1, 0}, {2, 0}, {3, 1}, {3, 2}, {2, 3}, {1, 3}, {0, 2}, {0, 1}},
  };
  IntMatrix pts;
  for (auto [x, y] : shapes.at(m - 3)) pts.push_back(IntVec{x, y});
  return pts;
}

std::vector<int> as_vector(const PointSet& s) {
  std::vector<int> out;
  for (int i : s.indices()) out.push_back(i);
  return out;
}

void golden_a(Outcome& o) {
  TPolynomial f = parse_poly("1 - t*x1^3", Ambient::Torus, 1);
  NewtonData nd = build_newton_data(f);
  KSEngine ks(nd);
  o.expect(full_cell_orders(nd) == std::multiset<Integer>{1, 1, 3}, "m_F != {1,1,3}");
  o.expect(nd.bad_orders() == std::set<Integer>{1}, "R_f orders != {1}");
  o.expect(phases(nd.spectrum()) == std::vector<std::string>{"0/1", "1/3", "2/3"}, "spectrum");
  for (const auto& lam : {RootOfUnity(1, 3), RootOfUnity(2, 3)}) {
    JordanTable a = jordan_via_E(concentrated_E(ks, lam));
    JordanTable b = jordan_via_formula(ks, lam);
    o.expect(a.blocks == std::vector<Integer>{1}, "J via E at " + lam.to_string());
    o.expect(b.blocks == std::vector<Integer>{1}, "J via formula at " + lam.to_string());
  }
  o.expect(multiplicity_product(nd).to_string() == "(t^3-1)^1", "multiplicity");
  o.expect(root_tracking_passes(consistency_suite(f)), "root tracking oracle disagrees");
}

void golden_b(Outcome& o) {
  TPolynomial f = parse_poly("x1^2 - t", Ambient::Affine, 1);
  NewtonData nd = build_newton_data(f);
  KSEngine ks(nd);
  const auto& faces = nd.infinity_faces();
  o.expect(faces.size() == 1 && as_vector(nd.polytope().faces()[faces[0]].points) ==
                                    std::vector<int>{nd.polytope().index_of_point(IntVec{2})},
           "P_infinity != {2}");
  o.expect(nd.bad_orders() == std::set<Integer>{1}, "R_f orders != {1}");
  const RootOfUnity minus(1, 2);
  o.expect(jordan_via_E(concentrated_E(ks, minus)).blocks == std::vector<Integer>{1}, "J via E");
  o.expect(jordan_via_formula(ks, minus).blocks == std::vector<Integer>{1}, "J via formula");
  o.expect(multiplicity_product(nd).to_string() == "(t^2-1)^1", "multiplicity");
  o.expect(root_tracking_passes(consistency_suite(f)), "root tracking oracle disagrees");
}

void kernels(Outcome& o) {
  for (int m = 3; m <= 8; ++m) {
    const IntMatrix pts = polygon(m);
    Polytope p(pts);
    o.expect(p.vertices().size() == static_cast<std::size_t>(m), "polygon is not an m-gon");
    SetPoset lat = SetPoset::face_lattice(p);
    const IntPoly want = IntPoly::univariate("t", {1, m - 3});
    const IntPoly main = lat.g(0, lat.size() - 1, Orientation::Standard);
    auto brute = oracle::brute_face_lattice(pts);
    const IntPoly reference = oracle::recursion_eval_g(brute, 0, brute.find(as_vector(lat.set(lat.size() - 1))));
    o.expect(main == want, "g of the " + std::to_string(m) + "-gon is " + main.to_string());
    o.expect(reference == want, "oracle g of the " + std::to_string(m) + "-gon is " + reference.to_string());
  }
  ValuationMap split{{IntVec{0}, 0}, {IntVec{1}, -1}, {IntVec{2}, 0}};
  NewtonData nd = build_newton_data(Ambient::Torus, 1, split);
  KSEngine ks(nd);
  PointSet mid(nd.polytope().points().size());
  mid.insert(nd.polytope().index_of_point(IntVec{1}));
  const int mid_cell = nd.subdivision().find_cell(mid);
  o.expect(ks.local_h(ks.top_face(), 0) == IntPoly::variable("t"), "l(S, empty) != t");
  o.expect(ks.local_h(ks.top_face(), mid_cell) == IntPoly::parse("1 + t"), "l(S, {1}) != 1 + t");
}

void property_suite(Outcome& o) {
  std::mt19937_64 rng(20240601);
  int instances = 0, checks = 0;
  const int torus_count = 200, affine_count = 60;
  for (int i = 0; i < torus_count + affine_count; ++i) {
    InstanceShape shape;
    shape.ambient = i < torus_count ? Ambient::Torus : Ambient::Affine;
    shape.n = 1 + i % 3;
    std::uniform_int_distribution<int> count(shape.n + 1, 12);
    shape.points = count(rng);
    TPolynomial f = random_hypersurface(rng, shape);
    o.reports(consistency_suite(f), checks);
    ++instances;
  }
  o.summary = std::to_string(instances) + " instances, " + std::to_string(checks) + " checks";
}

void mixed_volumes(Outcome& o) {
  std::mt19937_64 rng(77);
  int tuples = 0;
  while (tuples < 50) {
    const int n = 1 + tuples % 3;
    std::uniform_int_distribution<long> c(0, 2);
    std::vector<Polytope> polys;
    for (int i = 0; i < n; ++i) {
      IntMatrix pts;
      for (int j = 0; j < n + 2; ++j) {
        IntVec p(n);
        for (auto& x : p) x = c(rng);
        pts.push_back(p);
      }
      polys.emplace_back(pts);
    }
    if (polys[0].dim() != n) continue;
    ++tuples;
    std::vector<Polytope> same(n, polys[0]);
    o.expect(mixed_volume(same) == normalized_volume(polys[0]), "equal-argument identity");
    const Integer base = mixed_volume(polys);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    while (std::next_permutation(order.begin(), order.end())) {
      std::vector<Polytope> perm;
      for (int i : order) perm.push_back(polys[i]);
      o.expect(mixed_volume(perm) == base, "permutation symmetry");
    }
  }
  std::vector<Polytope> segs{Polytope({IntVec{0, 0}, IntVec{1, 0}}), Polytope({IntVec{0, 0}, IntVec{0, 1}})};
  o.expect(mixed_volume(segs) == 1, "two unit segments");
  o.summary = std::to_string(tuples) + " tuples";
}

void complete_intersections(Outcome& o) {
  std::mt19937_64 rng(4242);
  int checks = 0;
  for (int i = 0; i < 50; ++i) {
    InstanceShape shape;
    shape.n = 1 + i % 3;
    shape.ambient = i % 2 ? Ambient::Affine : Ambient::Torus;
    shape.points = std::min(12, 3 + shape.n * 2);
    CISystem sys = random_complete_intersection(rng, shape, 1);
    o.reports(consistency_suite(sys), checks);
  }
  int k2 = 0;
  for (int i = 0; i < 50; ++i) {
    InstanceShape shape;
    shape.n = 2 + i % 2;
    shape.ambient = i % 2 ? Ambient::Affine : Ambient::Torus;
    shape.points = shape.n + 2;
    shape.max_coord = 2;
    shape.max_height = 3;
    CISystem sys = random_complete_intersection(rng, shape, 2);
    o.reports(consistency_suite(sys), checks);
    ++k2;
  }
  o.summary = "50 k=1 and " + std::to_string(k2) + " k=2 systems, " + std::to_string(checks) + " checks";
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run("AC1", "golden instance A (torus, 1 - t*x1^3)", 1.0, golden_a);
  ok &= run("AC2", "golden instance B (affine, x1^2 - t)", 1.0, golden_b);
  ok &= run("AC3", "g of m-gons and local h of the split segment", 60.0, kernels);
  ok &= run("AC4", "random property suite", 600.0, property_suite);
  ok &= run("AC5", "mixed volume identities", 60.0, mixed_volumes);
  ok &= run("AC6", "complete intersections", 600.0, complete_intersections);
  return ok ? 0 : 1;
}
