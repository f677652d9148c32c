#include <optional>
#include <random>

#include "doctest.h"
#include "nhodge/cayley.hpp"
#include "nhodge/newton.hpp"
#include "nhodge/polyinput.hpp"
#include "support.hpp"

using namespace nhodge;
using namespace test_support;

namespace {

std::vector<std::string> phases(const std::vector<RootOfUnity>& roots) {
  std::vector<std::string> out;
  for (const auto& r : roots) out.push_back(r.to_string());
  return out;
}

std::optional<NewtonData> sample_data(std::mt19937_64& rng, Ambient a, int n, int count) {
  std::uniform_int_distribution<long> c(0, 3), h(0, 5);
  ValuationMap m;
  for (int i = 0; i < count; ++i) {
    IntVec v(n);
    for (auto& x : v) x = c(rng);
    m[v] = h(rng);
  }
  try {
    return build_newton_data(a, n, m);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_SUITE("newton") {

TEST_CASE("torus cubic") {
  NewtonData nd = build_newton_data(parse_poly("1 - t*x1^3", Ambient::Torus, 1));
  CHECK(nd.dim() == 1);
  CHECK(nd.cells().size() == 4);
  const int edge = cell_of(nd, {iv({0}), iv({3})});
  const int v0 = cell_of(nd, {iv({0})});
  const int v3 = cell_of(nd, {iv({3})});
  CHECK(nd.cell(edge).m == 3);
  CHECK(nd.cell(v0).m == 1);
  CHECK(nd.cell(v3).m == 1);
  CHECK(cell_m_index(nd, edge) == 3);
  CHECK(nd.cell(v0).boundary);
  CHECK_FALSE(nd.cell(edge).boundary);
  CHECK(nd.subdivision().nu_at(to_rat_vec(iv({1}))) == make_rational(1, 3));
  CHECK(nd.bad_orders() == std::set<Integer>{1});
  CHECK(nd.is_bad(RootOfUnity(0, 1)));
  CHECK_FALSE(nd.is_bad(RootOfUnity(1, 3)));
  CHECK(nd.spectrum_order() == 3);
  CHECK(phases(nd.spectrum()) == std::vector<std::string>{"0/1", "1/3", "2/3"});
  CHECK(code_of([&] { cell_m_index(nd, 0); }) == ErrorCode::EmptyCell);

  auto init = initial_poly(parse_poly("1 - t*x1^3", Ambient::Torus, 1), nd, edge);
  CHECK(init == std::map<IntVec, Rational>{{iv({0}), 1}, {iv({3}), -1}});
  auto vinit = initial_poly(parse_poly("1 - t*x1^3", Ambient::Torus, 1), nd, v0);
  CHECK(vinit == std::map<IntVec, Rational>{{iv({0}), 1}});
}

TEST_CASE("affine square root") {
  TPolynomial f = parse_poly("x1^2 - t", Ambient::Affine, 1);
  NewtonData nd = build_newton_data(f);
  const int edge = cell_of(nd, {iv({0}), iv({2})});
  CHECK(nd.cell(edge).m == 2);
  CHECK(nd.subdivision().nu_at(to_rat_vec(iv({0}))) == 1);
  CHECK(nd.subdivision().nu_at(to_rat_vec(iv({2}))) == 0);
  REQUIRE(nd.infinity_faces().size() == 1);
  CHECK(nd.infinity_faces().front() == face_of(nd, {iv({2})}));
  CHECK(nd.cell(cell_of(nd, {iv({2})})).at_infinity);
  CHECK_FALSE(nd.cell(cell_of(nd, {iv({0})})).at_infinity);
  CHECK(nd.bad_orders() == std::set<Integer>{1});
  CHECK_FALSE(nd.is_bad(RootOfUnity(1, 2)));
  CHECK(phases(nd.spectrum()) == std::vector<std::string>{"0/1", "1/2"});

  Predicates pr = predicates(nd);
  CHECK(pr.is_convenient);
  CHECK(pr.satisfies_condition_s);

  auto init = initial_poly(f, nd, edge);
  CHECK(init == std::map<IntVec, Rational>{{iv({2}), 1}, {iv({0}), -1}});
}

TEST_CASE("flat heights give a trivial spectrum") {
  NewtonData nd = line_data(Ambient::Torus, {{0, 0}, {1, 0}, {2, 0}});
  CHECK(phases(nd.spectrum()) == std::vector<std::string>{"0/1"});
  CHECK(nd.subdivision().full_cells().size() == 1);
}

TEST_CASE("degenerate inputs") {
  CHECK(code_of([] { build_newton_data(parse_poly("x1", Ambient::Torus, 1)); }) == ErrorCode::Degenerate);
  CHECK(code_of([] { build_newton_data(parse_poly("x1*x2 - t", Ambient::Affine, 2)); }) == ErrorCode::Degenerate);
}

TEST_CASE("non-convenient affine support") {
  NewtonData nd = build_newton_data(parse_poly("x1 + x1^2 + t*x1*x2", Ambient::Affine, 2));
  CHECK_FALSE(predicates(nd).is_convenient);
}

TEST_CASE("random invariants") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 80 && checked < 40; ++trial) {
    const int n = 1 + trial % 3;
    const Ambient a = trial % 2 ? Ambient::Affine : Ambient::Torus;
    auto nd = sample_data(rng, a, n, 4 + 2 * n);
    if (!nd) continue;
    ++checked;
    const auto& s = nd->subdivision();
    for (std::size_t i = 1; i < s.cells().size(); ++i) {
      const auto& cell = s.cells()[i];
      for (int v : cell.vertices) CHECK(is_integral(s.nu(i)(to_rat_vec(s.points()[v]))));
      CHECK(cell.points.subset_of(nd->polytope().faces()[nd->cell(i).carrier_face].points));
      for (std::size_t j = 1; j < s.cells().size(); ++j)
        if (i != j && s.is_face_of(i, j)) CHECK(nd->cell(j).m % nd->cell(i).m == 0);
    }
    CHECK(nd->bad_orders().count(1) == 1);

    // the weight of a lattice point in cell F has order dividing m_F
    for (int c : s.full_cells()) {
      const auto& form = s.nu_form(c);
      const Integer m_cell = nd->cell(c).m;
      for (long m = 1; m <= nd->dim() + 1; ++m) {
        s.cell_polytope(c).for_each_lattice_point(m, [&](const std::vector<std::int64_t>& x) {
          Integer v = Integer(static_cast<long>(form.constant)) * m;
          for (std::size_t k = 0; k < x.size(); ++k) v += Integer(static_cast<long>(form.coeffs[k])) * static_cast<long>(x[k]);
          Rational w = frac_of(make_rational(v, static_cast<long>(form.denominator)));
          CHECK(m_cell % w.get_den() == 0);
        });
      }
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("Cayley data") {
  CISystem one;
  one.polys.push_back(parse_poly("1 - t*x1^3", Ambient::Torus, 1));
  CayleyData c1 = build_cayley_data(one);
  CHECK(c1.cayley.dim() == 1);
  for (const auto& p : c1.cayley.polytope().points()) CHECK(p[0] == 1);
  CHECK(divisor_closure(c1.cayley.bad_orders()) == std::set<Integer>{1});
  CHECK(phases(c1.cayley.spectrum()) == std::vector<std::string>{"0/1", "1/3", "2/3"});

  CISystem two;
  two.polys.push_back(parse_poly("x1 + x2 + t", Ambient::Torus, 2));
  two.polys.push_back(parse_poly("x1 + x2 + t", Ambient::Torus, 2));
  CayleyData c2 = build_cayley_data(two);
  CHECK(c2.cayley.dim() == 3);
  CHECK(c2.cayley.polytope().points().size() == 6);
  CHECK(c2.minkowski.dim() == 2);
  CHECK(c2.subset_faces[3] == static_cast<int>(c2.cayley.polytope().faces().size()) - 1);
  CHECK(c2.cayley.polytope().faces()[c2.subset_faces[1]].dim == 2);

  CISystem three = two;
  three.polys.push_back(parse_poly("x1 + t", Ambient::Torus, 2));
  CHECK(code_of([&] { build_cayley_data(three); }) == ErrorCode::Syntax);
}

TEST_CASE("divisor closure") {
  CHECK(divisor_closure({6, 4}) == std::set<Integer>{1, 2, 3, 4, 6});
  CHECK(divisor_closure({1}) == std::set<Integer>{1});
}

}
