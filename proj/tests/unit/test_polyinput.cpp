#include <random>

#include "doctest.h"
#include "nhodge/errors.hpp"
#include "nhodge/polyinput.hpp"

using namespace nhodge;

namespace {

IntVec iv(std::initializer_list<long> xs) { return to_int_vec(std::vector<long>(xs)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_SUITE("polyinput") {

TEST_CASE("direct readings") {
  TPolynomial a = parse_poly("1 - t*x1^3", Ambient::Torus, 1);
  REQUIRE(a.terms.size() == 2);
  CHECK(a.terms.at(iv({0})) == TCoeff{{0, 1}});
  CHECK(a.terms.at(iv({3})) == TCoeff{{1, -1}});

  TPolynomial b = parse_poly("x1^2 - t", Ambient::Affine, 1);
  CHECK(b.terms.at(iv({2})) == TCoeff{{0, 1}});
  CHECK(b.terms.at(iv({0})) == TCoeff{{1, -1}});
}

TEST_CASE("coefficient forms") {
  TPolynomial p = parse_poly("(1/2 - 3*t^-1)*x1*x2^2 + 2/3 x2 + t^2", Ambient::Torus, 2);
  CHECK(p.terms.at(iv({1, 2})) == TCoeff{{-1, -3}, {0, make_rational(1, 2)}});
  CHECK(p.terms.at(iv({0, 1})) == TCoeff{{0, make_rational(2, 3)}});
  CHECK(p.terms.at(iv({0, 0})) == TCoeff{{2, 1}});
}

TEST_CASE("merging and cancellation") {
  TPolynomial p = parse_poly("x1 + 2*x1 - 3*x1 + t*x1^2 + t*x1^2", Ambient::Torus, 1);
  REQUIRE(p.terms.size() == 1);
  CHECK(p.terms.at(iv({2})) == TCoeff{{1, 2}});
}

TEST_CASE("valuations") {
  CHECK(valuations(parse_poly("1 - t*x1^3", Ambient::Torus, 1)) == ValuationMap{{iv({0}), 0}, {iv({3}), 1}});
  CHECK(valuations(parse_poly("(t^2+t^3)*x1", Ambient::Torus, 1)) == ValuationMap{{iv({1}), 2}});
  CHECK(code_of([] { valuations(parse_poly("x1 - x1", Ambient::Torus, 1)); }) == ErrorCode::Empty);
}

TEST_CASE("errors") {
  CHECK(code_of([] { parse_poly("x1^-1", Ambient::Affine, 1); }) == ErrorCode::NegativeExponent);
  CHECK(code_of([] { parse_poly("x3", Ambient::Torus, 2); }) == ErrorCode::BadVariable);
  CHECK(code_of([] { parse_poly("x0", Ambient::Torus, 2); }) == ErrorCode::BadVariable);
  CHECK(code_of([] { parse_poly("1 + + x1", Ambient::Torus, 1); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_poly("(1 + t", Ambient::Torus, 1); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_poly("y1", Ambient::Torus, 1); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_poly("1/0", Ambient::Torus, 1); }) == ErrorCode::Syntax);
  try {
    parse_poly("1 + x1 ?", Ambient::Torus, 1);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 7);
  }
}

TEST_CASE("json input") {
  TPolynomial p = parse_poly_json(
      R"({"n":1,"ambient":"affine","terms":[{"exp":[2],"coeff":[[0,"1/1"]]},{"exp":[0],"coeff":[[1,"-1"]]}]})");
  CHECK(p.ambient == Ambient::Affine);
  CHECK(p.terms == parse_poly("x1^2 - t", Ambient::Affine, 1).terms);
  CHECK(code_of([] { parse_poly_json("{\"n\":1}"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_poly_json("{not json"); }) == ErrorCode::Syntax);
  CHECK(parse_poly_any("  {\"n\":1,\"ambient\":\"torus\",\"terms\":[]}", Ambient::Affine, 3).ambient == Ambient::Torus);
}

TEST_CASE("print and reparse round trip") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> e(-2, 3), c(-4, 4), tp(-1, 3), cnt(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    TPolynomial p;
    p.n = 2;
    for (long i = cnt(rng); i > 0; --i) {
      IntVec ex = iv({e(rng), e(rng)});
      Rational r = make_rational(c(rng), 1 + (trial % 3));
      if (r == 0) continue;
      p.terms[ex][static_cast<int>(tp(rng))] += r;
    }
    for (auto it = p.terms.begin(); it != p.terms.end();) {
      for (auto jt = it->second.begin(); jt != it->second.end();) jt = jt->second == 0 ? it->second.erase(jt) : std::next(jt);
      it = it->second.empty() ? p.terms.erase(it) : std::next(it);
    }
    if (p.terms.empty()) continue;
    CHECK(parse_poly(to_string(p), Ambient::Torus, 2).terms == p.terms);
    CHECK(parse_poly_json(to_json_text(p)).terms == p.terms);
  }
}

TEST_CASE("systems") {
  auto f = parse_poly("x1 + x2 + t", Ambient::Torus, 2);
  CHECK(make_ci_system({f, f}).k() == 2);
  CHECK(code_of([&] { make_ci_system({f, f, f}); }) == ErrorCode::Syntax);
  auto g = parse_poly("x1 + t", Ambient::Torus, 1);
  CHECK(code_of([&] { make_ci_system({f, g}); }) == ErrorCode::Syntax);
}

}  // TEST_SUITE
