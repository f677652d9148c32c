#include <random>

#include "doctest.h"
#include "nhodge/errors.hpp"
#include "nhodge/intpoly.hpp"

using namespace nhodge;

namespace {

IntPoly P(const char* s) { return IntPoly::parse(s); }

IntPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), exp(-1, 2), terms(0, 4);
  IntPoly p;
  const char* vars[] = {"u", "v", "w"};
  for (int i = terms(rng); i > 0; --i) {
    Monomial m;
    m.coefficient = coef(rng);
    for (const char* v : vars) m.exponents[v] = exp(rng);
    p += IntPoly::monomial(m);
  }
  return p;
}

}  // namespace

TEST_SUITE("intpoly") {

TEST_CASE("basic arithmetic") {
  CHECK(P("1+t") * P("1-t") == P("1 - t^2"));
  CHECK((P("1+t") - P("1+t")).is_zero());
  CHECK(P("2*u*v + 3") + P("-3") == P("2*u*v"));
  CHECK(P("1+t").pow(3) == P("1 + 3*t + 3*t^2 + t^3"));
  CHECK(IntPoly(0).is_zero());
  CHECK(IntPoly(5) == P("5"));
}

TEST_CASE("reversal identity") {
  IntPoly p = P("t + t^2");
  IntPoly r = p.substitute({{"t", Monomial{1, {{"t", -1}}}}}) * P("t^2");
  CHECK(r == P("t + 1"));
  CHECK(r.is_polynomial());
  CHECK_FALSE(p.substitute({{"t", Monomial{1, {{"t", -1}}}}}).is_polynomial());
  CHECK_THROWS_AS(P("t^-1").require_polynomial("test"), Error);
}

TEST_CASE("diagonal substitution") {
  IntPoly p = P("u^2*v + u*v");
  IntPoly d = p.substitute({{"u", Monomial{1, {{"s", 1}}}}, {"v", Monomial{1, {{"s", 1}}}}});
  CHECK(d == P("s^3 + s^2"));
}

TEST_CASE("mixed-variable substitution into u/v and uvw^2") {
  IntPoly l = P("1 + 2*u");
  IntPoly q = l.substitute({{"u", Monomial{1, {{"u", 1}, {"v", -1}}}}}) * P("v^2");
  CHECK(q == P("v^2 + 2*u*v"));
  IntPoly g = P("1 + t");
  CHECK(g.substitute({{"t", Monomial{1, {{"u", 1}, {"v", 1}, {"w", 2}}}}}) == P("1 + u*v*w^2"));
}

TEST_CASE("coefficient access and printing") {
  IntPoly p = P("3 - t + 4*t^3");
  CHECK(p.coeff("t", 0) == 3);
  CHECK(p.coeff("t", 1) == -1);
  CHECK(p.coeff("t", 2) == 0);
  CHECK(p.max_degree("t") == 3);
  auto c = p.coefficients("t");
  REQUIRE(c.size() == 4);
  CHECK(c[3] == 4);
  CHECK(p.to_string() == "3 - t + 4*t^3");
  CHECK(P("w^2*u*v + 1").to_string() == "1 + u*v*w^2");
  CHECK(IntPoly().to_string() == "0");
  CHECK(P("u*v*w").evaluate("w", 1) == P("u*v"));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    IntPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

}  // TEST_SUITE
