#pragma once

#include <map>
#include <string>
#include <vector>

#include "nhodge/exact.hpp"

namespace nhodge {

enum class Ambient { Torus, Affine };

Ambient parse_ambient(const std::string& text);
std::string to_string(Ambient a);

// Laurent polynomial in t over Q: power -> nonzero coefficient.
using TCoeff = std::map<int, Rational>;

struct TPolynomial {
  Ambient ambient = Ambient::Torus;
  int n = 0;
  std::map<IntVec, TCoeff> terms;  // no empty TCoeff stored
};

// o(v) for every support vector.
using ValuationMap = std::map<IntVec, Integer>;

struct CISystem {
  std::vector<TPolynomial> polys;

  int k() const { return static_cast<int>(polys.size()); }
  int n() const { return polys.empty() ? 0 : polys.front().n; }
  Ambient ambient() const { return polys.empty() ? Ambient::Torus : polys.front().ambient; }
};

TPolynomial parse_poly(const std::string& text, Ambient ambient, int n);
// JSON form: {"n":..,"ambient":..,"terms":[{"exp":[..],"coeff":[[tpow,"num/den"],..]},..]}
TPolynomial parse_poly_json(const std::string& text);
// Dispatches on the first non-blank character: '{' selects JSON.
TPolynomial parse_poly_any(const std::string& text, Ambient ambient, int n);

std::string to_string(const TPolynomial& p);
std::string to_json_text(const TPolynomial& p);

ValuationMap valuations(const TPolynomial& p);

// Validates 1 <= k <= n and a shared (ambient, n).
CISystem make_ci_system(std::vector<TPolynomial> polys);

}  // namespace nhodge
