#pragma once

#include <map>
#include <string>
#include <vector>

#include "nhodge/exact.hpp"

namespace nhodge {

// Laurent monomial with an integer coefficient, used as a substitution target.
struct Monomial {
  Integer coefficient = 1;
  std::map<std::string, int> exponents;
};

// Sparse Laurent polynomial with integer coefficients. Variables are kept in a
// canonical order (t, s, u, v, w, then alphabetical); binary operations embed both
// operands into the union of their variables.
class IntPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Integer>;

  IntPoly() = default;
  IntPoly(long c);  // NOLINT: implicit constants keep formulas readable
  IntPoly(const Integer& c);  // NOLINT

  static IntPoly variable(const std::string& name);
  static IntPoly monomial(const Monomial& m);
  static IntPoly from_terms(std::vector<std::string> vars, TermMap terms);
  // Univariate from ascending coefficients.
  static IntPoly univariate(const std::string& var, const std::vector<Integer>& coeffs);
  // Parses "1 + 2*t - u^2*v^-1" style text (integer coefficients only).
  static IntPoly parse(const std::string& text);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const;
  // Throws E_NONPOLYNOMIAL with the given context if a negative exponent remains.
  const IntPoly& require_polynomial(const std::string& context) const;

  Integer coefficient(const std::map<std::string, int>& exps) const;
  // Coefficient of var^k in a polynomial whose only variable is var (or a constant).
  Integer coeff(const std::string& var, int k) const;
  // Ascending coefficient list in var from degree 0 to max degree; requires univariate polynomial.
  std::vector<Integer> coefficients(const std::string& var) const;
  int max_degree(const std::string& var) const;  // -1 for zero polynomial when var absent
  int min_degree(const std::string& var) const;

  IntPoly with_variables(const std::vector<std::string>& vars) const;
  IntPoly substitute(const std::map<std::string, Monomial>& assignments) const;
  IntPoly evaluate(const std::string& var, const Integer& value) const;  // var must occur with exponents >= 0
  IntPoly pow(unsigned e) const;
  Integer sum_of_coefficients() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b);

  // Canonical text: graded by total degree, ascending.
  std::string to_string() const;

 private:
  void unify_with(const IntPoly& other, IntPoly& embedded_other);
  void add_term(const Exponents& e, const Integer& c);

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::vector<std::string> canonical_variable_order(std::vector<std::string> vars);

}  // namespace nhodge
