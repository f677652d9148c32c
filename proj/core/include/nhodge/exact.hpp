#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace nhodge {

using Integer = mpz_class;
using Rational = mpq_class;  // kept canonical: every constructor path calls canonicalize()

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;
using IntMatrix = std::vector<IntVec>;  // row-major
using RatMatrix = std::vector<RatVec>;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);  // "a" or "a/b"
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);  // always "num/den"
std::string to_string(const IntVec& v);

Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);
Rational frac_of(const Rational& x);  // x - floor(x), in [0,1)
Integer lcm_of(const Integer& a, const Integer& b);
Integer gcd_of(const IntVec& v);
bool is_integral(const Rational& x);
bool fits_int64(const Integer& x);
std::int64_t to_int64(const Integer& x);  // caller checks fits_int64

Integer binomial(long n, long k);

IntVec to_int_vec(const std::vector<long>& v);
RatVec to_rat_vec(const IntVec& v);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
Integer dot(const IntVec& a, const IntVec& b);
Rational dot(const RatVec& a, const IntVec& b);
// Scales a rational vector to the primitive integer vector on the same ray.
IntVec primitive_direction(const RatVec& v);
IntVec primitive(IntVec v);

// lambda = exp(2*pi*i*q), 0 <= q < 1.
class RootOfUnity {
 public:
  RootOfUnity() : q_(0) {}
  explicit RootOfUnity(const Rational& q);
  RootOfUnity(long num, long den);

  static RootOfUnity parse(const std::string& text);

  const Rational& phase() const { return q_; }
  Integer order() const { return q_.get_den(); }
  bool is_one() const { return q_ == 0; }
  // epsilon(lambda): 1 for lambda = 1, else 0
  int epsilon() const { return is_one() ? 1 : 0; }
  std::string to_string() const;

  // Ordered by (order, numerator), the order used for spectra.
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) { return a.q_ == b.q_; }
  friend bool operator<(const RootOfUnity& a, const RootOfUnity& b);

 private:
  Rational q_;
};

// All roots of unity whose order divides n, sorted.
std::vector<RootOfUnity> roots_dividing(const Integer& n);

}  // namespace nhodge
