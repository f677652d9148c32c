#include "nhodge/exact.hpp"

#include <limits>
#include <numeric>

#include "nhodge/errors.hpp"

namespace nhodge {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) raise(ErrorCode::Internal, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den <= 0) raise(ErrorCode::Syntax, "non-positive denominator in '" + text + "'");
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    raise(ErrorCode::Syntax, "not a rational number: '" + text + "'");
  }
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

Integer floor_of(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Rational frac_of(const Rational& x) { return x - Rational(floor_of(x)); }

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd_of(const IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

bool fits_int64(const Integer& x) {
  return x >= Integer(std::numeric_limits<long>::min()) &&
         x <= Integer(std::numeric_limits<long>::max());
}

std::int64_t to_int64(const Integer& x) { return x.get_si(); }

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

IntVec to_int_vec(const std::vector<long>& v) {
  IntVec r;
  r.reserve(v.size());
  for (long x : v) r.emplace_back(x);
  return r;
}

RatVec to_rat_vec(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVec& a, const IntVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec primitive(IntVec v) {
  Integer g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

IntVec primitive_direction(const RatVec& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm_of(den, x.get_den());
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_num() * (den / v[i].get_den());
  return primitive(std::move(r));
}

RootOfUnity::RootOfUnity(const Rational& q) : q_(frac_of(q)) {}

RootOfUnity::RootOfUnity(long num, long den) : RootOfUnity(make_rational(num, den)) {}

RootOfUnity RootOfUnity::parse(const std::string& text) { return RootOfUnity(parse_rational(text)); }

std::string RootOfUnity::to_string() const { return nhodge::to_string(q_); }

bool operator<(const RootOfUnity& a, const RootOfUnity& b) {
  if (a.q_.get_den() != b.q_.get_den()) return a.q_.get_den() < b.q_.get_den();
  return a.q_.get_num() < b.q_.get_num();
}

std::vector<RootOfUnity> roots_dividing(const Integer& n) {
  std::vector<RootOfUnity> out;
  if (!n.fits_slong_p() || n > 100000) raise(ErrorCode::TooLarge, "spectrum order " + n.get_str());
  long N = n.get_si();
  for (long d = 1; d <= N; ++d) {
    if (N % d) continue;
    for (long a = 0; a < d; ++a) {
      if (std::gcd(a, d) == 1) out.emplace_back(a, d);
    }
  }
  return out;
}

}  // namespace nhodge
