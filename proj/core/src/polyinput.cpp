#include "nhodge/polyinput.hpp"

#include <cctype>

#include "json.hpp"

#include "nhodge/errors.hpp"

namespace nhodge {
namespace {

using PolyMap = std::map<IntVec, TCoeff>;

void add_into(PolyMap& acc, const IntVec& e, int tpow, const Rational& c) {
  if (c == 0) return;
  TCoeff& coeff = acc[e];
  Rational& slot = coeff[tpow];
  slot += c;
  if (slot == 0) coeff.erase(tpow);
  if (coeff.empty()) acc.erase(e);
}

PolyMap multiply(const PolyMap& a, const PolyMap& b) {
  PolyMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      IntVec e = add(ea, eb);
      for (const auto& [pa, ra] : ca)
        for (const auto& [pb, rb] : cb) add_into(out, e, pa + pb, ra * rb);
    }
  return out;
}

PolyMap unit(int n) {
  PolyMap p;
  p[IntVec(n, 0)][0] = 1;
  return p;
}

class Parser {
 public:
  Parser(const std::string& text, Ambient ambient, int n) : s_(text), ambient_(ambient), n_(n) {}

  PolyMap parse() {
    PolyMap p = sum();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 't' || c == 'x';
  }

  Integer digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected digits");
    return Integer(s_.substr(start, pos_ - start));
  }

  long signed_int() {
    skip();
    bool neg = false;
    if (at('-') || at('+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::size_t where = pos_;
    Integer v = digits();
    if (!v.fits_slong_p() || abs(v) > 1000000) throw SyntaxError(where, "exponent out of range");
    return neg ? -v.get_si() : v.get_si();
  }

  long optional_power() {
    if (!at('^')) return 1;
    ++pos_;
    return signed_int();
  }

  PolyMap sum() {
    PolyMap acc;
    int sign = 1;
    if (at('+') || at('-')) {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    while (true) {
      PolyMap t = term();
      for (const auto& [e, c] : t)
        for (const auto& [p, r] : c) add_into(acc, e, p, sign * r);
      if (at('+') || at('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        continue;
      }
      return acc;
    }
  }

  PolyMap term() {
    PolyMap acc = factor();
    while (true) {
      if (at('*')) {
        ++pos_;
        acc = multiply(acc, factor());
      } else if (starts_factor()) {
        acc = multiply(acc, factor());
      } else {
        return acc;
      }
    }
  }

  PolyMap factor() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const std::size_t where = pos_;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      Integer den = 1;
      if (at('/')) {
        ++pos_;
        std::size_t dpos = pos_;
        den = digits();
        if (den == 0) throw SyntaxError(dpos, "zero denominator");
      }
      PolyMap p;
      add_into(p, IntVec(n_, 0), 0, make_rational(num, den));
      return p;
    }
    if (c == '(') {
      ++pos_;
      PolyMap inner = sum();
      if (!at(')')) throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      long e = optional_power();
      if (e < 0) throw SyntaxError(where, "negative power of a parenthesized sum");
      PolyMap out = unit(n_);
      for (long i = 0; i < e; ++i) out = multiply(out, inner);
      return out;
    }
    if (c == 't') {
      ++pos_;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
        throw SyntaxError(where, "unknown identifier");
      long e = optional_power();
      PolyMap p;
      add_into(p, IntVec(n_, 0), static_cast<int>(e), 1);
      return p;
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw SyntaxError(where, "expected variable index after 'x'");
      Integer idx = digits();
      if (idx < 1 || idx > n_)
        raise(ErrorCode::BadVariable, "x" + idx.get_str() + " at offset " + std::to_string(where) +
                                          " exceeds n = " + std::to_string(n_));
      long e = optional_power();
      if (e < 0 && ambient_ == Ambient::Affine)
        raise(ErrorCode::NegativeExponent,
              "x" + idx.get_str() + "^" + std::to_string(e) + " at offset " + std::to_string(where) +
                  " in affine ambient");
      IntVec ev(n_, 0);
      ev[idx.get_si() - 1] = e;
      PolyMap p;
      add_into(p, ev, 0, 1);
      return p;
    }
    throw SyntaxError(where, std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  Ambient ambient_;
  int n_;
};

void check_affine(const TPolynomial& p) {
  if (p.ambient != Ambient::Affine) return;
  for (const auto& [e, c] : p.terms)
    for (const auto& x : e)
      if (x < 0) raise(ErrorCode::NegativeExponent, "exponent " + to_string(e) + " in affine ambient");
}

}  // namespace

Ambient parse_ambient(const std::string& text) {
  if (text == "torus") return Ambient::Torus;
  if (text == "affine") return Ambient::Affine;
  raise(ErrorCode::Syntax, "ambient must be 'torus' or 'affine', got '" + text + "'");
}

std::string to_string(Ambient a) { return a == Ambient::Torus ? "torus" : "affine"; }

TPolynomial parse_poly(const std::string& text, Ambient ambient, int n) {
  if (n < 1) raise(ErrorCode::Syntax, "n must be positive");
  TPolynomial p;
  p.ambient = ambient;
  p.n = n;
  p.terms = Parser(text, ambient, n).parse();
  return p;
}

TPolynomial parse_poly_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(e.byte, "invalid JSON");
  }
  try {
    TPolynomial p;
    p.n = j.at("n").get<int>();
    if (p.n < 1) raise(ErrorCode::Syntax, "n must be positive");
    p.ambient = parse_ambient(j.at("ambient").get<std::string>());
    for (const auto& t : j.at("terms")) {
      IntVec e;
      for (const auto& x : t.at("exp")) {
        e.push_back(x.is_string() ? Integer(x.get<std::string>()) : Integer(x.get<long>()));
      }
      if (static_cast<int>(e.size()) != p.n) raise(ErrorCode::Syntax, "exponent " + to_string(e) + " has wrong length");
      for (const auto& pair : t.at("coeff")) {
        int power = pair.at(0).get<int>();
        const auto& c = pair.at(1);
        Rational r = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
        add_into(p.terms, e, power, r);
      }
    }
    check_affine(p);
    return p;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::Syntax, std::string("malformed polynomial JSON: ") + e.what());
  }
}

TPolynomial parse_poly_any(const std::string& text, Ambient ambient, int n) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_poly_json(text);
    break;
  }
  return parse_poly(text, ambient, n);
}

std::string to_string(const TPolynomial& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, coeff] : p.terms) {
    if (!first) out += " + ";
    first = false;
    std::string c = "(";
    bool first_c = true;
    for (const auto& [pow, r] : coeff) {
      if (first_c) {
        c += r < 0 ? "-" : "";
      } else {
        c += r < 0 ? " - " : " + ";
      }
      first_c = false;
      c += Rational(abs(r)).get_str();
      if (pow != 0) c += "*t^" + std::to_string(pow);
    }
    out += c + ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += "*x" + std::to_string(i + 1) + "^" + e[i].get_str();
    }
  }
  return out;
}

std::string to_json_text(const TPolynomial& p) {
  nlohmann::json j;
  j["n"] = p.n;
  j["ambient"] = to_string(p.ambient);
  j["terms"] = nlohmann::json::array();
  for (const auto& [e, coeff] : p.terms) {
    nlohmann::json t;
    t["exp"] = nlohmann::json::array();
    for (const auto& x : e) t["exp"].push_back(x.get_si());
    t["coeff"] = nlohmann::json::array();
    for (const auto& [pow, r] : coeff) t["coeff"].push_back({pow, to_string(r)});
    j["terms"].push_back(t);
  }
  return j.dump();
}

ValuationMap valuations(const TPolynomial& p) {
  if (p.terms.empty()) raise(ErrorCode::Empty, "polynomial has empty support");
  ValuationMap out;
  for (const auto& [e, coeff] : p.terms) out[e] = coeff.begin()->first;
  return out;
}

CISystem make_ci_system(std::vector<TPolynomial> polys) {
  if (polys.empty()) raise(ErrorCode::Syntax, "a system needs at least one polynomial");
  const int n = polys.front().n;
  const Ambient a = polys.front().ambient;
  for (const auto& p : polys) {
    if (p.n != n || p.ambient != a) raise(ErrorCode::Syntax, "polynomials of a system must share n and ambient");
  }
  if (static_cast<int>(polys.size()) > n)
    raise(ErrorCode::Syntax, "system has k = " + std::to_string(polys.size()) + " > n = " + std::to_string(n));
  return CISystem{std::move(polys)};
}

}  // namespace nhodge
