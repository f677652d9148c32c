#include "nhodge/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "nhodge/errors.hpp"

namespace nhodge {
namespace {

int variable_rank(const std::string& v) {
  static const char* fixed[] = {"t", "s", "u", "v", "w"};
  for (int i = 0; i < 5; ++i)
    if (v == fixed[i]) return i;
  return 5;
}

bool variable_less(const std::string& a, const std::string& b) {
  int ra = variable_rank(a), rb = variable_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

IntPoly::Exponents embed(const IntPoly::Exponents& e, const std::vector<int>& positions, std::size_t width) {
  IntPoly::Exponents out(width, 0);
  for (std::size_t i = 0; i < e.size(); ++i) out[positions[i]] = e[i];
  return out;
}

}  // namespace

std::vector<std::string> canonical_variable_order(std::vector<std::string> vars) {
  std::sort(vars.begin(), vars.end(), variable_less);
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

IntPoly::IntPoly(long c) {
  if (c != 0) terms_[{}] = c;
}

IntPoly::IntPoly(const Integer& c) {
  if (c != 0) terms_[{}] = c;
}

IntPoly IntPoly::variable(const std::string& name) {
  IntPoly p;
  p.vars_ = {name};
  p.terms_[{1}] = 1;
  return p;
}

IntPoly IntPoly::monomial(const Monomial& m) {
  IntPoly p;
  if (m.coefficient == 0) return p;
  std::vector<std::string> vars;
  for (const auto& [v, e] : m.exponents) vars.push_back(v);
  p.vars_ = canonical_variable_order(vars);
  Exponents e(p.vars_.size(), 0);
  for (std::size_t i = 0; i < p.vars_.size(); ++i) e[i] = m.exponents.at(p.vars_[i]);
  p.terms_[e] = m.coefficient;
  return p;
}

IntPoly IntPoly::from_terms(std::vector<std::string> vars, TermMap terms) {
  IntPoly p;
  std::vector<std::string> sorted = canonical_variable_order(vars);
  if (sorted.size() != vars.size()) raise(ErrorCode::Internal, "duplicate polynomial variable");
  std::vector<int> positions(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i)
    positions[i] = static_cast<int>(std::find(sorted.begin(), sorted.end(), vars[i]) - sorted.begin());
  p.vars_ = sorted;
  for (auto& [e, c] : terms) {
    if (e.size() != vars.size()) raise(ErrorCode::Internal, "exponent vector length mismatch");
    p.add_term(embed(e, positions, sorted.size()), c);
  }
  return p;
}

IntPoly IntPoly::univariate(const std::string& var, const std::vector<Integer>& coeffs) {
  IntPoly p;
  p.vars_ = {var};
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.terms_[{static_cast<int>(i)}] = coeffs[i];
  return p;
}

IntPoly IntPoly::parse(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> Integer {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw SyntaxError(pos, "expected integer");
    return Integer(text.substr(start, pos - start));
  };
  IntPoly result;
  skip();
  int sign = 1;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  }
  while (true) {
    skip();
    Monomial m;
    m.coefficient = sign;
    bool any = false;
    while (true) {
      skip();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        m.coefficient *= read_int();
        any = true;
      } else if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string name = text.substr(start, pos - start);
        int e = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          e = static_cast<int>(read_int().get_si());
        }
        m.exponents[name] += e;
        any = true;
      } else {
        throw SyntaxError(pos, "expected coefficient or variable");
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) throw SyntaxError(pos, "empty term");
    result += IntPoly::monomial(m);
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '+' && text[pos] != '-') throw SyntaxError(pos, "expected '+' or '-'");
    sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  }
  return result;
}

bool IntPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return false;
  return true;
}

const IntPoly& IntPoly::require_polynomial(const std::string& context) const {
  if (!is_polynomial()) raise(ErrorCode::NonPolynomial, context + ": negative exponent in " + to_string());
  return *this;
}

Integer IntPoly::coefficient(const std::map<std::string, int>& exps) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [v, k] : exps) {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) {
      if (k != 0) return 0;
      continue;
    }
    e[it - vars_.begin()] = k;
  }
  auto found = terms_.find(e);
  return found == terms_.end() ? Integer(0) : found->second;
}

Integer IntPoly::coeff(const std::string& var, int k) const { return coefficient({{var, k}}); }

std::vector<Integer> IntPoly::coefficients(const std::string& var) const {
  int top = max_degree(var);
  std::vector<Integer> out(top < 0 ? 0 : top + 1, 0);
  for (const auto& [e, c] : terms_) {
    int k = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == var) {
        k = e[i];
      } else if (e[i] != 0) {
        raise(ErrorCode::Internal, "coefficients(" + var + ") of multivariate " + to_string());
      }
    }
    if (k < 0) raise(ErrorCode::NonPolynomial, "negative power of " + var + " in " + to_string());
    out[k] = c;
  }
  return out;
}

int IntPoly::max_degree(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (terms_.empty()) return -1;
  if (it == vars_.end()) return 0;
  std::size_t i = it - vars_.begin();
  int best = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) best = std::max(best, e[i]);
  return best;
}

int IntPoly::min_degree(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (terms_.empty() || it == vars_.end()) return 0;
  std::size_t i = it - vars_.begin();
  int best = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) best = std::min(best, e[i]);
  return best;
}

IntPoly IntPoly::with_variables(const std::vector<std::string>& vars) const {
  std::vector<std::string> target = canonical_variable_order(vars);
  std::vector<int> positions(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(target.begin(), target.end(), vars_[i]);
    if (it == target.end()) raise(ErrorCode::Internal, "variable " + vars_[i] + " missing from target list");
    positions[i] = static_cast<int>(it - target.begin());
  }
  IntPoly out;
  out.vars_ = target;
  for (const auto& [e, c] : terms_) out.terms_.emplace(embed(e, positions, target.size()), c);
  return out;
}

void IntPoly::unify_with(const IntPoly& other, IntPoly& embedded_other) {
  if (vars_ == other.vars_) {
    embedded_other = other;
    return;
  }
  std::vector<std::string> all = vars_;
  all.insert(all.end(), other.vars_.begin(), other.vars_.end());
  all = canonical_variable_order(all);
  if (all != vars_) *this = with_variables(all);
  embedded_other = other.with_variables(all);
}

void IntPoly::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (vars_ == other.vars_) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  IntPoly b;
  unify_with(other, b);
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) { return *this += -other; }

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  *this = *this * other;
  return *this;
}

IntPoly operator*(const IntPoly& a_in, const IntPoly& b_in) {
  IntPoly a = a_in;
  IntPoly b;
  a.unify_with(b_in, b);
  IntPoly out;
  out.vars_ = a.vars_;
  const std::size_t width = a.vars_.size();
  IntPoly::Exponents e(width);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < width; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

IntPoly operator-(const IntPoly& a) {
  IntPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const IntPoly& a_in, const IntPoly& b_in) {
  IntPoly a = a_in;
  IntPoly b;
  a.unify_with(b_in, b);
  return a.terms_ == b.terms_;
}

IntPoly IntPoly::substitute(const std::map<std::string, Monomial>& assignments) const {
  std::vector<std::string> out_vars;
  for (const auto& v : vars_)
    if (!assignments.count(v)) out_vars.push_back(v);
  for (const auto& [v, m] : assignments)
    for (const auto& [w, k] : m.exponents) out_vars.push_back(w);
  out_vars = canonical_variable_order(out_vars);
  auto index = [&](const std::string& v) {
    return static_cast<std::size_t>(std::find(out_vars.begin(), out_vars.end(), v) - out_vars.begin());
  };

  IntPoly out;
  out.vars_ = out_vars;
  for (const auto& [e, c] : terms_) {
    Exponents target(out_vars.size(), 0);
    Integer coef = c;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = assignments.find(vars_[i]);
      if (it == assignments.end()) {
        target[index(vars_[i])] += e[i];
        continue;
      }
      const Monomial& m = it->second;
      if (e[i] < 0 && abs(m.coefficient) != 1)
        raise(ErrorCode::NonPolynomial, "negative power of a non-unit substitution for " + vars_[i]);
      Integer factor;
      mpz_pow_ui(factor.get_mpz_t(), m.coefficient.get_mpz_t(), static_cast<unsigned long>(std::abs(e[i])));
      coef *= factor;
      for (const auto& [w, k] : m.exponents) target[index(w)] += k * e[i];
    }
    out.add_term(target, coef);
  }
  return out;
}

IntPoly IntPoly::evaluate(const std::string& var, const Integer& value) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return *this;
  const std::size_t idx = it - vars_.begin();
  std::vector<std::string> rest = vars_;
  rest.erase(rest.begin() + idx);
  IntPoly out;
  out.vars_ = rest;
  for (const auto& [e, c] : terms_) {
    if (e[idx] < 0) raise(ErrorCode::NonPolynomial, "evaluating negative power of " + var);
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(e[idx]));
    Exponents r = e;
    r.erase(r.begin() + idx);
    out.add_term(r, c * f);
  }
  return out;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = 1;
  IntPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Integer IntPoly::sum_of_coefficients() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Integer>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    long da = std::accumulate(a.first.begin(), a.first.end(), 0L);
    long db = std::accumulate(b.first.begin(), b.first.end(), 0L);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace nhodge
