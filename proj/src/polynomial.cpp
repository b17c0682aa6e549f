#include "cdv/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>

namespace cdv {

int degree(const Exponent& e) {
  int d = 0;
  for (int v : e) {
    if (__builtin_add_overflow(d, v, &d)) throw std::overflow_error("exponent overflow");
  }
  return d;
}

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (int i = 0; i < kNumVars; ++i) {
    if (__builtin_add_overflow(a[i], b[i], &r[i])) throw std::overflow_error("exponent overflow");
  }
  return r;
}

bool strictly_dominates(const Exponent& a, const Exponent& b) {
  for (int i = 0; i < kNumVars; ++i) {
    if (a[i] < b[i]) return false;
  }
  return a != b;
}

std::string monomial_string(const Exponent& e) {
  std::string out;
  for (int i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kVarNames[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

bool grlex_less(const Exponent& a, const Exponent& b) {
  const int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a < b;
}

bool PrintOrder::operator()(const Exponent& a, const Exponent& b) const {
  const int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a > b;
}

Polynomial Polynomial::constant(const Rational& c) { return monomial(Exponent{}, c); }

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p;
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(int v) {
  Exponent e{};
  e[v] = 1;
  return monomial(e);
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const { return terms_.empty() ? -1 : degree(terms_.rbegin()->first); }

int Polynomial::order() const { return terms_.empty() ? -1 : degree(terms_.begin()->first); }

int Polynomial::degree_in(int v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

Exponent Polynomial::monomial_content() const {
  if (terms_.empty()) return Exponent{};
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

std::vector<Exponent> Polynomial::support() const {
  std::vector<Exponent> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    if (degree(e) > max_degree) break;
    r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    if (degree(e) == d) r.terms_.emplace(e, c);
  }
  return r;
}

Polynomial Polynomial::derivative(int v) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent d = e;
    --d[v];
    r.add_term(d, c * e[v]);
  }
  return r;
}

Polynomial Polynomial::evaluate(int v, const Rational& value) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    Exponent d = e;
    d[v] = 0;
    Rational pw = 1;
    for (int k = 0; k < e[v]; ++k) pw *= value;
    r.add_term(d, c * pw);
  }
  return r;
}

Polynomial Polynomial::divide_monomial(const Exponent& m) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    Exponent d{};
    for (int i = 0; i < kNumVars; ++i) {
      d[i] = e[i] - m[i];
      if (d[i] < 0) throw std::invalid_argument("monomial does not divide polynomial");
    }
    r.terms_.emplace(d, c);
  }
  return r;
}

Polynomial Polynomial::multiply_monomial(const Exponent& m) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(add(e, m), c);
  return r;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  for (int v : e) {
    if (v < 0) throw std::invalid_argument("negative exponent");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return multiply_truncated(a, b, INT_MAX);
}

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree) {
  Polynomial r;
  for (const auto& [ea, ca] : a.terms()) {
    const int da = degree(ea);
    if (da > max_degree) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (degree(eb) > max_degree - da) break;
      r.add_term(add(ea, eb), ca * cb);
    }
  }
  return r;
}

Polynomial power_truncated(const Polynomial& a, int k, int max_degree) {
  Polynomial result = Polynomial::constant(1).truncated(max_degree);
  Polynomial base = a.truncated(max_degree);
  while (k > 0) {
    if (k & 1) result = multiply_truncated(result, base, max_degree);
    k >>= 1;
    if (k > 0) base = multiply_truncated(base, base, max_degree);
  }
  return result;
}

Polynomial primitive_integer(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.terms().begin()->second < 0) scale = -scale;
  return p * scale;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    const bool is_const = degree(e) == 0;
    if (is_const) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << '*';
      out << monomial_string(e);
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- parsing

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty input");
    Polynomial result;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    result += parse_term() * Rational(sign);
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      const char op = peek();
      if (op != '+' && op != '-') throw ParseError(pos_, std::string("unexpected character '") + op + "'");
      ++pos_;
      result += parse_term() * Rational(op == '-' ? -1 : 1);
    }
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_digit() {
    skip_ws();
    return std::isdigit(static_cast<unsigned char>(peek())) != 0;
  }

  Integer parse_integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial parse_term() {
    skip_ws();
    Rational coeff = 1;
    Exponent e{};
    bool need_factor = true;
    if (at_digit()) {
      Integer num = parse_integer();
      Integer den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = parse_integer();
        if (den == 0) throw ParseError(at, "zero denominator");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      skip_ws();
      if (peek() != '*') return Polynomial::constant(coeff);
      ++pos_;
    }
    while (need_factor) {
      parse_factor(e);
      skip_ws();
      if (peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    return Polynomial::monomial(e, coeff);
  }

  void parse_factor(Exponent& e) {
    skip_ws();
    const char c = peek();
    int v = -1;
    for (int i = 0; i < kNumVars; ++i) {
      if (kVarNames[i] == c) v = i;
    }
    if (v < 0) {
      if (std::isalpha(static_cast<unsigned char>(c)))
        throw ParseError(pos_, std::string("unknown variable '") + c + "'");
      throw ParseError(pos_, "expected variable");
    }
    ++pos_;
    int power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (peek() == '-') throw ParseError(pos_, "negative exponent");
      const std::size_t at = pos_;
      Integer p = parse_integer();
      if (p == 0) throw ParseError(at, "exponent must be positive");
      if (!p.fits_sint_p()) throw ParseError(at, "exponent too large");
      power = static_cast<int>(p.get_si());
    }
    Exponent step{};
    step[v] = power;
    e = add(e, step);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------- substitutions

Substitution::Substitution(std::array<Polynomial, kNumVars> replacement, int truncation_degree)
    : replacement_(std::move(replacement)), truncation_(truncation_degree) {
  if (truncation_degree < 1) throw std::invalid_argument("truncation degree must be positive");
  for (const auto& r : replacement_) {
    if (r.is_zero()) throw std::invalid_argument("substitution replacement must be nonzero");
  }
}

Substitution Substitution::identity(int truncation_degree) {
  return Substitution({Polynomial::variable(0), Polynomial::variable(1), Polynomial::variable(2),
                       Polynomial::variable(3)},
                      truncation_degree);
}

Substitution Substitution::single(int v, const Polynomial& replacement, int truncation_degree) {
  std::array<Polynomial, kNumVars> r{Polynomial::variable(0), Polynomial::variable(1),
                                     Polynomial::variable(2), Polynomial::variable(3)};
  r[v] = replacement;
  return Substitution(std::move(r), truncation_degree);
}

bool Substitution::is_identity_for(int v) const { return replacement_[v] == Polynomial::variable(v); }

std::string Substitution::to_string() const {
  std::string out;
  for (int v = 0; v < kNumVars; ++v) {
    if (is_identity_for(v)) continue;
    if (!out.empty()) out += ", ";
    out += kVarNames[v];
    out += " <- " + replacement_[v].to_string();
  }
  if (out.empty()) out = "identity";
  return out + " (truncation " + std::to_string(truncation_) + ")";
}

Polynomial apply_substitution(const Polynomial& f, const Substitution& s) {
  using Terms = std::vector<std::pair<Exponent, Rational>>;
  const int trunc = s.truncation_degree();
  // Cached powers of each non-identity replacement, in ascending degree.
  std::array<std::vector<Terms>, kNumVars> powers;
  std::array<bool, kNumVars> ident{};
  std::array<Polynomial, kNumVars> last;
  for (int v = 0; v < kNumVars; ++v) {
    ident[v] = s.is_identity_for(v);
    if (!ident[v]) {
      last[v] = Polynomial::constant(1);
      powers[v].push_back({{Exponent{}, Rational(1)}});
    }
  }
  auto power_of = [&](int v, int k) -> const Terms& {
    auto& cache = powers[v];
    while (static_cast<int>(cache.size()) <= k) {
      last[v] = multiply_truncated(last[v], s.replacement(v), trunc);
      cache.emplace_back(last[v].terms().begin(), last[v].terms().end());
    }
    return cache[k];
  };

  Polynomial result;
  Terms cur, next;
  for (const auto& [e, c] : f.terms()) {
    Exponent fixed{};
    for (int v = 0; v < kNumVars; ++v) {
      if (ident[v]) fixed[v] = e[v];
    }
    if (degree(fixed) > trunc) continue;
    cur.assign(1, {fixed, c});
    for (int v = 0; v < kNumVars && !cur.empty(); ++v) {
      if (ident[v] || e[v] == 0) continue;
      const Terms& pw = power_of(v, e[v]);
      next.clear();
      for (const auto& [ea, ca] : cur) {
        const int room = trunc - degree(ea);
        for (const auto& [eb, cb] : pw) {
          if (degree(eb) > room) break;
          next.emplace_back(add(ea, eb), ca * cb);
        }
      }
      std::swap(cur, next);
    }
    for (const auto& [ea, ca] : cur) result.add_term(ea, ca);
  }
  return result;
}

Substitution compose(const Substitution& first, const Substitution& second) {
  const int trunc = std::min(first.truncation_degree(), second.truncation_degree());
  std::array<Polynomial, kNumVars> r;
  for (int v = 0; v < kNumVars; ++v) {
    r[v] =apply_substitution(first.replacement(v), second).truncated(trunc);
  }
  return Substitution(std::move(r), trunc);
}

}  // namespace cdv
