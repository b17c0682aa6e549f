// Sparse polynomials in x, y, z, t over the rationals.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdv {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr int kNumVars = 4;
inline constexpr std::array<char, kNumVars> kVarNames{'x', 'y', 'z', 't'};

/// Exponents of x, y, z, t, in that order.
using Exponent = std::array<int, kNumVars>;

int degree(const Exponent& e);
Exponent add(const Exponent& a, const Exponent& b);
/// True when a - b has non-negative entries and a != b.
bool strictly_dominates(const Exponent& a, const Exponent& b);
std::string monomial_string(const Exponent& e);

/// Graded lexicographic comparison with x > y > z > t; the smallest monomial
/// comes first (this is the order used when picking monomials to eliminate).
bool grlex_less(const Exponent& a, const Exponent& b);

/// Storage and printing order: ascending total degree, lexicographically
/// descending inside one degree (x^2 + y^2*z + z^3 + t^3).
struct PrintOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, PrintOrder>;

  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Exponent& e, const Rational& c = 1);
  static Polynomial variable(int v);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Exponent& e) const;
  bool contains(const Exponent& e) const { return terms_.count(e) != 0; }

  /// Largest total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Smallest total degree of a term; -1 for the zero polynomial.
  int order() const;
  int degree_in(int v) const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Componentwise minimum of the exponents of all terms.
  Exponent monomial_content() const;
  std::vector<Exponent> support() const;

  Polynomial truncated(int max_degree) const;
  Polynomial homogeneous_part(int d) const;
  Polynomial derivative(int v) const;
  /// Substitutes a constant for one variable.
  Polynomial evaluate(int v, const Rational& value) const;
  /// Divides by a monomial that divides every term.
  Polynomial divide_monomial(const Exponent& e) const;
  Polynomial multiply_monomial(const Exponent& e) const;

  /// Builder: adds c * x^e, merging like terms and dropping zeros.
  void add_term(const Exponent& e, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const;

 private:
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

/// Product with every term of total degree above max_degree discarded.
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree);
Polynomial power_truncated(const Polynomial& a, int k, int max_degree);

/// Scales to integer coefficients with gcd 1 whose first printed term is positive.
Polynomial primitive_integer(const Polynomial& p);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: expression = term (('+'|'-') term)*;
/// term = [coefficient '*'] factor ('*' factor)* | coefficient;
/// coefficient = integer | integer '/' positive-integer;
/// factor = variable ['^' positive-integer]; variable in {x,y,z,t}.
/// A leading sign is accepted; whitespace is insignificant.
Polynomial parse_polynomial(std::string_view text);

/// Simultaneous replacement of x, y, z, t followed by total-degree truncation.
class Substitution {
 public:
  Substitution(std::array<Polynomial, kNumVars> replacement, int truncation_degree);
  static Substitution identity(int truncation_degree);
  /// v <- replacement, all other variables fixed.
  static Substitution single(int v, const Polynomial& replacement, int truncation_degree);

  const Polynomial& replacement(int v) const { return replacement_[v]; }
  int truncation_degree() const { return truncation_; }
  bool is_identity_for(int v) const;
  std::string to_string() const;

 private:
  std::array<Polynomial, kNumVars> replacement_;
  int truncation_;
};

Polynomial apply_substitution(const Polynomial& f, const Substitution& s);
/// The substitution equal to applying `first` and then `second`.
Substitution compose(const Substitution& first, const Substitution& second);

}  // namespace cdv
