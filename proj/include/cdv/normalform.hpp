// cDV type recognition and reduction to the cD / cE normal forms by
// explicit, replayable coordinate changes.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdv/polynomial.hpp"

namespace cdv {

struct SingularityType {
  enum class Kind { cA, cD, cE6, cE7, cE8, smooth, other };
  Kind kind = Kind::other;
  /// n for cA(n) and cD(n); 0 otherwise.
  int n = 0;

  static SingularityType cA(int n);
  static SingularityType cD(int n);
  static SingularityType of(Kind k);

  bool is_cD_or_cE() const;
  /// "cA(1)", "cD(6)", "cE7", "smooth", "other".
  std::string to_string() const;
  friend bool operator==(const SingularityType&, const SingularityType&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const SingularityType& t) { return os << t.to_string(); }

/// Accepts "cD:N", "cD(N)", "cA:N", "cA(N)", "cE6", "cE7", "cE8".
SingularityType parse_type(const std::string& text);

struct ConstraintCheck {
  std::string statement;
  bool holds = true;
};

struct NormalFormCertificate {
  SingularityType type;
  Polynomial reduced;
  std::vector<Substitution> applied_changes;
  std::vector<ConstraintCheck> satisfied_constraints;
  int truncation_degree = 0;
  std::vector<std::string> notes;
};

class NormalFormError : public std::runtime_error {
 public:
  NormalFormError(const std::string& message, SingularityType known = {}, std::optional<Exponent> monomial = {})
      : std::runtime_error(message), known_(known), monomial_(monomial) {}
  /// Type already determined when the reduction itself failed, or `other`.
  const SingularityType& known_type() const { return known_; }
  /// Monomial the reduction was trying to remove, for budget failures.
  const std::optional<Exponent>& monomial() const { return monomial_; }

 private:
  SingularityType known_;
  std::optional<Exponent> monomial_;
};

/// 2 * (largest total degree of f) + 4.
int default_truncation(const Polynomial& f);

/// Throws std::invalid_argument when f(0) != 0.
SingularityType classify_type(const Polynomial& f, std::optional<int> truncation_degree = {});

/// Throws std::invalid_argument when f(0) != 0 and NormalFormError when the
/// germ is smooth, not cDV, or the reduction cannot be completed.
NormalFormCertificate reduce_to_normal_form(const Polynomial& f, std::optional<int> truncation_degree = {});

/// Applies the recorded changes to f in order.
Polynomial replay(const Polynomial& f, const std::vector<Substitution>& changes, int truncation_degree);

}  // namespace cdv
