// Factorization of multivariate polynomials over Q.
//
// Repeated factors are split off first by gcds with partial derivatives.
// Each square-free piece has its support rewritten in coordinates of its saturated difference
// lattice (a polynomial in as many variables as the affine dimension of the
// support), then mapped to one variable by Kronecker substitution and
// factored over Z; true factors are recovered by recombining univariate
// factors and testing exact division.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdv/polynomial.hpp"

namespace cdv {

struct Factorization {
  Rational constant = 1;
  /// Monomial factor x^e dividing the input; never listed among `factors`.
  Exponent monomial_content{};
  /// Irreducible, primitive over Z, no monomial content, positive coefficient on the smallest monomial.
  std::vector<std::pair<Polynomial, int>> factors;
  /// False when the recombination budget ran out; the last factor may then be reducible.
  bool complete = true;
  std::vector<std::string> warnings;
};

Factorization factor_polynomial(const Polynomial& g, std::uint64_t seed = 0,
                                std::size_t subset_budget = std::size_t{1} << 16);

/// constant * x^content * prod factor^multiplicity
Polynomial expand(const Factorization& f);

/// a / b when b divides a exactly in Q[x,y,z,t].
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

}  // namespace cdv
