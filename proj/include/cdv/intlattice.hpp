// Small exact linear algebra over Z and Q.
#pragma once

#include <optional>
#include <vector>

#include "cdv/polynomial.hpp"

namespace cdv {

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Basis of {v in Z^n : row . v = 0 for every row}. The basis spans a
/// saturated sublattice. `n` is the column count (rows may be empty).
std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, std::size_t n);

/// Basis of the rational null space, scaled to primitive integer vectors.
std::vector<IntVector> rational_kernel(const std::vector<IntVector>& rows, std::size_t n);

int rational_rank(const std::vector<IntVector>& rows);

/// Solves sum_j coords[j] * basis[j] = v; empty optional if v is not in the span.
std::optional<RatVector> solve_in_span(const std::vector<IntVector>& basis, const IntVector& v);

IntVector primitive(IntVector v);
Integer dot(const IntVector& a, const IntVector& b);

/// Rank of the affine hull of the given points.
int affine_rank(const std::vector<Exponent>& points);

}  // namespace cdv
