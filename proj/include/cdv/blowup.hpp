// Weighted blowups with discrepancy one and their exceptional divisors.
#pragma once

#include <vector>

#include "cdv/factor.hpp"
#include "cdv/newton.hpp"

namespace cdv {

/// 2 * (largest total degree of a diagram vertex) + 2.
int default_max_coord(const NewtonDiagram& d);

/// Primitive w with 1 <= w_i <= max_coord and w_1 + w_2 + w_3 + w_4 - 1 - w(f) = 1,
/// sorted lexicographically.
std::vector<Weight> enumerate_weights(const NewtonDiagram& d, int max_coord);
std::vector<Weight> enumerate_weights(const NewtonDiagram& d);

/// True when some weight has an entry equal to max_coord, so a larger box
/// might hold more solutions.
bool touches_boundary(const std::vector<Weight>& weights, int max_coord);

/// m * (w_1 + w_2 + w_3 + w_4 - 1 - w(f)).
long discrepancy(const NewtonDiagram& d, const Weight& w, int m);

/// Irreducible factors over Q with multiplicities. Coordinate hyperplane
/// factors go to `monomial_content` unless g is itself a monomial, in which
/// case its variables are the components.
Factorization decompose_components(const Polynomial& g, std::uint64_t seed = 0);

struct ExceptionalSurface {
  Weight ambient_weights;
  Polynomial equation;
  Factorization decomposition;
  const std::vector<std::pair<Polynomial, int>>& components() const { return decomposition.factors; }
};

ExceptionalSurface exceptional_surface(const Polynomial& f, const Weight& w, std::uint64_t seed = 0);

}  // namespace cdv
