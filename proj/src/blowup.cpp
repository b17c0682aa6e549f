#include "cdv/blowup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cdv {

int default_max_coord(const NewtonDiagram& d) {
  int top = 0;
  for (const auto& v : d.vertices) top = std::max(top, degree(v));
  return 2 * top + 2;
}

std::vector<Weight> enumerate_weights(const NewtonDiagram& d, int max_coord) {
  if (max_coord < 1) throw std::invalid_argument("max_coord must be at least 1");
  std::vector<Weight> out;
  // sum(w) = w(f) + 2 <= <w, v> + 2 for every vertex v; with v = x^2 this
  // bounds w_2 + w_3 + w_4 by w_1 + 2.
  const bool has_x2 = std::find(d.vertices.begin(), d.vertices.end(), Exponent{2, 0, 0, 0}) != d.vertices.end();
  for (int a = 1; a <= max_coord; ++a) {
    const int rest_cap = has_x2 ? a + 2 : 3 * max_coord;
    for (int b = 1; b <= max_coord && b + 2 <= rest_cap; ++b)
      for (int c = 1; c <= max_coord && b + c + 1 <= rest_cap; ++c)
        for (int e = 1; e <= max_coord && b + c + e <= rest_cap; ++e) {
          if (std::gcd(std::gcd(a, b), std::gcd(c, e)) != 1) continue;
          Weight w({a, b, c, e});
          if (w.sum() - 1 - support_value(d, w) == 1) out.push_back(w);
        }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> enumerate_weights(const NewtonDiagram& d) { return enumerate_weights(d, default_max_coord(d)); }

bool touches_boundary(const std::vector<Weight>& weights, int max_coord) {
  for (const auto& w : weights)
    for (int v : w.values())
      if (v == max_coord) return true;
  return false;
}

long discrepancy(const NewtonDiagram& d, const Weight& w, int m) {
  if (m < 1) throw std::invalid_argument("multiplicity must be positive");
  return m * (w.sum() - 1 - support_value(d, w));
}

Factorization decompose_components(const Polynomial& g, std::uint64_t seed) {
  if (g.is_zero()) throw std::invalid_argument("cannot decompose the zero polynomial");
  if (g.is_monomial()) {
    Factorization f;
    const auto& [e, c] = *g.terms().begin();
    f.constant = c;
    for (int v = 0; v < kNumVars; ++v) {
      if (e[v] > 0) f.factors.emplace_back(Polynomial::variable(v), e[v]);
    }
    return f;
  }
  return factor_polynomial(g, seed);
}

ExceptionalSurface exceptional_surface(const Polynomial& f, const Weight& w, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  ExceptionalSurface s{w, face_polynomial(f, w), {}};
  s.decomposition = decompose_components(s.equation, seed);
  return s;
}

}  // namespace cdv
