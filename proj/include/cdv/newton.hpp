// Newton polyhedron conv(supp f + R^4_{>=0}): vertices, compact faces,
// support function and face polynomials, plus a torus non-degeneracy test.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdv/polynomial.hpp"

namespace cdv {

/// Primitive vector of positive integers.
class Weight {
 public:
  explicit Weight(std::array<int, kNumVars> w);
  /// Divides a nonzero vector of positive entries by the gcd of its entries.
  static Weight primitive_of(std::array<long, kNumVars> w);

  int operator[](int i) const { return w_[i]; }
  const std::array<int, kNumVars>& values() const { return w_; }
  long sum() const;
  long pair(const Exponent& e) const;
  std::string to_string() const;

  auto operator<=>(const Weight&) const = default;

 private:
  std::array<int, kNumVars> w_;
};

struct Face {
  int dimension = 0;
  /// Support points of f on the face, in storage order.
  std::vector<Exponent> lattice_points;
  /// A weight whose minimizing face is exactly this one.
  Weight witness{{1, 1, 1, 1}};
};

struct NewtonDiagram {
  Polynomial source;
  std::vector<Exponent> vertices;
  /// Compact faces, sorted by dimension and then by point set.
  std::vector<Face> faces;
  /// Primitive inner normals of all facets (including non-compact ones).
  std::vector<std::array<long, kNumVars>> facet_normals;
};

NewtonDiagram build_diagram(const Polynomial& f);

long support_value(const NewtonDiagram& d, const Weight& w);
/// Terms of f on which <w, .> attains its minimum.
Polynomial face_polynomial(const Polynomial& f, const Weight& w);

enum class Verdict { nondegenerate_certified, nondegenerate_probable, degenerate };

std::string to_string(Verdict v);

struct NondegeneracyOptions {
  std::uint64_t seed = 0;
  int primes = 5;
  /// Random plane sections per prime for faces of dimension 3.
  int planes_per_prime = 16;
};

struct NondegeneracyResult {
  Verdict verdict = Verdict::nondegenerate_probable;
  std::string method;
  /// Singular torus point with rational coordinates (x, y, z, t).
  std::optional<std::array<Rational, kNumVars>> rational_witness;
  /// Singular point over F_p found for every prime tried.
  std::optional<std::uint64_t> witness_prime;
  std::optional<std::array<std::uint64_t, kNumVars>> modular_witness;
  std::string note;
};

/// Decides whether {g = 0} is smooth on the torus (C*)^4. g is expected to be
/// quasi-homogeneous, as every face polynomial is; other inputs are handled
/// by treating the affine span of the support as the homogeneity data.
NondegeneracyResult check_face_polynomial(const Polynomial& g, const NondegeneracyOptions& opts = {});

/// One verdict per compact face of the diagram, in `d.faces` order.
std::vector<NondegeneracyResult> check_nondegeneracy(const NewtonDiagram& d, const NondegeneracyOptions& opts = {});

}  // namespace cdv
