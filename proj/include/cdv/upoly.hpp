// Dense univariate polynomials over Z and over prime fields, and
// factorization over Z by the Berlekamp-Zassenhaus route
// (Cantor-Zassenhaus modulo p, Hensel lifting, recombination).
#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cdv/polynomial.hpp"

namespace cdv::upoly {

/// Coefficient of s^i at index i; no trailing zeros (the zero polynomial is empty).
using ZPoly = std::vector<Integer>;
using ModPoly = std::vector<std::uint64_t>;

int deg(const ZPoly& f);
void trim(ZPoly& f);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& f);
Integer content(const ZPoly& f);
/// Divides by the content and makes the leading coefficient positive.
ZPoly primitive_part(const ZPoly& f);
/// Exact division over Z; false when b does not divide a.
bool divides(const ZPoly& b, const ZPoly& a, ZPoly* quotient = nullptr);
/// Primitive gcd over Z (positive leading coefficient).
ZPoly gcd(const ZPoly& a, const ZPoly& b);
/// Yun: f = c * prod p_i^i with p_i primitive, square-free, pairwise coprime.
std::vector<std::pair<ZPoly, int>> square_free(const ZPoly& f);

// ---- arithmetic modulo a prime p < 2^31

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

ModPoly reduce(const ZPoly& f, std::uint64_t p);
int deg(const ModPoly& f);
void trim(ModPoly& f);
ModPoly mul(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly sub(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly derivative(const ModPoly& f, std::uint64_t p);
ModPoly rem(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly quo(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly make_monic(const ModPoly& f, std::uint64_t p);
ModPoly gcd(const ModPoly& a, const ModPoly& b, std::uint64_t p);
std::uint64_t eval(const ModPoly& f, std::uint64_t x, std::uint64_t p);
/// All roots in F_p (p odd), without multiplicity, sorted.
std::vector<std::uint64_t> roots(const ModPoly& f, std::uint64_t p, std::mt19937_64& rng);
/// Monic irreducible factors of a square-free polynomial (p odd).
std::vector<ModPoly> factor_square_free(const ModPoly& f, std::uint64_t p, std::mt19937_64& rng);

// ---- factorization over Z

struct ZFactorization {
  Integer content;
  std::vector<std::pair<ZPoly, int>> factors;
};

/// Irreducible primitive factors with multiplicities; f = content * prod factor^mult.
ZFactorization factor(const ZPoly& f, std::uint64_t seed = 0);

}  // namespace cdv::upoly
