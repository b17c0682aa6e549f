#include "cdv/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdv::upoly {

// ------------------------------------------------------------------ over Z

int deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly derivative(const ZPoly& f) {
  ZPoly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<long>(i));
  trim(r);
  return r;
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.empty()) return f;
  Integer c = content(f);
  if (f.back() < 0) c = -c;
  ZPoly r = f;
  for (auto& x : r) x /= c;
  return r;
}

bool divides(const ZPoly& b, const ZPoly& a, ZPoly* quotient) {
  if (b.empty()) throw std::invalid_argument("division by zero polynomial");
  ZPoly r = a;
  ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const Integer& lb = b.back();
  for (int i = deg(r); i >= deg(b); --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return false;
    Integer c = r[i] / lb;
    q[i - deg(b)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[i - deg(b) + j] -= c * b[j];
  }
  trim(r);
  if (!r.empty()) return false;
  if (quotient) {
    trim(q);
    *quotient = std::move(q);
  }
  return true;
}

namespace {

using QPoly = std::vector<Rational>;

void qtrim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly to_q(const ZPoly& f) { return QPoly(f.begin(), f.end()); }

ZPoly to_primitive_z(const QPoly& f) {
  Integer den = 1;
  for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly r;
  for (const auto& c : f) r.push_back(Integer(c * den));
  return primitive_part(r);
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    if (r[i] == 0) continue;
    Rational c = r[i] / b.back();
    q[i - b.size() + 1] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[i - b.size() + 1 + j] -= c * b[j];
  }
  qtrim(r);
  qtrim(q);
}

QPoly qgcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    // Scaling remainders to primitive integer form keeps coefficients small.
    b = r.empty() ? r : to_q(to_primitive_z(r));
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

QPoly qderiv(const QPoly& f) {
  QPoly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<long>(i));
  qtrim(r);
  return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  qtrim(r);
  return r;
}

QPoly qquo(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  return q;
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  return to_primitive_z(qgcd(to_q(a), to_q(b)));
}

std::vector<std::pair<ZPoly, int>> square_free(const ZPoly& f) {
  std::vector<std::pair<ZPoly, int>> out;
  if (deg(f) < 1) return out;
  QPoly qf = to_q(f);
  QPoly df = qderiv(qf);
  QPoly a = qgcd(qf, df);
  QPoly b = qquo(qf, a);
  QPoly c = qquo(df, a);
  QPoly d = qsub(c, qderiv(b));
  for (int i = 1; b.size() > 1; ++i) {
    QPoly g = qgcd(b, d);
    if (g.size() > 1) out.emplace_back(to_primitive_z(g), i);
    b = qquo(b, g);
    c = qquo(d, g);
    d = qsub(c, qderiv(b));
  }
  return out;
}

// ------------------------------------------------------------------ mod p

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero");
  return powmod(a, p - 2, p);
}

ModPoly reduce(const ZPoly& f, std::uint64_t p) {
  ModPoly r;
  Integer pz(std::to_string(p));
  for (const auto& c : f) {
    Integer m;
    mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
    r.push_back(m.get_ui());
  }
  trim(r);
  return r;
}

int deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

ModPoly sub(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

ModPoly derivative(const ModPoly& f, std::uint64_t p) {
  ModPoly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(mulmod(f[i], i % p, p));
  trim(r);
  return r;
}

namespace {

void divmod(const ModPoly& a, const ModPoly& b, std::uint64_t p, ModPoly& q, ModPoly& r) {
  if (b.empty()) throw std::invalid_argument("division by zero polynomial");
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const std::uint64_t inv = invmod(b.back(), p);
  for (int i = deg(r); i >= deg(b); --i) {
    if (r[i] == 0) continue;
    std::uint64_t c = mulmod(r[i], inv, p);
    q[i - deg(b)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = i - deg(b) + j;
      r[k] = (r[k] + p - mulmod(c, b[j], p)) % p;
    }
  }
  trim(r);
  trim(q);
}

ModPoly powmod_poly(ModPoly base, const Integer& e, const ModPoly& m, std::uint64_t p) {
  ModPoly result{1};
  base = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base, p), m, p);
  }
  return result;
}

ModPoly random_poly(int degree_below, std::uint64_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  ModPoly a(degree_below);
  for (auto& c : a) c = dist(rng);
  trim(a);
  return a;
}

void equal_degree(const ModPoly& f, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  while (true) {
    ModPoly a = random_poly(deg(f), p, rng);
    if (deg(a) < 1) continue;
    ModPoly b = sub(powmod_poly(a, e, f, p), ModPoly{1}, p);
    ModPoly g = gcd(b, f, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree(g, d, p, rng, out);
      equal_degree(quo(f, g, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

ModPoly rem(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  ModPoly q, r;
  divmod(a, b, p, q, r);
  return r;
}

ModPoly quo(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  ModPoly q, r;
  divmod(a, b, p, q, r);
  return q;
}

ModPoly make_monic(const ModPoly& f, std::uint64_t p) {
  if (f.empty()) return f;
  const std::uint64_t inv = invmod(f.back(), p);
  ModPoly r = f;
  for (auto& c : r) c = mulmod(c, inv, p);
  return r;
}

ModPoly gcd(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  ModPoly x = a, y = b;
  while (!y.empty()) {
    ModPoly r = rem(x, y, p);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x, p);
}

std::uint64_t eval(const ModPoly& f, std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = (mulmod(r, x, p) + f[i]) % p;
  return r;
}

std::vector<ModPoly> factor_square_free(const ModPoly& f_in, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<ModPoly> out;
  ModPoly f = make_monic(f_in, p);
  ModPoly x{0, 1};
  ModPoly h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod_poly(h, Integer(static_cast<unsigned long>(p)), f, p);
    ModPoly g = gcd(sub(h, x, p), f, p);
    if (deg(g) > 0) {
      equal_degree(g, d, p, rng, out);
      f = quo(f, g, p);
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back(f);
  return out;
}

std::vector<std::uint64_t> roots(const ModPoly& f_in, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<std::uint64_t> out;
  if (deg(f_in) < 1) return out;
  ModPoly f = make_monic(f_in, p);
  if (f[0] == 0) out.push_back(0);
  ModPoly x{0, 1};
  ModPoly xp = powmod_poly(x, Integer(static_cast<unsigned long>(p)), f, p);
  ModPoly g = gcd(sub(xp, x, p), f, p);
  if (deg(g) >= 1) {
    // Nonzero roots only; zero was handled above.
    while (!g.empty() && g[0] == 0) g.erase(g.begin());
    if (deg(g) >= 1) {
      std::vector<ModPoly> lin;
      equal_degree(g, 1, p, rng, lin);
      for (const auto& l : lin) out.push_back((p - l[0]) % p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ------------------------------------------------------------------ Zassenhaus

namespace {

ZPoly mod_reduce(const ZPoly& f, const Integer& m) {
  ZPoly r;
  for (const auto& c : f) {
    Integer x;
    mpz_fdiv_r(x.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    r.push_back(x);
  }
  trim(r);
  return r;
}

ZPoly symmetric(const ZPoly& f, const Integer& m) {
  ZPoly r = mod_reduce(f, m);
  const Integer half = m / 2;
  for (auto& c : r) {
    if (c > half) c -= m;
  }
  trim(r);
  return r;
}

ZPoly add(const ZPoly& a, const ZPoly& b) { return sub(a, sub(ZPoly{}, b)); }

ModPoly add(const ModPoly& a, const ModPoly& b, std::uint64_t p) { return sub(a, sub(ModPoly{}, b, p), p); }

ZPoly lift_z(const ModPoly& f) {
  ZPoly r;
  for (auto c : f) r.push_back(Integer(static_cast<unsigned long>(c)));
  trim(r);
  return r;
}

// s*a + t*b = 1 modulo p.
void ext_gcd(const ModPoly& a, const ModPoly& b, std::uint64_t p, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    divmod(r0, r1, p, q, r);
    ModPoly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw std::logic_error("factors are not coprime modulo p");
  const std::uint64_t inv = invmod(r0[0], p);
  s = s0;
  t = t0;
  for (auto& c : s) c = mulmod(c, inv, p);
  for (auto& c : t) c = mulmod(c, inv, p);
}

// Lifts f = g*h (mod p), g monic, to f = g*h (mod p^k).
void hensel_two(const ZPoly& f, ZPoly& g, ZPoly& h, std::uint64_t p, int k) {
  ModPoly s, t;
  ext_gcd(reduce(g, p), reduce(h, p), p, s, t);
  const Integer pz(static_cast<unsigned long>(p));
  Integer q = pz;
  for (int j = 1; j < k; ++j) {
    const Integer next = q * pz;
    ZPoly err = mod_reduce(sub(f, mul(g, h)), next);
    for (auto& c : err) c /= q;
    ModPoly e = reduce(err, p);
    ModPoly te = mul(t, e, p), quot, b;
    divmod(te, reduce(g, p), p, quot, b);
    ModPoly a = add(mul(s, e, p), mul(quot, reduce(h, p), p), p);
    ZPoly bz = lift_z(b), az = lift_z(a);
    for (auto& c : bz) c *= q;
    for (auto& c : az) c *= q;
    g = mod_reduce(add(g, bz), next);
    h = mod_reduce(add(h, az), next);
    q = next;
  }
}

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& monic_factors, std::uint64_t p, int k,
                               const Integer& modulus) {
  std::vector<ZPoly> lifted;
  const std::uint64_t lc = reduce(ZPoly{f.back()}, p).at(0);
  ZPoly current = mod_reduce(f, modulus);
  for (std::size_t i = 0; i + 1 < monic_factors.size(); ++i) {
    ModPoly rest{lc};
    for (std::size_t j = i + 1; j < monic_factors.size(); ++j) rest = mul(rest, monic_factors[j], p);
    ZPoly g = lift_z(monic_factors[i]), h = lift_z(rest);
    hensel_two(current, g, h, p, k);
    lifted.push_back(g);
    current = h;
  }
  // Last factor: normalize to monic modulo p^k.
  Integer inv;
  mpz_invert(inv.get_mpz_t(), current.back().get_mpz_t(), modulus.get_mpz_t());
  for (auto& c : current) c *= inv;
  lifted.push_back(mod_reduce(current, modulus));
  return lifted;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// f primitive, square-free, degree >= 1, positive leading coefficient.
std::vector<ZPoly> zassenhaus(ZPoly f, std::mt19937_64& rng) {
  if (deg(f) == 1) return {f};
  std::uint64_t best_p = 0;
  std::vector<ModPoly> best;
  int good = 0;
  for (std::uint64_t p = 3; p < 100000; p += 2) {
    if (!is_prime(p) || mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    ModPoly fp = reduce(f, p);
    if (deg(gcd(fp, derivative(fp, p), p)) != 0) continue;
    auto fac = factor_square_free(fp, p, rng);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = fac;
    }
    if (++good == 5 || best.size() == 1) break;
  }
  if (best_p == 0) throw std::runtime_error("no suitable prime for factorization");
  if (best.size() == 1) return {f};

  // Bound on coefficients of lc(f) * (any factor).
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer bound = abs(f.back()) * (root + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(deg(f)));
  bound *= 2;
  int k = 1;
  Integer modulus(static_cast<unsigned long>(best_p));
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(best_p);
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_lift(f, best, best_p, k, modulus);

  std::vector<ZPoly> result;
  std::size_t subset = 1;
  while (2 * subset <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(subset);
    for (std::size_t i = 0; i < subset; ++i) idx[i] = i;
    do {
      ZPoly prod{f.back()};
      for (auto i : idx) prod = mod_reduce(mul(prod, lifted[i]), modulus);
      ZPoly cand = primitive_part(symmetric(prod, modulus));
      ZPoly quot;
      if (deg(cand) >= 1 && divides(cand, f, &quot)) {
        result.push_back(cand);
        f = quot;
        for (std::size_t i = idx.size(); i-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[i]));
        found = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!found) ++subset;
  }
  if (deg(f) >= 1) result.push_back(primitive_part(f));
  return result;
}

}  // namespace

ZFactorization factor(const ZPoly& f_in, std::uint64_t seed) {
  ZPoly f = f_in;
  trim(f);
  if (f.empty()) throw std::invalid_argument("cannot factor the zero polynomial");
  ZFactorization out;
  out.content = content(f);
  if (f.back() < 0) out.content = -out.content;
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  int zero_mult = 0;
  while (f.front() == 0) {
    f.erase(f.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.factors.push_back({ZPoly{0, 1}, zero_mult});
  f = primitive_part(f);
  // One prime where f stays square-free settles it without any gcd over Q.
  bool square_free_mod_p = false;
  for (std::uint64_t p = 1000003, tries = 0; tries < 5; p += 2) {
    if (!is_prime(p) || mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    ++tries;
    const ModPoly fp = reduce(f, p);
    if (deg(gcd(fp, derivative(fp, p), p)) == 0) {
      square_free_mod_p = true;
      break;
    }
  }
  const auto parts = square_free_mod_p ? std::vector<std::pair<ZPoly, int>>{{f, 1}} : square_free(f);
  for (auto& [part, mult] : parts) {
    for (auto& g : zassenhaus(part, rng)) out.factors.push_back({g, mult});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  return out;
}

}  // namespace cdv::upoly
