#include "cdv/factor.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cdv/intlattice.hpp"
#include "cdv/upoly.hpp"

namespace cdv {

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Polynomial r = a, q;
  // Leading terms are the last entries in storage order (graded, a total order).
  const auto& [lb_exp, lb_coef] = *b.terms().rbegin();
  while (!r.is_zero()) {
    const auto [lr_exp, lr_coef] = *r.terms().rbegin();
    Exponent d{};
    for (int i = 0; i < kNumVars; ++i) {
      d[i] = lr_exp[i] - lb_exp[i];
      if (d[i] < 0) return std::nullopt;
    }
    Rational c = lr_coef / lb_coef;
    q.add_term(d, c);
    r -= b.multiply_monomial(d) * c;
  }
  return q;
}

Polynomial expand(const Factorization& f) {
  Polynomial p = Polynomial::monomial(f.monomial_content, f.constant);
  for (const auto& [g, m] : f.factors) {
    for (int i = 0; i < m; ++i) p = p * g;
  }
  return p;
}

namespace {

// Polynomial in lattice coordinates u_0..u_{d-1} (stored in the first d slots).
struct LatticeForm {
  int dim = 0;
  std::vector<IntVector> basis;  // d vectors in Z^4
  Polynomial poly;
};

LatticeForm to_lattice(const Polynomial& g) {
  const auto pts = g.support();
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IntVector d(kNumVars);
    for (int k = 0; k < kNumVars; ++k) d[k] = pts[i][k] - pts[0][k];
    diffs.push_back(std::move(d));
  }
  const auto normals = integer_kernel(diffs, kNumVars);
  LatticeForm out;
  out.basis = integer_kernel(normals, kNumVars);
  out.dim = static_cast<int>(out.basis.size());

  std::vector<std::vector<long>> coords;
  for (const auto& p : pts) {
    IntVector d(kNumVars);
    for (int k = 0; k < kNumVars; ++k) d[k] = p[k] - pts[0][k];
    auto c = solve_in_span(out.basis, d);
    if (!c) throw std::logic_error("support point outside its own difference lattice");
    std::vector<long> ci;
    for (const auto& q : *c) {
      if (q.get_den() != 1) throw std::logic_error("difference lattice basis is not saturated");
      ci.push_back(q.get_num().get_si());
    }
    coords.push_back(std::move(ci));
  }
  std::vector<long> lo(out.dim, 0);
  for (const auto& c : coords) {
    for (int j = 0; j < out.dim; ++j) lo[j] = std::min(lo[j], c[j]);
  }
  std::size_t i = 0;
  for (const auto& [e, coef] : g.terms()) {
    Exponent u{};
    for (int j = 0; j < out.dim; ++j) u[j] = static_cast<int>(coords[i][j] - lo[j]);
    out.poly.add_term(u, coef);
    ++i;
  }
  return out;
}

Polynomial from_lattice(const Polynomial& f, const LatticeForm& lf) {
  std::vector<std::pair<std::array<long, kNumVars>, Rational>> terms;
  std::array<long, kNumVars> lo;
  lo.fill(0);
  bool first = true;
  for (const auto& [u, c] : f.terms()) {
    std::array<long, kNumVars> x{};
    for (int j = 0; j < lf.dim; ++j) {
      for (int k = 0; k < kNumVars; ++k) x[k] += u[j] * lf.basis[j][k].get_si();
    }
    for (int k = 0; k < kNumVars; ++k) lo[k] = first ? x[k] : std::min(lo[k], x[k]);
    first = false;
    terms.emplace_back(x, c);
  }
  Polynomial out;
  for (const auto& [x, c] : terms) {
    Exponent e{};
    for (int k = 0; k < kNumVars; ++k) e[k] = static_cast<int>(x[k] - lo[k]);
    out.add_term(e, c);
  }
  return primitive_integer(out);
}

struct Kronecker {
  std::vector<int> order;  // lattice coordinates, least significant first
  std::vector<long> radix;
};

Kronecker choose_kronecker(const Polynomial& f, int dim) {
  std::vector<int> degs(dim);
  for (int j = 0; j < dim; ++j) degs[j] = f.degree_in(j);
  std::vector<int> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  Kronecker best;
  long best_deg = -1;
  do {
    long scale = 1, total = 0;
    std::vector<long> radix;
    for (int j : perm) {
      total += degs[j] * scale;
      radix.push_back(scale);
      scale *= degs[j] + 1;
    }
    if (best_deg < 0 || total < best_deg) {
      best_deg = total;
      best = {perm, radix};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

upoly::ZPoly kronecker_image(const Polynomial& f, const Kronecker& k) {
  upoly::ZPoly out;
  for (const auto& [u, c] : f.terms()) {
    long s = 0;
    for (std::size_t i = 0; i < k.order.size(); ++i) s += u[k.order[i]] * k.radix[i];
    if (out.size() <= static_cast<std::size_t>(s)) out.resize(s + 1, 0);
    if (c.get_den() != 1) throw std::logic_error("Kronecker image needs integer coefficients");
    out[s] += c.get_num();
  }
  upoly::trim(out);
  return out;
}

Polynomial kronecker_preimage(const upoly::ZPoly& p, const Kronecker& k) {
  Polynomial out;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (p[s] == 0) continue;
    Exponent u{};
    long rest = static_cast<long>(s);
    for (std::size_t i = k.order.size(); i-- > 0;) {
      u[k.order[i]] = static_cast<int>(rest / k.radix[i]);
      rest %= k.radix[i];
    }
    out.add_term(u, Rational(p[s]));
  }
  return out;
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

}  // namespace

namespace {

Integer integer_content(const Polynomial& p) {
  Integer g = 0;
  for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

Integer max_norm(const Polynomial& p) {
  Integer m = 0;
  for (const auto& [e, c] : p.terms()) m = std::max<Integer>(m, abs(c.get_num()));
  return m;
}

// Heuristic gcd of integer polynomials in the first `vars` variables:
// evaluate the last one at a large integer, recurse, and read the answer
// back off its xi-adic digits. Only returned after a division check.
std::optional<Polynomial> heuristic_gcd(const Polynomial& a, const Polynomial& b, int vars) {
  const Integer ca = integer_content(a), cb = integer_content(b);
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (vars == 0) return Polynomial::constant(Rational(c));
  const Polynomial pa = a * Rational(1, ca), pb = b * Rational(1, cb);
  const int v = vars - 1;
  if (pa.degree_in(v) == 0 && pb.degree_in(v) == 0) {
    auto g = heuristic_gcd(pa, pb, v);
    if (!g) return g;
    return *g * Rational(c);
  }
  Integer xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt, xi = xi * 73794 / 27011) {
    const Polynomial ea = pa.evaluate(v, Rational(xi)), eb = pb.evaluate(v, Rational(xi));
    if (ea.is_zero() || eb.is_zero()) continue;
    auto gamma = heuristic_gcd(ea, eb, v);
    if (!gamma) continue;
    Polynomial g, rest = *gamma;
    for (int i = 0; !rest.is_zero(); ++i) {
      Polynomial digit;
      for (const auto& [e, coef] : rest.terms()) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), coef.get_num_mpz_t(), xi.get_mpz_t());
        if (2 * r > xi) r -= xi;
        if (r != 0) digit.add_term(e, Rational(r));
      }
      Exponent shift{};
      shift[v] = i;
      g += digit.multiply_monomial(shift);
      rest = (rest - digit) * Rational(Integer(1), xi);
    }
    if (g.is_zero()) continue;
    g = primitive_integer(g);
    if (divide_exact(pa, g) && divide_exact(pb, g)) return g * Rational(c);
  }
  return std::nullopt;
}

// Splits p along gcd(p, dp/dv) until no derivative shares a factor with it.
// The leaves multiply back to p and each is square-free.
void split_repeated(const Polynomial& p, std::vector<Polynomial>& leaves) {
  for (int v = 0; v < kNumVars; ++v) {
    if (p.degree_in(v) == 0) continue;
    auto g = heuristic_gcd(p, primitive_integer(p.derivative(v)), kNumVars);
    if (!g || g->total_degree() == 0) continue;
    auto q = divide_exact(p, *g);
    if (!q) throw std::logic_error("gcd does not divide its argument");
    split_repeated(primitive_integer(*g), leaves);
    split_repeated(primitive_integer(*q), leaves);
    return;
  }
  leaves.push_back(p);
}

// Irreducible factors of a polynomial without monomial content.
std::vector<std::pair<Polynomial, int>> kronecker_factor(const Polynomial& h, std::uint64_t seed,
                                                         std::size_t subset_budget, bool& exhausted) {
  const LatticeForm lf = to_lattice(h);
  // Sparse supports give Kronecker images full of cyclotomic factors, which
  // swamps recombination; a translation u -> u + c makes the image dense.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, 3);
  std::array<Polynomial, kNumVars> there, back;
  for (int j = 0; j < kNumVars; ++j) {
    there[j] = back[j] = Polynomial::variable(j);
    if (j >= lf.dim) continue;
    const int c = (rng() % 2 ? 1 : -1) * pick(rng);
    there[j] += Polynomial::constant(c);
    back[j] -= Polynomial::constant(c);
  }
  const int deg = lf.poly.total_degree();
  const Substitution unshift(back, deg);
  const Polynomial shifted = apply_substitution(lf.poly, Substitution(there, deg));
  const Kronecker kr = choose_kronecker(shifted, lf.dim);
  const upoly::ZFactorization uf = upoly::factor(kronecker_image(shifted, kr), seed);
  std::vector<upoly::ZPoly> pool;
  for (const auto& [p, m] : uf.factors) {
    for (int i = 0; i < m; ++i) pool.push_back(p);
  }

  std::vector<std::pair<Polynomial, int>> lattice_factors;
  Polynomial rest = shifted;
  std::size_t tested = 0;
  std::size_t size = 1;
  while (rest.total_degree() > 0 && 2 * size <= pool.size() && !exhausted) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      if (++tested > subset_budget) {
        exhausted = true;
        break;
      }
      upoly::ZPoly prod{1};
      for (auto i : idx) prod = upoly::mul(prod, pool[i]);
      Polynomial cand = kronecker_preimage(prod, kr);
      if (cand.total_degree() < 1) continue;
      auto q = divide_exact(rest, cand);
      if (!q) continue;
      int mult = 0;
      while (q) {
        rest = *q;
        ++mult;
        q = divide_exact(rest, cand);
      }
      lattice_factors.emplace_back(apply_substitution(cand, unshift), mult);
      // Copies of a univariate factor are interchangeable, so erase by value.
      std::vector<upoly::ZPoly> removed;
      for (auto i : idx) removed.push_back(pool[i]);
      for (int r = 0; r < mult; ++r) {
        for (const auto& f : removed) {
          auto it = std::find(pool.begin(), pool.end(), f);
          if (it == pool.end()) throw std::logic_error("factor pool out of sync");
          pool.erase(it);
        }
      }
      found = true;
      break;
    } while (next_combination(idx, pool.size()));
    if (!found && !exhausted) ++size;
  }
  if (rest.total_degree() > 0) lattice_factors.emplace_back(apply_substitution(rest, unshift), 1);

  std::vector<std::pair<Polynomial, int>> out;
  for (const auto& [f, m] : lattice_factors) {
    Polynomial back = from_lattice(f, lf);
    if (back.total_degree() > 0) out.emplace_back(primitive_integer(back), m);
  }
  return out;
}

}  // namespace

Factorization factor_polynomial(const Polynomial& g, std::uint64_t seed, std::size_t subset_budget) {
  if (g.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  Factorization out;
  out.monomial_content = g.monomial_content();
  if (g.is_monomial()) {
    out.constant = g.terms().begin()->second;
    return out;
  }

  std::vector<Polynomial> leaves;
  split_repeated(primitive_integer(g.divide_monomial(out.monomial_content)), leaves);
  bool exhausted = false;
  for (const auto& leaf : leaves) {
    for (const auto& [f, m] : kronecker_factor(leaf, seed, subset_budget, exhausted)) {
      auto it = std::find_if(out.factors.begin(), out.factors.end(), [&](const auto& e) { return e.first == f; });
      if (it == out.factors.end()) {
        out.factors.emplace_back(f, m);
      } else {
        it->second += m;
      }
    }
  }
  if (exhausted) {
    out.complete = false;
    out.warnings.push_back("factorization budget of " + std::to_string(subset_budget) +
                           " recombination subsets exhausted; some component may be reducible");
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.total_degree() != b.first.total_degree()) return a.first.total_degree() < b.first.total_degree();
    return a.first.to_string() < b.first.to_string();
  });

  Polynomial prod = Polynomial::monomial(out.monomial_content);
  for (const auto& [f, m] : out.factors) {
    for (int i = 0; i < m; ++i) prod = prod * f;
  }
  const Rational c = g.terms().rbegin()->second / prod.terms().rbegin()->second;
  if (prod * c != g) throw std::logic_error("factorization does not reproduce its input");
  out.constant = c;
  return out;
}

}  // namespace cdv
