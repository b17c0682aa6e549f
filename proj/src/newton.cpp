#include "cdv/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "cdv/intlattice.hpp"
#include "cdv/upoly.hpp"

namespace cdv {

// ------------------------------------------------------------------ Weight

Weight::Weight(std::array<int, kNumVars> w) : w_(w) {
  int g = 0;
  for (int v : w) {
    if (v < 1) throw std::invalid_argument("weight entries must be positive");
    g = std::gcd(g, v);
  }
  if (g != 1) throw std::invalid_argument("weight must be primitive");
}

Weight Weight::primitive_of(std::array<long, kNumVars> w) {
  long g = 0;
  for (long v : w) {
    if (v < 1) throw std::invalid_argument("weight entries must be positive");
    g = std::gcd(g, v);
  }
  std::array<int, kNumVars> r{};
  for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<int>(w[i] / g);
  return Weight(r);
}

long Weight::sum() const { return std::accumulate(w_.begin(), w_.end(), 0L); }

long Weight::pair(const Exponent& e) const {
  long s = 0;
  for (int i = 0; i < kNumVars; ++i) s += static_cast<long>(w_[i]) * e[i];
  return s;
}

std::string Weight::to_string() const {
  return "(" + std::to_string(w_[0]) + "," + std::to_string(w_[1]) + "," + std::to_string(w_[2]) + "," +
         std::to_string(w_[3]) + ")";
}

// ------------------------------------------------------------------ diagram

namespace {

using Normal = std::array<long, kNumVars>;
using Vec = std::array<long, kNumVars>;

long det3(const std::array<std::array<long, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Vector orthogonal to a, b, c (generalized cross product); zero if dependent.
Normal cross(const Vec& a, const Vec& b, const Vec& c) {
  Normal n{};
  for (int i = 0; i < kNumVars; ++i) {
    std::array<std::array<long, 3>, 3> m{};
    int col = 0;
    for (int j = 0; j < kNumVars; ++j) {
      if (j == i) continue;
      m[0][col] = a[j];
      m[1][col] = b[j];
      m[2][col] = c[j];
      ++col;
    }
    n[i] = (i % 2 == 0 ? 1 : -1) * det3(m);
  }
  return n;
}

// Non-negative primitive representative, or nullopt when entries have mixed signs.
std::optional<Normal> orient(Normal n) {
  bool pos = false, neg = false;
  for (long v : n) {
    pos |= v > 0;
    neg |= v < 0;
  }
  if (pos == neg) return std::nullopt;
  long g = 0;
  for (auto& v : n) {
    if (neg) v = -v;
    g = std::gcd(g, v);
  }
  for (auto& v : n) v /= g;
  return n;
}

long dot(const Normal& n, const Exponent& e) {
  long s = 0;
  for (int i = 0; i < kNumVars; ++i) s += n[i] * e[i];
  return s;
}

using PointSet = std::vector<bool>;

std::vector<Exponent> minimal_points(const Polynomial& f) {
  auto pts = f.support();
  std::vector<Exponent> out;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : pts) {
      if (strictly_dominates(p, q)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(p);
  }
  return out;
}

}  // namespace

NewtonDiagram build_diagram(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("Newton diagram of the zero polynomial");
  NewtonDiagram d;
  d.source = f;
  const auto pts = minimal_points(f);
  const std::size_t n = pts.size();

  std::vector<Vec> unit(kNumVars);
  for (int k = 0; k < kNumVars; ++k) {
    unit[k] = {};
    unit[k][k] = 1;
  }
  auto diff = [&](std::size_t i, std::size_t j) {
    Vec v{};
    for (int k = 0; k < kNumVars; ++k) v[k] = pts[i][k] - pts[j][k];
    return v;
  };

  std::set<Normal> candidates;
  auto consider = [&](const Vec& a, const Vec& b, const Vec& c) {
    if (auto nrm = orient(cross(a, b, c))) candidates.insert(*nrm);
  };
  // Hyperplanes through point 0 of each subset, spanned by point differences
  // and coordinate directions.
  for (std::size_t i = 0; i < n; ++i) {
    for (int a = 0; a < kNumVars; ++a)
      for (int b = a + 1; b < kNumVars; ++b)
        for (int c = b + 1; c < kNumVars; ++c) consider(unit[a], unit[b], unit[c]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec dj = diff(j, i);
      for (int a = 0; a < kNumVars; ++a)
        for (int b = a + 1; b < kNumVars; ++b) consider(dj, unit[a], unit[b]);
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec dk = diff(k, i);
        for (int a = 0; a < kNumVars; ++a) consider(dj, dk, unit[a]);
        for (std::size_t l = k + 1; l < n; ++l) consider(dj, dk, diff(l, i));
      }
    }
  }

  std::vector<PointSet> facet_sets;
  for (const auto& nrm : candidates) {
    long lo = dot(nrm, pts[0]);
    for (const auto& p : pts) lo = std::min(lo, dot(nrm, p));
    PointSet tight(n, false);
    std::vector<IntVector> span;
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (dot(nrm, pts[i]) != lo) continue;
      tight[i] = true;
      if (first == n) {
        first = i;
        continue;
      }
      IntVector v(kNumVars);
      for (int k = 0; k < kNumVars; ++k) v[k] = pts[i][k] - pts[first][k];
      span.push_back(std::move(v));
    }
    for (int k = 0; k < kNumVars; ++k) {
      if (nrm[k] != 0) continue;
      IntVector v(kNumVars, 0);
      v[k] = 1;
      span.push_back(std::move(v));
    }
    if (rational_rank(span) != kNumVars - 1) continue;
    d.facet_normals.push_back(nrm);
    facet_sets.push_back(std::move(tight));
  }

  // Faces are the nonempty intersections of facets.
  std::set<PointSet> faces(facet_sets.begin(), facet_sets.end());
  std::vector<PointSet> frontier(faces.begin(), faces.end());
  while (!frontier.empty()) {
    std::vector<PointSet> next;
    for (const auto& a : frontier) {
      for (const auto& b : facet_sets) {
        PointSet c(n);
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
          c[i] = a[i] && b[i];
          any |= c[i];
        }
        if (any && faces.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }

  for (const auto& set : faces) {
    Normal total{};
    for (std::size_t fi = 0; fi < facet_sets.size(); ++fi) {
      bool contains = true;
      for (std::size_t i = 0; i < n && contains; ++i) contains = !set[i] || facet_sets[fi][i];
      if (!contains) continue;
      for (int k = 0; k < kNumVars; ++k) total[k] += d.facet_normals[fi][k];
    }
    if (std::any_of(total.begin(), total.end(), [](long v) { return v <= 0; })) continue;
    Face face;
    for (std::size_t i = 0; i < n; ++i) {
      if (set[i]) face.lattice_points.push_back(pts[i]);
    }
    face.dimension = affine_rank(face.lattice_points);
    face.witness = Weight::primitive_of(total);
    if (face.dimension == 0) d.vertices.push_back(face.lattice_points.front());
    d.faces.push_back(std::move(face));
  }
  std::sort(d.faces.begin(), d.faces.end(), [](const Face& a, const Face& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return std::lexicographical_compare(a.lattice_points.begin(), a.lattice_points.end(), b.lattice_points.begin(),
                                        b.lattice_points.end(), PrintOrder{});
  });
  std::sort(d.vertices.begin(), d.vertices.end(), PrintOrder{});
  return d;
}

long support_value(const NewtonDiagram& d, const Weight& w) {
  if (d.vertices.empty()) throw std::invalid_argument("diagram has no vertices");
  long best = w.pair(d.vertices.front());
  for (const auto& v : d.vertices) best = std::min(best, w.pair(v));
  return best;
}

Polynomial face_polynomial(const Polynomial& f, const Weight& w) {
  if (f.is_zero()) return f;
  long lo = w.pair(f.terms().begin()->first);
  for (const auto& [e, c] : f.terms()) lo = std::min(lo, w.pair(e));
  Polynomial out;
  for (const auto& [e, c] : f.terms()) {
    if (w.pair(e) == lo) out.add_term(e, c);
  }
  return out;
}

// ------------------------------------------------------------------ non-degeneracy

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::nondegenerate_certified:
      return "nondegenerate_certified";
    case Verdict::nondegenerate_probable:
      return "nondegenerate_probable";
    case Verdict::degenerate:
      return "degenerate";
  }
  return "unknown";
}

namespace {

constexpr std::uint64_t kPrimes[] = {2147483647, 2147483629, 2147483587, 2147483579, 2147483563};

using upoly::ModPoly;
using upoly::mulmod;

std::uint64_t to_mod(const Rational& q, std::uint64_t p) {
  const Integer pz(static_cast<unsigned long>(p));
  Integer num, den;
  mpz_fdiv_r(num.get_mpz_t(), q.get_num_mpz_t(), pz.get_mpz_t());
  mpz_fdiv_r(den.get_mpz_t(), q.get_den_mpz_t(), pz.get_mpz_t());
  if (den == 0) throw std::domain_error("denominator vanishes modulo p");
  return mulmod(num.get_ui(), upoly::invmod(den.get_ui(), p), p);
}

// Dense bivariate polynomial over F_p: c[i][j] is the coefficient of s^i r^j.
struct Bivariate {
  std::vector<std::vector<std::uint64_t>> c;

  int deg_s() const { return static_cast<int>(c.size()) - 1; }
  int deg_r() const {
    int m = -1;
    for (const auto& row : c) {
      for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j) {
        if (row[j] != 0) {
          m = std::max(m, j);
          break;
        }
      }
    }
    return m;
  }
  void add(int i, int j, std::uint64_t v, std::uint64_t p) {
    if (static_cast<int>(c.size()) <= i) c.resize(i + 1);
    if (static_cast<int>(c[i].size()) <= j) c[i].resize(j + 1, 0);
    c[i][j] = (c[i][j] + v) % p;
  }
  Bivariate d_s(std::uint64_t p) const {
    Bivariate out;
    for (std::size_t i = 1; i < c.size(); ++i)
      for (std::size_t j = 0; j < c[i].size(); ++j)
        if (c[i][j]) out.add(static_cast<int>(i - 1), static_cast<int>(j), mulmod(c[i][j], i % p, p), p);
    return out;
  }
  Bivariate d_r(std::uint64_t p) const {
    Bivariate out;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 1; j < c[i].size(); ++j)
        if (c[i][j]) out.add(static_cast<int>(i), static_cast<int>(j - 1), mulmod(c[i][j], j % p, p), p);
    return out;
  }
  // Polynomial in r after s = s0.
  ModPoly at_s(std::uint64_t s0, std::uint64_t p) const {
    ModPoly out;
    std::uint64_t pw = 1;
    for (const auto& row : c) {
      if (out.size() < row.size()) out.resize(row.size(), 0);
      for (std::size_t j = 0; j < row.size(); ++j) out[j] = (out[j] + mulmod(row[j], pw, p)) % p;
      pw = mulmod(pw, s0, p);
    }
    upoly::trim(out);
    return out;
  }
  // Leading coefficient in r, as a polynomial in s.
  ModPoly lead_r() const {
    const int m = deg_r();
    ModPoly out;
    for (const auto& row : c) out.push_back(static_cast<int>(row.size()) > m && m >= 0 ? row[m] : 0);
    upoly::trim(out);
    return out;
  }
};

std::uint64_t resultant(ModPoly a, ModPoly b, std::uint64_t p) {
  if (a.empty() || b.empty()) return 0;
  std::uint64_t res = 1;
  while (upoly::deg(b) > 0) {
    ModPoly r = upoly::rem(a, b, p);
    if (r.empty()) return 0;
    const int da = upoly::deg(a), db = upoly::deg(b), dr = upoly::deg(r);
    res = mulmod(res, upoly::powmod(b.back(), static_cast<std::uint64_t>(da - dr), p), p);
    if ((da % 2 == 1) && (db % 2 == 1)) res = (p - res) % p;
    a = std::move(b);
    b = std::move(r);
  }
  return mulmod(res, upoly::powmod(b[0], static_cast<std::uint64_t>(upoly::deg(a)), p), p);
}

// Newton interpolation through (xs[i], ys[i]).
ModPoly interpolate(const std::vector<std::uint64_t>& xs, const std::vector<std::uint64_t>& ys, std::uint64_t p) {
  const std::size_t n = xs.size();
  std::vector<std::uint64_t> coef = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      std::uint64_t num = (coef[i] + p - coef[i - 1]) % p;
      std::uint64_t den = (xs[i] + p - xs[i - j]) % p;
      coef[i] = mulmod(num, upoly::invmod(den, p), p);
    }
  }
  ModPoly out{coef[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    out = upoly::mul(out, ModPoly{(p - xs[i]) % p, 1}, p);
    if (out.empty()) out = ModPoly{0};
    out[0] = (out[0] + coef[i]) % p;
  }
  upoly::trim(out);
  return out;
}

// F_p-points where B and both partials vanish.
std::vector<std::pair<std::uint64_t, std::uint64_t>> singular_points(const Bivariate& b, std::uint64_t p,
                                                                     std::mt19937_64& rng) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  const Bivariate bs = b.d_s(p), br = b.d_r(p);
  std::uniform_int_distribution<std::uint64_t> any(1, p - 1);
  auto points_over = [&](std::uint64_t s0) {
    ModPoly h = upoly::gcd(b.at_s(s0, p), br.at_s(s0, p), p);
    h = upoly::gcd(h, bs.at_s(s0, p), p);
    if (h.empty()) {
      // Whole line s = s0 is singular.
      out.emplace_back(s0, any(rng));
      return;
    }
    for (auto r0 : upoly::roots(h, p, rng)) out.emplace_back(s0, r0);
  };

  const int m = b.deg_r(), n = b.deg_s();
  if (m <= 0) {
    ModPoly univ;
    for (const auto& row : b.c) univ.push_back(row.empty() ? 0 : row[0]);
    upoly::trim(univ);
    ModPoly g = upoly::gcd(univ, upoly::derivative(univ, p), p);
    for (auto s0 : upoly::roots(g, p, rng)) out.emplace_back(s0, any(rng));
    return out;
  }

  const ModPoly lead = b.lead_r();
  const int bound = 2 * m * std::max(n, 0) + 1;
  std::vector<std::uint64_t> xs, ys;
  while (static_cast<int>(xs.size()) < bound + 1) {
    std::uint64_t s0 = any(rng);
    if (upoly::eval(lead, s0, p) == 0 || std::find(xs.begin(), xs.end(), s0) != xs.end()) continue;
    xs.push_back(s0);
    ys.push_back(resultant(b.at_s(s0, p), br.at_s(s0, p), p));
  }
  const ModPoly res = interpolate(xs, ys, p);
  std::vector<std::uint64_t> cands;
  if (res.empty()) {
    // Repeated component: sample vertical lines instead.
    for (int i = 0; i < 64; ++i) cands.push_back(any(rng));
  } else {
    cands = upoly::roots(res, p, rng);
  }
  for (auto s0 : upoly::roots(lead, p, rng)) cands.push_back(s0);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (auto s0 : cands) points_over(s0);
  return out;
}

// Evaluates a rational polynomial at a point of F_p^4.
std::uint64_t eval_mod(const Polynomial& g, const std::array<std::uint64_t, kNumVars>& x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : g.terms()) {
    std::uint64_t term = to_mod(c, p);
    for (int k = 0; k < kNumVars; ++k) term = mulmod(term, upoly::powmod(x[k], e[k], p), p);
    acc = (acc + term) % p;
  }
  return acc;
}

bool singular_on_torus(const Polynomial& g, const std::array<std::uint64_t, kNumVars>& x, std::uint64_t p) {
  for (auto v : x) {
    if (v % p == 0) return false;
  }
  if (eval_mod(g, x, p) != 0) return false;
  for (int k = 0; k < kNumVars; ++k) {
    if (eval_mod(g.derivative(k), x, p) != 0) return false;
  }
  return true;
}

// Bivariate image of g restricted to x_free = base + s*dir1 + r*dir2; other
// coordinates are fixed at 1.
Bivariate restrict_to_plane(const Polynomial& g, const std::vector<int>& free, const std::vector<std::uint64_t>& base,
                            const std::vector<std::uint64_t>& dir1, const std::vector<std::uint64_t>& dir2,
                            std::uint64_t p) {
  Bivariate out;
  // Cache of powers of each linear form, as bivariate polynomials.
  std::vector<std::vector<Bivariate>> powers(free.size());
  auto mul = [&](const Bivariate& a, const Bivariate& b) {
    Bivariate r;
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < a.c[i].size(); ++j) {
        if (!a.c[i][j]) continue;
        for (std::size_t k = 0; k < b.c.size(); ++k)
          for (std::size_t l = 0; l < b.c[k].size(); ++l)
            if (b.c[k][l]) r.add(static_cast<int>(i + k), static_cast<int>(j + l), mulmod(a.c[i][j], b.c[k][l], p), p);
      }
    return r;
  };
  for (std::size_t v = 0; v < free.size(); ++v) {
    Bivariate one, lin;
    one.add(0, 0, 1, p);
    lin.add(0, 0, base[v], p);
    lin.add(1, 0, dir1[v], p);
    lin.add(0, 1, dir2[v], p);
    powers[v].push_back(one);
    powers[v].push_back(lin);
  }
  for (const auto& [e, c] : g.terms()) {
    Bivariate term;
    term.add(0, 0, to_mod(c, p), p);
    for (std::size_t v = 0; v < free.size(); ++v) {
      const int k = e[free[v]];
      while (static_cast<int>(powers[v].size()) <= k) powers[v].push_back(mul(powers[v].back(), powers[v][1]));
      term = mul(term, powers[v][k]);
    }
    for (std::size_t i = 0; i < term.c.size(); ++i)
      for (std::size_t j = 0; j < term.c[i].size(); ++j)
        if (term.c[i][j]) out.add(static_cast<int>(i), static_cast<int>(j), term.c[i][j], p);
  }
  return out;
}

// g is the torus slice of `original`; candidates are verified against `original`.
std::optional<std::array<std::uint64_t, kNumVars>> find_singular_mod(const Polynomial& g, const Polynomial& original,
                                                                     const std::vector<int>& free, std::uint64_t p,
                                                                     int planes, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> any(1, p - 1);
  auto point = [&](const std::vector<std::uint64_t>& vals) {
    std::array<std::uint64_t, kNumVars> x;
    x.fill(1);
    for (std::size_t v = 0; v < free.size(); ++v) x[free[v]] = vals[v];
    return x;
  };
  const int dim = static_cast<int>(free.size());
  if (dim == 2) {
    Bivariate b;
    for (const auto& [e, c] : g.terms()) b.add(e[free[0]], e[free[1]], to_mod(c, p), p);
    for (auto [s0, r0] : singular_points(b, p, rng)) {
      auto x = point({s0, r0});
      if (singular_on_torus(original, x, p)) return x;
    }
    return std::nullopt;
  }
  for (int trial = 0; trial < planes; ++trial) {
    std::vector<std::uint64_t> base(dim), d1(dim), d2(dim);
    for (int v = 0; v < dim; ++v) {
      base[v] = any(rng);
      d1[v] = any(rng);
      d2[v] = any(rng);
    }
    Bivariate b = restrict_to_plane(g, free, base, d1, d2, p);
    for (auto [s0, r0] : singular_points(b, p, rng)) {
      std::vector<std::uint64_t> vals(dim);
      for (int v = 0; v < dim; ++v)
        vals[v] = (base[v] + mulmod(d1[v], s0, p) + mulmod(d2[v], r0, p)) % p;
      auto x = point(vals);
      if (singular_on_torus(original, x, p)) return x;
    }
  }
  return std::nullopt;
}

upoly::ZPoly univariate_integer(const Polynomial& g, int var) {
  Polynomial prim = primitive_integer(g);
  upoly::ZPoly out;
  for (const auto& [e, c] : prim.terms()) {
    if (static_cast<int>(out.size()) <= e[var]) out.resize(e[var] + 1, 0);
    out[e[var]] += c.get_num();
  }
  upoly::trim(out);
  return out;
}

}  // namespace

NondegeneracyResult check_face_polynomial(const Polynomial& g, const NondegeneracyOptions& opts) {
  NondegeneracyResult res;
  if (g.is_zero()) throw std::invalid_argument("zero face polynomial");
  if (g.size() <= 2) {
    res.verdict = Verdict::nondegenerate_certified;
    res.method = g.size() == 1 ? "monomial" : "binomial";
    return res;
  }
  for (int v = 0; v < kNumVars; ++v) {
    Polynomial dv = g.derivative(v);
    if (dv.is_monomial()) {
      res.verdict = Verdict::nondegenerate_certified;
      res.method = std::string("partial derivative in ") + kVarNames[v] + " is a monomial";
      return res;
    }
  }

  const auto pts = g.support();
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IntVector v(kNumVars);
    for (int k = 0; k < kNumVars; ++k) v[k] = pts[i][k] - pts[0][k];
    diffs.push_back(std::move(v));
  }
  const int dim = rational_rank(diffs);
  const auto normals = rational_kernel(diffs, kNumVars);

  // Coordinates fixed to 1 by the torus action preserving g up to scaling.
  std::vector<int> fixed, free;
  for (unsigned mask = 0; mask < (1u << kNumVars); ++mask) {
    if (__builtin_popcount(mask) != kNumVars - dim) continue;
    std::vector<IntVector> sub;
    for (const auto& nrm : normals) {
      IntVector row;
      for (int k = 0; k < kNumVars; ++k) {
        if (mask & (1u << k)) row.push_back(nrm[k]);
      }
      sub.push_back(std::move(row));
    }
    if (rational_rank(sub) != kNumVars - dim) continue;
    for (int k = 0; k < kNumVars; ++k) (mask & (1u << k) ? fixed : free).push_back(k);
    break;
  }
  if (static_cast<int>(free.size()) != dim) throw std::logic_error("no torus slice for face polynomial");

  Polynomial reduced = g;
  for (int k : fixed) reduced = reduced.evaluate(k, 1);
  reduced = reduced.divide_monomial(reduced.monomial_content());

  if (dim == 1) {
    res.method = "exact repeated-root test";
    const upoly::ZPoly h = univariate_integer(reduced, free[0]);
    const upoly::ZPoly common = upoly::gcd(h, upoly::derivative(h));
    if (upoly::deg(common) < 1) {
      res.verdict = Verdict::nondegenerate_certified;
      return res;
    }
    res.verdict = Verdict::degenerate;
    for (const auto& [fac, m] : upoly::factor(common, opts.seed).factors) {
      if (upoly::deg(fac) != 1) continue;
      std::array<Rational, kNumVars> w;
      w.fill(1);
      w[free[0]] = Rational(-fac[0], fac[1]);
      w[free[0]].canonicalize();
      res.rational_witness = w;
      return res;
    }
    std::string s;
    for (std::size_t i = 0; i < common.size(); ++i) s += (i ? "," : "") + common[i].get_str();
    res.note = "repeated root is irrational; repeated part has coefficients [" + s + "]";
    return res;
  }

  res.method = dim == 2 ? "resultant search over prime fields" : "plane-section search over prime fields";
  std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ULL + 17);
  int hits = 0;
  const int primes = std::min<int>(opts.primes, static_cast<int>(std::size(kPrimes)));
  for (int i = 0; i < primes; ++i) {
    auto x = find_singular_mod(reduced, g, free, kPrimes[i], opts.planes_per_prime, rng);
    if (!x) break;
    if (hits == 0) {
      res.witness_prime = kPrimes[i];
      res.modular_witness = *x;
    }
    ++hits;
  }
  if (hits == primes && primes > 0) {
    res.verdict = Verdict::degenerate;
    res.note = "singular torus point found modulo each of " + std::to_string(primes) + " primes";
  } else {
    res.verdict = Verdict::nondegenerate_probable;
    res.witness_prime.reset();
    res.modular_witness.reset();
    if (hits > 0) res.note = "singular point modulo some but not all primes";
  }
  return res;
}

std::vector<NondegeneracyResult> check_nondegeneracy(const NewtonDiagram& d, const NondegeneracyOptions& opts) {
  std::vector<NondegeneracyResult> out;
  for (const auto& face : d.faces) out.push_back(check_face_polynomial(face_polynomial(d.source, face.witness), opts));
  return out;
}

}  // namespace cdv
