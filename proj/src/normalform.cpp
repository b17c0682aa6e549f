#include "cdv/normalform.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "cdv/factor.hpp"

namespace cdv {

SingularityType SingularityType::cA(int n) {
  if (n < 1) throw std::invalid_argument("cA(n) needs n >= 1");
  return {Kind::cA, n};
}

SingularityType SingularityType::cD(int n) {
  if (n < 4) throw std::invalid_argument("cD(n) needs n >= 4");
  return {Kind::cD, n};
}

SingularityType SingularityType::of(Kind k) {
  if (k == Kind::cA || k == Kind::cD) throw std::invalid_argument("cA and cD carry a parameter");
  return {k, 0};
}

bool SingularityType::is_cD_or_cE() const {
  return kind == Kind::cD || kind == Kind::cE6 || kind == Kind::cE7 || kind == Kind::cE8;
}

std::string SingularityType::to_string() const {
  switch (kind) {
    case Kind::cA: return "cA(" + std::to_string(n) + ")";
    case Kind::cD: return "cD(" + std::to_string(n) + ")";
    case Kind::cE6: return "cE6";
    case Kind::cE7: return "cE7";
    case Kind::cE8: return "cE8";
    case Kind::smooth: return "smooth";
    case Kind::other: return "other";
  }
  return "other";
}

SingularityType parse_type(const std::string& text) {
  if (text == "cE6") return SingularityType::of(SingularityType::Kind::cE6);
  if (text == "cE7") return SingularityType::of(SingularityType::Kind::cE7);
  if (text == "cE8") return SingularityType::of(SingularityType::Kind::cE8);
  if (text.size() > 3 && (text.rfind("cD", 0) == 0 || text.rfind("cA", 0) == 0)) {
    std::string num;
    if (text[2] == ':') {
      num = text.substr(3);
    } else if (text[2] == '(' && text.back() == ')') {
      num = text.substr(3, text.size() - 4);
    }
    if (!num.empty() && num.size() < 6 && std::all_of(num.begin(), num.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      int n = std::stoi(num);
      return text[1] == 'D' ? SingularityType::cD(n) : SingularityType::cA(n);
    }
  }
  throw std::invalid_argument("unknown singularity type '" + text + "' (expected cD:N, cE6, cE7 or cE8)");
}

namespace {

constexpr int X = 0, Y = 1, Z = 2, T = 3;
using Row = std::array<Rational, kNumVars>;
using Matrix = std::array<Row, kNumVars>;

Exponent unit_exponent(int v) {
  Exponent e{};
  e[v] = 1;
  return e;
}

Row unit(int v) {
  Row r{};
  r[v] = 1;
  return r;
}

int rank_of(std::vector<Row> rows) {
  int rank = 0;
  for (int col = 0; col < kNumVars && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) piv = i;
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (int j = 0; j < kNumVars; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

Matrix inverse(Matrix a) {
  Matrix inv{};
  for (int i = 0; i < kNumVars; ++i) inv[i] = unit(i);
  for (int col = 0; col < kNumVars; ++col) {
    int piv = col;
    while (piv < kNumVars && a[piv][col] == 0) ++piv;
    if (piv == kNumVars) throw std::logic_error("singular change of coordinates");
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    Rational d = a[col][col];
    for (int j = 0; j < kNumVars; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int i = 0; i < kNumVars; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (int j = 0; j < kNumVars; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

bool is_identity(const Matrix& m) {
  for (int i = 0; i < kNumVars; ++i)
    for (int j = 0; j < kNumVars; ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

Row primitive_row(Row r) {
  Integer l = 1, g = 0;
  for (const auto& c : r) l = lcm(l, c.get_den());
  for (auto& c : r) {
    c *= l;
    g = gcd(g, c.get_num());
  }
  int sign = 0;
  for (const auto& c : r)
    if (sign == 0 && c != 0) sign = c > 0 ? 1 : -1;
  for (auto& c : r) c /= g * sign;
  return r;
}

// Leading rows first, then unit vectors in variable order until the rows span.
Matrix complete_basis(std::vector<Row> rows) {
  for (int v = 0; v < kNumVars && rows.size() < kNumVars; ++v) {
    rows.push_back(unit(v));
    if (rank_of(rows) < static_cast<int>(rows.size())) rows.pop_back();
  }
  if (rows.size() != kNumVars) throw std::logic_error("dependent leading rows");
  Matrix m;
  std::copy(rows.begin(), rows.end(), m.begin());
  return m;
}

// old_i = sum_j a[i][j] * new_j.
Substitution from_columns(const Matrix& a, int trunc) {
  std::array<Polynomial, kNumVars> r;
  for (int i = 0; i < kNumVars; ++i)
    for (int j = 0; j < kNumVars; ++j)
      if (a[i][j] != 0) r[i].add_term(unit_exponent(j), a[i][j]);
  return Substitution(r, trunc);
}

Row linear_row(const Polynomial& l) {
  Row r{};
  for (const auto& [e, c] : l.terms()) {
    if (degree(e) != 1) throw std::logic_error("not a linear form");
    for (int v = 0; v < kNumVars; ++v)
      if (e[v] == 1) r[v] = c;
  }
  return r;
}

Matrix quadratic_matrix(const Polynomial& f) {
  Matrix s{};
  const Polynomial q = f.homogeneous_part(2);
  for (const auto& [e, c] : q.terms()) {
    std::vector<int> idx;
    for (int v = 0; v < kNumVars; ++v)
      for (int k = 0; k < e[v]; ++k) idx.push_back(v);
    if (idx[0] == idx[1]) {
      s[idx[0]][idx[0]] = c;
    } else {
      s[idx[0]][idx[1]] = c / 2;
      s[idx[1]][idx[0]] = c / 2;
    }
  }
  return s;
}

Rational quad_value(const Matrix& s, const Row& v) {
  Rational acc = 0;
  for (int i = 0; i < kNumVars; ++i)
    for (int j = 0; j < kNumVars; ++j) acc += v[i] * s[i][j] * v[j];
  return acc;
}

Exponent E(int x, int y, int z, int t) { return {x, y, z, t}; }

struct Rule {
  Exponent lead;
  int var;
};
using RuleFn = std::function<std::optional<Rule>(const Exponent&)>;

struct Engine {
  Polynomial f;
  int trunc;
  int budget;
  SingularityType known;
  std::vector<Substitution> changes;
  int steps = 0;

  void apply(const Substitution& s) {
    f = apply_substitution(f, s);
    changes.push_back(s);
  }

  void step(const Substitution& s, const Exponent& m) {
    if (steps >= budget) {
      throw NormalFormError("reduction did not terminate within " + std::to_string(budget) +
                                " coordinate changes; stuck removing " + monomial_string(m),
                            known, m);
    }
    ++steps;
    apply(s);
  }

  void change_basis(const Matrix& new_from_old) {
    if (!is_identity(new_from_old)) apply(from_columns(inverse(new_from_old), trunc));
  }
};

std::optional<Exponent> first_matching(const Polynomial& f, const std::function<bool(const Exponent&)>& pred) {
  std::optional<Exponent> best;
  for (const auto& [e, c] : f.terms())
    if (pred(e) && (!best || grlex_less(e, *best))) best = e;
  return best;
}

// Removes every monomial containing v other than v^2. Each pass clears the
// lowest total degree at once; the changes only create terms of higher degree.
void eliminate_square(Engine& eng, int v) {
  Exponent sq{};
  sq[v] = 2;
  auto killable = [&](const Exponent& e) { return e[v] >= 1 && e != sq; };
  while (auto m = first_matching(eng.f, killable)) {
    const int d = degree(*m);
    const bool linear = (*m)[v] == 1;
    Rational c = eng.f.coefficient(sq);
    Polynomial s, u;
    for (const auto& [e, a] : eng.f.terms()) {
      if (!killable(e) || degree(e) != d || (e[v] == 1) != linear) continue;
      Exponent rest = e;
      if (linear) {
        rest[v] = 0;
        s.add_term(rest, a / (2 * c));
      } else {
        rest[v] -= 2;
        u.add_term(rest, a / c);
      }
    }
    Polynomial repl;
    if (linear) {
      repl = Polynomial::variable(v) - s;
    } else {
      // v <- v (1 + u)^(-1/2) turns c v^2 (1 + u) into c v^2.
      Polynomial series = Polynomial::constant(1);
      Rational binom = 1;
      for (int k = 1; k <= eng.trunc; ++k) {
        binom *= Rational(-1, 2) - (k - 1);
        binom /= k;
        Polynomial uk = power_truncated(u, k, eng.trunc - 1);
        if (uk.is_zero()) break;
        series += binom * uk;
      }
      repl = multiply_truncated(Polynomial::variable(v), series, eng.trunc);
    }
    eng.step(Substitution::single(v, repl, eng.trunc), *m);
  }
}

// Removes monomials m through a leading term L and variable v of L:
// v <- v - s with s * dL/dv = coefficient * m. One pass per total degree.
void eliminate(Engine& eng, const RuleFn& rule) {
  while (true) {
    std::optional<Exponent> first;
    for (const auto& [e, c] : eng.f.terms())
      if (rule(e) && (!first || grlex_less(e, *first))) first = e;
    if (!first) return;
    const int d = degree(*first);
    std::array<Polynomial, kNumVars> repl;
    for (int v = 0; v < kNumVars; ++v) repl[v] = Polynomial::variable(v);
    for (const auto& [e, a] : eng.f.terms()) {
      auto r = rule(e);
      if (!r || degree(e) != d) continue;
      Rational l = eng.f.coefficient(r->lead);
      if (l == 0) throw NormalFormError("normal form term " + monomial_string(r->lead) + " vanished", eng.known, e);
      Exponent q = e;
      for (int i = 0; i < kNumVars; ++i) q[i] -= r->lead[i] - (i == r->var ? 1 : 0);
      repl[r->var] -= Polynomial::monomial(q, a / (l * r->lead[r->var]));
    }
    eng.step(Substitution(repl, eng.trunc), *first);
  }
}

std::optional<Rule> rule_cD(const Exponent& m) {
  if (m[X] > 0) return std::nullopt;
  if (m[Y] >= 2 && m[Z] == 0) return Rule{E(0, 2, 1, 0), Z};
  if (m[Y] == 1 && m[Z] >= 1) return Rule{E(0, 2, 1, 0), Y};
  return std::nullopt;
}

std::optional<Rule> rule_cE(SingularityType::Kind k, const Exponent& m) {
  if (m[X] > 0) return std::nullopt;
  const Exponent y3 = E(0, 3, 0, 0);
  switch (k) {
    case SingularityType::Kind::cE6:
      if (m[Y] == 2 && m[Z] < 4) return Rule{y3, Y};
      if (m[Y] <= 1 && m[Z] == 3) return Rule{E(0, 0, 4, 0), Z};
      break;
    case SingularityType::Kind::cE7:
      if (m[Y] == 2 && m[Z] < 3) return Rule{y3, Y};
      if (m[Y] == 1 && m[Z] == 2) return Rule{E(0, 1, 3, 0), Z};
      break;
    case SingularityType::Kind::cE8:
      if (m[Y] == 2 && m[Z] < 5) return Rule{y3, Y};
      if (m[Y] <= 1 && m[Z] == 4) return Rule{E(0, 0, 5, 0), Z};
      break;
    default:
      break;
  }
  return std::nullopt;
}

Polynomial select(const Polynomial& f, const std::function<bool(const Exponent&)>& pred) {
  Polynomial out;
  for (const auto& [e, c] : f.terms())
    if (pred(e)) out.add_term(e, c);
  return out;
}

// Value of a binary form in (z, t) at (1, kappa).
Rational at_direction(const Polynomial& g, const Rational& kappa) {
  Rational acc = 0;
  for (const auto& [e, c] : g.terms()) {
    Rational term = c;
    for (int i = 0; i < e[T]; ++i) term *= kappa;
    acc += term;
  }
  return acc;
}

// Shears t <- t + kappa z so that the z^k coefficient of the form g is nonzero.
void make_z_power_visible(Engine& eng, const Polynomial& g) {
  for (int k = 0; k < 64; ++k) {
    Rational kappa = (k % 2 == 0) ? Rational(k / 2) : Rational(-(k + 1) / 2);
    if (at_direction(g, kappa) == 0) continue;
    if (kappa != 0) {
      Polynomial repl = Polynomial::variable(T) + Polynomial::monomial(unit_exponent(Z), kappa);
      eng.apply(Substitution::single(T, repl, eng.trunc));
    }
    return;
  }
  throw std::logic_error("binary form vanishes at every tried direction");
}

std::vector<ConstraintCheck> b_constraints(const Polynomial& reduced, int count, int bound) {
  std::vector<ConstraintCheck> out;
  for (int i = 1; i <= count; ++i) {
    std::optional<int> b;
    for (const auto& [e, c] : reduced.terms())
      if (e[X] == 0 && e[Y] == 0 && e[Z] == i - 1 && (!b || e[T] < *b)) b = e[T];
    std::ostringstream s;
    s << "i=" << i << ": ";
    ConstraintCheck chk;
    if (b) {
      s << (i - 1) << " + b_" << i << " = " << (i - 1) << " + " << *b << " >= " << bound;
      chk.holds = i - 1 + *b >= bound;
    } else {
      s << "no " << monomial_string(E(0, 0, i - 1, 1)) << "-type term below the truncation degree (a_" << i << " = 0)";
    }
    chk.statement = s.str();
    out.push_back(chk);
  }
  return out;
}

struct LinearFactor {
  Row row;
  int multiplicity;
};

std::vector<LinearFactor> linear_factors(const Polynomial& cubic) {
  Factorization fac = factor_polynomial(cubic);
  std::vector<LinearFactor> out;
  for (int v = 0; v < kNumVars; ++v)
    if (fac.monomial_content[v] > 0) out.push_back({unit(v), fac.monomial_content[v]});
  for (const auto& [g, m] : fac.factors)
    if (g.total_degree() == 1) out.push_back({linear_row(g), m});
  return out;
}

NormalFormCertificate finish(Engine& eng, SingularityType type) {
  NormalFormCertificate cert;
  cert.type = type;
  cert.reduced = eng.f;
  cert.applied_changes = eng.changes;
  cert.truncation_degree = eng.trunc;
  return cert;
}

NormalFormCertificate reduce_cA(Engine& eng, const Matrix& s, int rank) {
  if (rank >= 3) return finish(eng, SingularityType::cA(1));
  // Split the rank-2 form as c1 L1^2 + c2 L2^2 and move L1, L2 to x, y.
  Row v{};
  bool found = false;
  for (int i = 0; i < kNumVars && !found; ++i)
    for (int j = i; j < kNumVars && !found; ++j) {
      v = unit(i);
      if (j != i) v[j] = 1;
      found = quad_value(s, v) != 0;
    }
  Row l1{};
  for (int i = 0; i < kNumVars; ++i)
    for (int j = 0; j < kNumVars; ++j) l1[i] += s[i][j] * v[j];
  Rational c1 = quad_value(s, v);
  Matrix rest = s;
  for (int i = 0; i < kNumVars; ++i)
    for (int j = 0; j < kNumVars; ++j) rest[i][j] -= l1[i] * l1[j] / c1;
  Row l2{};
  for (int k = 0; k < kNumVars; ++k)
    if (rest[k][k] != 0) {
      l2 = rest[k];
      break;
    }
  eng.change_basis(complete_basis({primitive_row(l1), primitive_row(l2)}));
  eliminate_square(eng, X);
  eliminate_square(eng, Y);
  Polynomial h = select(eng.f, [](const Exponent& e) { return e[X] == 0 && e[Y] == 0; });
  if (h.is_zero()) {
    throw NormalFormError("cA point with no (z,t)-term below the truncation degree: not isolated or truncation too small");
  }
  return finish(eng, SingularityType::cA(h.order() - 1));
}

NormalFormCertificate reduce_cE(Engine& eng, const Row& l) {
  eng.change_basis(complete_basis({unit(X), primitive_row(l)}));
  Polynomial q = select(eng.f, [](const Exponent& e) { return e[X] == 0 && e[Y] == 0; });
  Polynomial p = select(eng.f, [](const Exponent& e) { return e[X] == 0 && e[Y] == 1; });
  using K = SingularityType::Kind;
  K kind;
  Polynomial form;
  if (!q.homogeneous_part(4).is_zero()) {
    kind = K::cE6;
    form = q.homogeneous_part(4);
  } else if (!p.homogeneous_part(4).is_zero()) {
    kind = K::cE7;
    form = p.homogeneous_part(4).divide_monomial(E(0, 1, 0, 0));
  } else if (!q.homogeneous_part(5).is_zero()) {
    kind = K::cE8;
    form = q.homogeneous_part(5);
  } else {
    if (eng.trunc < 5) throw NormalFormError("truncation too small to separate cE6, cE7 and cE8");
    throw NormalFormError("cubic part is a cube but the 5-jet matches no cE normal form");
  }
  SingularityType type = SingularityType::of(kind);
  eng.known = type;
  make_z_power_visible(eng, form);
  eliminate(eng, [kind](const Exponent& m) { return rule_cE(kind, m); });
  NormalFormCertificate cert = finish(eng, type);
  if (kind == K::cE6) cert.satisfied_constraints = b_constraints(cert.reduced, 3, 4);
  if (kind == K::cE8) cert.satisfied_constraints = b_constraints(cert.reduced, 4, 5);
  if (kind == K::cE7) cert.notes.push_back("no b_i inequalities are attached to the cE7 form; none checked");
  return cert;
}

NormalFormCertificate finish_cD(Engine& eng, bool d4) {
  const int inf = std::numeric_limits<int>::max();
  int phi_order = inf, psi_b = inf;
  for (const auto& [e, c] : eng.f.terms()) {
    if (e[X] != 0) continue;
    if (e[Y] == 0) phi_order = std::min(phi_order, degree(e));
    if (e[Y] == 1 && e[Z] == 0) psi_b = std::min(psi_b, e[T]);
  }
  int n = 4;
  if (!d4) {
    int top = std::min(phi_order, psi_b == inf ? inf : 2 * psi_b - 1);
    if (top == inf) {
      throw NormalFormError("cD point with no (z,t)-term or y*t^b term below the truncation degree: "
                            "not isolated or truncation too small");
    }
    if (top > eng.trunc) throw NormalFormError("truncation too small to certify the b_i constraints of the cD form");
    n = top + 1;
  }
  NormalFormCertificate cert = finish(eng, SingularityType::cD(n));
  cert.satisfied_constraints = b_constraints(cert.reduced, n - 1, n - 1);
  return cert;
}

NormalFormCertificate reduce_cD4(Engine& eng, const Polynomial& cubic) {
  eng.known = SingularityType::cD(4);
  // A smooth rational point of the plane cubic becomes [1:0:0] with tangent z = 0.
  std::vector<Row> points = {unit(Y), unit(Z), unit(T)};
  const int h = 12;
  for (int a = -h; a <= h; ++a)
    for (int b = -h; b <= h; ++b)
      for (int c = -h; c <= h; ++c) {
        Row p{0, a, b, c};
        int nz = (a != 0) + (b != 0) + (c != 0);
        if (nz < 2) continue;
        int first = a != 0 ? a : b;
        if (first < 0 || gcd(gcd(Integer(a), Integer(b)), Integer(c)) != 1) continue;
        points.push_back(p);
      }
  std::stable_sort(points.begin() + 3, points.end(), [](const Row& u, const Row& v) {
    auto height = [](const Row& r) {
      Rational m = 0;
      for (const auto& x : r) m = std::max(m, Rational(abs(x)));
      return m;
    };
    return height(u) < height(v);
  });
  auto eval = [](const Polynomial& g, const Row& p) {
    Rational acc = 0;
    for (const auto& [e, c] : g.terms()) {
      Rational term = c;
      for (int v = 0; v < kNumVars; ++v)
        for (int k = 0; k < e[v]; ++k) term *= p[v];
      acc += term;
    }
    return acc;
  };
  for (const Row& p : points) {
    if (eval(cubic, p) != 0) continue;
    Row grad{};
    for (int v = Y; v <= T; ++v) grad[v] = eval(cubic.derivative(v), p);
    if (grad[Y] == 0 && grad[Z] == 0 && grad[T] == 0) continue;
    // Columns: x, the point, a direction off the tangent plane, a tangent direction.
    std::vector<Row> others;
    for (int v = Y; v <= T; ++v) others.push_back(unit(v));
    for (std::size_t i = 0; i < others.size(); ++i)
      for (std::size_t j = 0; j < others.size(); ++j) {
        if (i == j) continue;
        Row u = others[i], w = others[j];
        Rational gu = 0, gw = 0;
        for (int v = 0; v < kNumVars; ++v) {
          gu += grad[v] * u[v];
          gw += grad[v] * w[v];
        }
        if (gu == 0) continue;
        // Tangent direction: w minus its component off the tangent plane.
        Row tangent{};
        for (int v = 0; v < kNumVars; ++v) tangent[v] = w[v] - gw / gu * u[v];
        if (rank_of({unit(X), p, u, tangent}) < 4) continue;
        Matrix cols{};
        for (int r = 0; r < kNumVars; ++r) {
          cols[r][0] = unit(X)[r];
          cols[r][1] = p[r];
          cols[r][2] = u[r];
          cols[r][3] = tangent[r];
        }
        for (int k = 0; k < 7; ++k) {
          Engine trial = eng;
          if (!is_identity(cols)) trial.apply(from_columns(cols, eng.trunc));
          Rational kappa = (k % 2 == 0) ? Rational(k / 2) : Rational(-(k + 1) / 2);
          if (kappa != 0) {
            trial.apply(Substitution::single(T, Polynomial::variable(T) + Polynomial::monomial(unit_exponent(Z), kappa),
                                             eng.trunc));
          }
          eliminate(trial, rule_cD);
          if (trial.f.coefficient(E(0, 0, 3, 0)) != 0 && trial.f.coefficient(E(0, 2, 1, 0)) != 0) {
            eng = trial;
            return finish_cD(eng, true);
          }
        }
      }
  }
  throw NormalFormError("no rational coordinates bring the cD(4) cubic to the normal form shape", SingularityType::cD(4));
}

NormalFormCertificate reduce_impl(const Polynomial& input, int trunc) {
  if (input.is_zero()) throw std::invalid_argument("zero polynomial");
  if (input.coefficient(Exponent{}) != 0) throw std::invalid_argument("nonzero constant term: the origin is not on X");
  if (trunc < 2) throw NormalFormError("truncation too small");
  Engine eng{input.truncated(trunc), trunc, 10 * static_cast<int>(input.size()), {}, {}};
  if (eng.f.is_zero()) throw NormalFormError("truncation too small: every term was discarded");
  if (eng.f.order() == 1) throw NormalFormError("smooth point", SingularityType::of(SingularityType::Kind::smooth));

  Matrix s = quadratic_matrix(eng.f);
  std::vector<Row> rows(s.begin(), s.end());
  int rank = rank_of(rows);
  if (rank == 0) throw NormalFormError("multiplicity at least 3: not a cDV point");
  if (rank >= 2) return reduce_cA(eng, s, rank);

  // Rank one: the quadratic part is c L^2 with L a row of s.
  Row l{};
  for (const auto& r : s)
    if (rank_of({r}) == 1) {
      l = r;
      break;
    }
  eng.change_basis(complete_basis({primitive_row(l)}));
  eliminate_square(eng, X);

  Polynomial cubic = eng.f.homogeneous_part(3);
  if (cubic.is_zero()) {
    if (trunc < 3) throw NormalFormError("truncation too small");
    throw NormalFormError("cubic part vanishes after removing x: not a cDV point");
  }
  auto lin = linear_factors(cubic);
  for (const auto& lf : lin)
    if (lf.multiplicity == 3) return reduce_cE(eng, lf.row);
  for (const auto& lf : lin) {
    if (lf.multiplicity != 2) continue;
    Row m{};
    for (const auto& other : lin)
      if (other.multiplicity == 1) m = other.row;
    eng.change_basis(complete_basis({unit(X), primitive_row(lf.row), primitive_row(m)}));
    eng.known = {SingularityType::Kind::cD, 0};
    eliminate(eng, rule_cD);
    return finish_cD(eng, false);
  }
  return reduce_cD4(eng, cubic);
}

int resolve_truncation(const Polynomial& f, std::optional<int> t) { return t ? *t : default_truncation(f); }

}  // namespace

int default_truncation(const Polynomial& f) { return 2 * std::max(f.total_degree(), 0) + 4; }

SingularityType classify_type(const Polynomial& f, std::optional<int> truncation_degree) {
  try {
    return reduce_impl(f, resolve_truncation(f, truncation_degree)).type;
  } catch (const NormalFormError& e) {
    const auto& k = e.known_type();
    if (k.kind == SingularityType::Kind::cD && k.n == 0) return {};
    return k;
  }
}

NormalFormCertificate reduce_to_normal_form(const Polynomial& f, std::optional<int> truncation_degree) {
  return reduce_impl(f, resolve_truncation(f, truncation_degree));
}

Polynomial replay(const Polynomial& f, const std::vector<Substitution>& changes, int truncation_degree) {
  Polynomial g = f.truncated(truncation_degree);
  for (const auto& s : changes) g = apply_substitution(g, s);
  return g;
}

}  // namespace cdv
