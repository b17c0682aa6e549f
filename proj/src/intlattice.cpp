#include "cdv/intlattice.hpp"

#include <algorithm>

namespace cdv {

std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, std::size_t n) {
  std::vector<IntVector> a = rows;
  // u holds the accumulated unimodular column transform, stored by column.
  std::vector<IntVector> u(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

  auto column_op = [&](std::size_t c1, std::size_t c2, const Integer& p, const Integer& q, const Integer& r,
                       const Integer& s) {
    // (col c1, col c2) <- (p*c1 + q*c2, r*c1 + s*c2)
    for (auto& row : a) {
      Integer x = row[c1], y = row[c2];
      row[c1] = p * x + q * y;
      row[c2] = r * x + s * y;
    }
    for (std::size_t k = 0; k < n; ++k) {
      Integer x = u[c1][k], y = u[c2][k];
      u[c1][k] = p * x + q * y;
      u[c2][k] = r * x + s * y;
    }
  };

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < a.size() && pivot < n; ++r) {
    for (std::size_t c = pivot + 1; c < n; ++c) {
      if (a[r][c] == 0) continue;
      Integer x = a[r][pivot], y = a[r][c], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      // s*x + t*y = g; the second new column (-y/g, x/g) clears the entry.
      Integer xg = x / g, yg = y / g;
      column_op(pivot, c, s, t, -yg, xg);
    }
    if (a[r][pivot] != 0) ++pivot;
  }
  return {u.begin() + static_cast<std::ptrdiff_t>(pivot), u.end()};
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& m, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < n; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::vector<RatVector> to_rational(const std::vector<IntVector>& rows) {
  std::vector<RatVector> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return m;
}

}  // namespace

std::vector<IntVector> rational_kernel(const std::vector<IntVector>& rows, std::size_t n) {
  auto m = to_rational(rows);
  auto pivots = rref(m, n);
  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    RatVector v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    Integer den = 1;
    for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    IntVector iv;
    for (const auto& q : v) iv.push_back(Integer(q * den));
    basis.push_back(primitive(std::move(iv)));
  }
  return basis;
}

int rational_rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  auto m = to_rational(rows);
  return static_cast<int>(rref(m, rows.front().size()).size());
}

std::optional<RatVector> solve_in_span(const std::vector<IntVector>& basis, const IntVector& v) {
  const std::size_t n = v.size(), k = basis.size();
  // Augmented system: n equations, k unknowns.
  std::vector<RatVector> m(n, RatVector(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = v[i];
  }
  auto pivots = rref(m, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k) return std::nullopt;
  RatVector coords(k);
  for (std::size_t i = 0; i < k; ++i) coords[pivots[i]] = m[i][k];
  return coords;
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int affine_rank(const std::vector<Exponent>& points) {
  if (points.size() < 2) return 0;
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVector d(kNumVars);
    for (int k = 0; k < kNumVars; ++k) d[k] = points[i][k] - points[0][k];
    diffs.push_back(std::move(d));
  }
  return rational_rank(diffs);
}

}  // namespace cdv
