#include "cdv/curvegeom.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "cdv/intlattice.hpp"

namespace cdv {

std::optional<ConeStructure> detect_cone(const Polynomial& component, const Weight& w) {
  if (component.is_zero()) throw std::invalid_argument("zero component");
  int missing = -1;
  for (int v = 0; v < kNumVars; ++v) {
    if (component.degree_in(v) > 0) continue;
    if (missing < 0 || w[v] > w[missing]) missing = v;
  }
  if (missing < 0) return std::nullopt;
  ConeStructure c;
  c.missing_variable = missing;
  int k = 0;
  for (int v = 0; v < kNumVars; ++v) {
    if (v == missing) continue;
    c.base_variables[k] = v;
    c.base_weights[k] = w[v];
    ++k;
  }
  c.base_equation = component;
  return c;
}

int chart_variable(const ConeStructure& c) {
  for (int k = 2; k >= 0; --k) {
    if (c.base_weights[k] == 1) return c.base_variables[k];
  }
  throw std::domain_error("no base variable of weight 1; chart not available");
}

Polynomial chart_polynomial(const ConeStructure& c) {
  return primitive_integer(c.base_equation.evaluate(chart_variable(c), 1));
}

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

long lattice_length(const LatticePoint& a, const LatticePoint& b) {
  return std::gcd(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]));
}

}  // namespace

LatticePolygon lattice_polygon(std::vector<LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // Monotone chain, dropping collinear points.
  std::vector<LatticePoint> hull;
  if (points.size() >= 3) {
    std::vector<LatticePoint> h(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
      while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
      h[k++] = p;
    }
    for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t && cross(h[k - 2], h[k - 1], points[i]) <= 0) --k;
      h[k++] = points[i];
    }
    h.resize(k - 1);
    hull = std::move(h);
  }

  LatticePolygon out;
  if (hull.size() < 3) {
    out.vertices = {points.front()};
    if (points.back() != points.front()) out.vertices.push_back(points.back());
    out.boundary_points = lattice_length(points.front(), points.back()) + 1;
    return out;
  }
  auto lowest = std::min_element(hull.begin(), hull.end(), [](const auto& a, const auto& b) {
    return std::tie(a[1], a[0]) < std::tie(b[1], b[0]);
  });
  std::rotate(hull.begin(), lowest, hull.end());
  out.vertices = hull;

  const std::size_t n = hull.size();
  LatticePoint lo = hull[0], hi = hull[0];
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % n];
    out.doubled_area += a[0] * b[1] - a[1] * b[0];
    out.boundary_points += lattice_length(a, b);
    for (int c = 0; c < 2; ++c) {
      lo[c] = std::min(lo[c], a[c]);
      hi[c] = std::max(hi[c], a[c]);
    }
  }
  for (long u = lo[0]; u <= hi[0]; ++u) {
    for (long v = lo[1]; v <= hi[1]; ++v) {
      const LatticePoint p{u, v};
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i) inside = cross(hull[i], hull[(i + 1) % n], p) > 0;
      if (inside) out.interior_points.push_back(p);
    }
  }
  return out;
}

std::vector<LatticePoint> plane_support(const Polynomial& g) {
  std::vector<int> vars;
  for (int v = 0; v < kNumVars; ++v) {
    if (g.degree_in(v) > 0) vars.push_back(v);
  }
  if (vars.size() > 2) throw std::invalid_argument("polynomial involves more than two variables: " + g.to_string());
  std::vector<LatticePoint> pts;
  for (const auto& [e, c] : g.terms()) {
    if (vars.empty()) {
      pts.push_back({0, 0});
    } else if (vars.size() == 1) {
      pts.push_back({e[vars[0]], 0});
    } else {
      pts.push_back({e[vars[1]], e[vars[0]]});
    }
  }
  return pts;
}

GenusResult polygon_genus(const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("zero polynomial");
  GenusResult r;
  r.polygon = lattice_polygon(plane_support(g));
  r.genus = static_cast<int>(r.polygon.interior_points.size());
  return r;
}

bool is_hyperelliptic(const LatticePolygon& p) {
  const auto& q = p.interior_points;
  for (std::size_t i = 2; i < q.size(); ++i) {
    if (cross(q[0], q[1], q[i]) != 0) return false;
  }
  return true;
}

std::string to_string(Rationality r) {
  switch (r) {
    case Rationality::rational: return "rational";
    case Rationality::non_rational: return "non_rational";
    case Rationality::rational_by_plt: return "rational_by_plt";
    case Rationality::undecided: return "undecided";
  }
  return "undecided";
}

bool is_plt_weight(const SingularityType& type, const Weight& w) {
  using K = SingularityType::Kind;
  switch (type.kind) {
    case K::cD: return w[0] >= 2 && w[1] == w[0] - 1 && w[2] == 2 && w[3] == 1;
    case K::cE6: return w == Weight({6, 4, 3, 1});
    case K::cE8: return w == Weight({15, 10, 6, 1});
    default: return false;
  }
}

namespace {

// Non-degeneracy of a plane curve with respect to its Newton polygon: the
// whole polynomial and every edge restriction.
Verdict check_chart(const Polynomial& chart, const LatticePolygon& poly, const NondegeneracyOptions& opts,
                    std::vector<std::string>& notes) {
  std::vector<Polynomial> pieces{chart};
  const auto pts = plane_support(chart);
  const std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; n >= 3 && i < n; ++i) {
    const auto& a = poly.vertices[i];
    const auto& b = poly.vertices[(i + 1) % n];
    Polynomial edge;
    std::size_t k = 0;
    for (const auto& [e, c] : chart.terms()) {
      if (cross(a, b, pts[k++]) == 0) edge.add_term(e, c);
    }
    pieces.push_back(edge);
  }
  Verdict overall = Verdict::nondegenerate_certified;
  for (const auto& piece : pieces) {
    if (piece.is_monomial()) continue;
    const auto r = check_face_polynomial(piece, opts);
    if (r.verdict == Verdict::degenerate) {
      notes.push_back("chart polynomial degenerate on " + piece.to_string() + " (" + r.method + ")");
      return Verdict::degenerate;
    }
    if (r.verdict == Verdict::nondegenerate_probable) overall = Verdict::nondegenerate_probable;
  }
  return overall;
}

}  // namespace

RationalityResult classify_rationality(const RationalityInput& in, const NondegeneracyOptions& opts) {
  if (in.component.is_zero() || in.face_polynomial.is_zero()) throw std::invalid_argument("zero component");
  RationalityResult r;
  r.face_dimension = affine_rank(in.face_polynomial.support());

  r.cone = detect_cone(in.component, in.weight);
  if (r.cone) {
    try {
      r.chart = chart_polynomial(*r.cone);
      r.genus = polygon_genus(*r.chart);
      r.hyperelliptic = is_hyperelliptic(r.genus->polygon);
      r.hyperelliptic_by_convention = r.genus->genus <= 1;
    } catch (const std::exception& e) {
      r.notes.push_back(e.what());
    }
  }

  auto decide = [&](Rationality v, std::string rule) {
    r.verdict = v;
    r.rule = std::move(rule);
    return r;
  };

  if (r.face_dimension <= 1) return decide(Rationality::rational, "face of dimension <= 1");
  if (in.type.kind == SingularityType::Kind::cA) return decide(Rationality::rational, "cA point");
  for (int v = 0; v < kNumVars; ++v) {
    if (in.component.degree_in(v) == 1) {
      return decide(Rationality::rational, std::string("linear in ") + kVarNames[v]);
    }
  }
  if (in.weight == Weight({1, 1, 1, 1}) && in.component.total_degree() == 2 && in.component.order() == 2) {
    return decide(Rationality::rational, "quadric in P^3");
  }
  if (is_plt_weight(in.type, in.weight)) return decide(Rationality::rational_by_plt, "plt weight");
  if (r.genus) {
    if (r.genus->genus == 0) return decide(Rationality::rational, "cone over a genus 0 curve");
    r.chart_check = check_chart(*r.chart, r.genus->polygon, opts, r.notes);
    if (*r.chart_check == Verdict::degenerate) {
      return decide(Rationality::undecided, "cone, but the chart curve is degenerate");
    }
    return decide(Rationality::non_rational, "cone over a curve of genus " + std::to_string(r.genus->genus));
  }
  return decide(Rationality::undecided, "no rule applies");
}

}  // namespace cdv
