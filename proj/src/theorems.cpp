#include "cdv/theorems.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cdv/intlattice.hpp"

namespace cdv {

using K = SingularityType::Kind;

std::string Quadruple::to_string() const {
  return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "," + d.get_str() + ")";
}

namespace {

void require_cD_or_cE(const SingularityType& type) {
  if (!type.is_cD_or_cE()) throw std::invalid_argument("expected a cD or cE type, got " + type.to_string());
}

bool conditions_hold(const SingularityType& type, const Rational& a, const Rational& b, const Rational& c) {
  const Rational two = 2, three = 3;
  switch (type.kind) {
    case K::cD: {
      const Rational s = 2 / b + 1 / c;
      const bool c_ok = c <= type.n - 1;
      return (a == two && s >= 1 && c_ok) || (a < two && s == 1 && c_ok);
    }
    case K::cE6:
      return (a == two && b <= three && c <= 4) || (a < two && b == three && c <= 4) ||
             (a < two && b < three && c == 4);
    case K::cE7:
      return (a == two && b <= three && 1 / b + 3 / c >= 1) || (a < two && b == three && c <= Rational(9, 2));
    case K::cE8:
      return (a == two && b <= three && c <= 5) || (a < two && b == three && c <= 5) ||
             (a < two && b < three && c == 5);
    default: return false;
  }
}

// Monomials the type's normal form may carry, with t- and z-exponents up to `top`.
std::vector<Exponent> admissible_support(const SingularityType& type, int top) {
  std::vector<Exponent> s{{2, 0, 0, 0}};
  auto add = [&](int y, int z, int t) { s.push_back({0, y, z, t}); };
  switch (type.kind) {
    case K::cD: {
      const int n = type.n;
      add(2, 1, 0);
      add(0, n - 1, 0);
      for (int j = 0; j <= n - 2; ++j)
        for (int b = std::max(1, n - 1 - j); b <= top; ++b) add(0, j, b);
      for (int b = 1; b <= top; ++b) add(1, 0, b);
      break;
    }
    case K::cE6:
      add(3, 0, 0);
      add(0, 4, 0);
      for (int j = 0; j <= 2; ++j) {
        for (int b = std::max(1, 4 - j); b <= top; ++b) add(0, j, b);
        for (int b = std::max(0, 3 - j); b <= top; ++b) add(1, j, b);
      }
      break;
    case K::cE7:
      add(3, 0, 0);
      add(1, 3, 0);
      for (int j = 0; j <= top; ++j)
        for (int b = std::max(0, 5 - j); b <= top; ++b) add(0, j, b);
      for (int b = 3; b <= top; ++b) add(1, 0, b);
      for (int b = 2; b <= top; ++b) add(1, 1, b);
      break;
    case K::cE8:
      add(3, 0, 0);
      add(0, 5, 0);
      for (int j = 0; j <= 3; ++j) {
        for (int b = std::max(1, 5 - j); b <= top; ++b) add(0, j, b);
        for (int b = std::max(0, 4 - j); b <= top; ++b) add(1, j, b);
      }
      break;
    default: break;
  }
  return s;
}

bool contains(const std::vector<Weight>& ws, const Weight& w) { return std::find(ws.begin(), ws.end(), w) != ws.end(); }

}  // namespace

std::vector<Quadruple> scan_quadruples(const SingularityType& type, int max_m) {
  require_cD_or_cE(type);
  std::vector<Quadruple> out;
  for (int m = 1; m <= max_m; ++m) {
    // Discrepancy one: w_1 + w_2 + w_3 + w_4 = m + 2.
    const int total = m + 2;
    const auto support = admissible_support(type, m);
    for (int w1 = 1; w1 <= total - 3; ++w1)
      for (int w2 = 1; w1 + w2 <= total - 2; ++w2)
        for (int w3 = 1; w1 + w2 + w3 <= total - 1; ++w3) {
          const int w4 = total - w1 - w2 - w3;
          if (std::gcd(std::gcd(w1, w2), std::gcd(w3, w4)) != 1) continue;
          Quadruple q;
          q.m = m;
          q.a = Rational(m, w1);
          q.b = Rational(m, w2);
          q.c = Rational(m, w3);
          q.d = Rational(m, w4);
          for (auto* r : {&q.a, &q.b, &q.c, &q.d}) r->canonicalize();
          if (!conditions_hold(type, q.a, q.b, q.c)) continue;
          q.derived_weight = Weight({w1, w2, w3, w4});
          std::vector<Exponent> on;
          for (const auto& e : support) {
            if (q.derived_weight.pair(e) == m) on.push_back(e);
          }
          q.face_dimension = on.empty() ? -1 : affine_rank(on);
          out.push_back(q);
        }
  }
  std::sort(out.begin(), out.end(), [](const Quadruple& p, const Quadruple& q) {
    return std::tie(p.m, p.derived_weight) < std::tie(q.m, q.derived_weight);
  });
  return out;
}

std::vector<Quadruple> lemma_quadruples(const SingularityType& type, int max_m) {
  auto all = scan_quadruples(type, max_m);
  std::erase_if(all, [](const Quadruple& q) { return q.face_dimension < 2; });
  return all;
}

std::vector<Weight> candidate_weights(const SingularityType& type) {
  require_cD_or_cE(type);
  switch (type.kind) {
    case K::cD: {
      const int k = type.n / 2;
      return {type.n % 2 == 0 ? Weight({k, k - 1, 1, 1}) : Weight({k, k, 1, 1})};
    }
    case K::cE6: return {Weight({2, 2, 1, 1}), Weight({3, 2, 2, 1}), Weight({4, 3, 2, 1})};
    case K::cE7: return {Weight({3, 2, 1, 1}), Weight({4, 3, 2, 1}), Weight({5, 3, 2, 1}), Weight({6, 4, 3, 1})};
    default:
      return {Weight({3, 2, 2, 1}), Weight({4, 3, 2, 1}), Weight({5, 3, 2, 1}), Weight({6, 4, 3, 1}),
              Weight({7, 5, 3, 1}), Weight({8, 5, 3, 1}), Weight({9, 6, 4, 1}), Weight({12, 8, 5, 1})};
  }
}

CatalogComparison compare_with_catalog(const SingularityType& type, int max_m) {
  const auto catalog = candidate_weights(type);
  CatalogComparison out;
  std::vector<Weight> scanned;
  for (const auto& q : lemma_quadruples(type, max_m)) {
    const Weight& w = q.derived_weight;
    scanned.push_back(w);
    if (is_plt_weight(type, w)) {
      out.plt.push_back(w);
    } else if (contains(catalog, w)) {
      out.in_both.push_back(w);
    } else {
      out.scan_only.push_back(w);
    }
  }
  for (const auto& w : catalog) {
    if (!contains(scanned, w)) out.catalog_only.push_back(w);
  }
  if (type.kind == K::cE7 && contains(out.catalog_only, Weight({3, 2, 1, 1})) &&
      contains(out.scan_only, Weight({3, 3, 1, 1}))) {
    out.flags.push_back(
        "catalog weight (3,2,1,1) does not come out of the quadruple (2,2,6,6), which gives (3,3,1,1); "
        "both are kept and the intended mapping is unresolved");
  }
  if (type.kind == K::cD) {
    out.flags.push_back(
        "the (k,k-1,2,1) family uses b = 2k/(k-1); the variant with b = (2k-1)/(k-1) gives no integral weight");
  }
  return out;
}

namespace {

std::vector<std::pair<Polynomial, int>> all_components(const ExceptionalSurface& s, std::vector<bool>& toric) {
  std::vector<std::pair<Polynomial, int>> out = s.components();
  toric.assign(out.size(), false);
  for (int v = 0; v < kNumVars; ++v) {
    if (s.decomposition.monomial_content[v] > 0) {
      out.emplace_back(Polynomial::variable(v), s.decomposition.monomial_content[v]);
      toric.push_back(true);
    }
  }
  return out;
}

}  // namespace

Analysis analyze(const Polynomial& f, const AnalysisOptions& opts) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (f.coefficient(Exponent{}) != 0) throw std::invalid_argument("f(0) != 0: the origin is not on the hypersurface");
  Analysis a;
  a.input = f;
  a.analyzed = f;
  a.type = classify_type(f, opts.truncation_degree);

  if (a.type.kind == K::smooth) {
    a.warnings.push_back("smooth point");
  } else if (a.type.kind == K::other) {
    a.warnings.push_back("not a cDV point of a recognized type");
  } else {
    try {
      a.certificate = reduce_to_normal_form(f, opts.truncation_degree);
      a.analyzed = a.certificate->reduced;
    } catch (const NormalFormError& e) {
      a.warnings.push_back(std::string("normal form not reached, analyzing the input as given: ") + e.what());
    }
  }

  a.diagram = build_diagram(a.analyzed);
  if (opts.check_diagram && a.type.kind != K::smooth) {
    NondegeneracyOptions no;
    no.seed = opts.seed;
    const auto checks = check_nondegeneracy(a.diagram, no);
    Verdict v = Verdict::nondegenerate_certified;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      if (checks[i].verdict == Verdict::degenerate) {
        v = Verdict::degenerate;
        std::string pts;
        for (const auto& e : a.diagram.faces[i].lattice_points) pts += (pts.empty() ? "" : " ") + monomial_string(e);
        a.warnings.push_back("diagram degenerate on the face {" + pts + "}");
      } else if (checks[i].verdict == Verdict::nondegenerate_probable && v != Verdict::degenerate) {
        v = Verdict::nondegenerate_probable;
      }
    }
    a.diagram_check = v;
  }

  a.max_coord = opts.max_coord ? *opts.max_coord : default_max_coord(a.diagram);
  a.weights = enumerate_weights(a.diagram, a.max_coord);
  a.boundary_touched = touches_boundary(a.weights, a.max_coord);
  if (a.boundary_touched) {
    a.warnings.push_back("a weight reaches max_coord " + std::to_string(a.max_coord) + "; the list may be incomplete");
  }

  const std::vector<Weight> catalog = a.type.is_cD_or_cE() ? candidate_weights(a.type) : std::vector<Weight>{};
  NondegeneracyOptions no;
  no.seed = opts.seed;
  for (const auto& w : a.weights) {
    std::optional<ExceptionalSurface> found;
    try {
      found = exceptional_surface(a.analyzed, w, opts.seed);
    } catch (const std::exception& e) {
      a.warnings.push_back("weight " + w.to_string() + ": " + e.what());
      continue;
    }
    const ExceptionalSurface& surf = *found;
    std::vector<bool> toric;
    const auto comps = all_components(surf, toric);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      DivisorReport r;
      r.weight = w;
      r.face_polynomial = surf.equation;
      r.component = comps[i].first;
      r.multiplicity = comps[i].second;
      r.discrepancy = discrepancy(a.diagram, w, r.multiplicity);
      r.coordinate_hyperplane = toric[i];
      r.in_catalog = contains(catalog, w);
      r.warnings = surf.decomposition.warnings;
      try {
        r.rationality = classify_rationality({a.type, w, surf.equation, r.component}, no);
      } catch (const std::exception& e) {
        r.rationality.verdict = Rationality::undecided;
        r.rationality.rule = "error";
        r.warnings.push_back(e.what());
      }
      if (r.discrepancy == 1 && !r.coordinate_hyperplane) {
        ++a.summary.discrepancy_one_components;
        if (r.rationality.verdict == Rationality::non_rational) {
          ++a.summary.non_rational;
          if (a.type.is_cD_or_cE() && !r.in_catalog) {
            r.warnings.push_back("non-rational divisor at a weight outside the catalog for " + a.type.to_string());
          }
        }
        if (r.rationality.verdict == Rationality::undecided) ++a.summary.undecided;
      }
      a.reports.push_back(std::move(r));
    }
  }

  a.summary.violation = a.type.is_cD_or_cE() && a.summary.non_rational > 1;
  if (a.summary.violation) {
    a.warnings.push_back(std::to_string(a.summary.non_rational) +
                         " non-rational discrepancy-one divisors: uniqueness fails, so the input is degenerate or "
                         "the pipeline is wrong");
  }
  for (const auto& w : catalog) a.summary.catalog.push_back({w, contains(a.weights, w)});
  if (a.type.kind == K::cE7) {
    a.warnings.push_back("cE7: catalog weight (3,2,1,1) and quadruple weight (3,3,1,1) are both reported; "
                         "the intended correspondence is unresolved");
  }
  return a;
}

namespace {

Rational random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 5), den(1, 3), sign(0, 1);
  Rational c(num(rng) * (sign(rng) ? 1 : -1), den(rng));
  c.canonicalize();
  return c;
}

// (y, z, t, smallest t-exponent) for every optional monomial of the form.
struct Slot {
  int y, z, t_min;
};

std::vector<Slot> slots(const SingularityType& type) {
  std::vector<Slot> s;
  switch (type.kind) {
    case K::cD:
      for (int i = 1; i <= type.n - 1; ++i) s.push_back({0, i - 1, type.n - i});
      s.push_back({1, 0, type.n - 1});
      break;
    case K::cE6:
      for (int j = 0; j <= 2; ++j) s.push_back({0, j, 4 - j});
      for (int j = 0; j <= 2; ++j) s.push_back({1, j, 3 - j});
      break;
    case K::cE7:
      for (int j = 0; j <= 4; ++j) s.push_back({0, j, 5 - j});
      s.push_back({1, 0, 3});
      s.push_back({1, 1, 2});
      break;
    case K::cE8:
      for (int j = 0; j <= 3; ++j) s.push_back({0, j, 5 - j});
      for (int j = 0; j <= 3; ++j) s.push_back({1, j, 4 - j});
      break;
    default: break;
  }
  return s;
}

Polynomial leading_part(const SingularityType& type) {
  switch (type.kind) {
    case K::cD: return parse_polynomial("x^2 + y^2*z + z^" + std::to_string(type.n - 1));
    case K::cE6: return parse_polynomial("x^2 + y^3 + z^4");
    case K::cE7: return parse_polynomial("x^2 + y^3 + y*z^3 + z^5");
    default: return parse_polynomial("x^2 + y^3 + z^5");
  }
}

bool diagram_is_degenerate(const Polynomial& f, std::uint64_t seed) {
  NondegeneracyOptions no;
  no.seed = seed;
  for (const auto& r : check_nondegeneracy(build_diagram(f), no)) {
    if (r.verdict == Verdict::degenerate) return true;
  }
  return false;
}

}  // namespace

std::vector<CorpusInstance> generate_corpus(std::uint64_t seed) {
  std::vector<SingularityType> types;
  for (int n = 4; n <= 12; ++n) types.push_back(SingularityType::cD(n));
  for (auto k : {K::cE6, K::cE7, K::cE8}) types.push_back(SingularityType::of(k));

  std::mt19937_64 rng(seed);
  std::vector<CorpusInstance> out;
  for (const auto& type : types) {
    for (int raise = 0; raise <= 2; ++raise) {
      for (int draw = 0; draw < 3; ++draw) {
        Polynomial f;
        for (int attempt = 0; attempt < 20; ++attempt) {
          f = leading_part(type);
          std::uniform_int_distribution<int> bump(0, raise);
          for (const auto& s : slots(type)) f.add_term({0, s.y, s.z, s.t_min + bump(rng)}, random_coefficient(rng));
          if (!diagram_is_degenerate(f, seed)) break;
        }
        out.push_back({type.to_string() + " +" + std::to_string(raise) + " #" + std::to_string(draw), type, f});
      }
    }
  }
  return out;
}

std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusInstance>& corpus, const AnalysisOptions& opts) {
  std::vector<CorpusOutcome> out;
  for (const auto& inst : corpus) {
    CorpusOutcome o;
    o.instance = inst;
    const Analysis a = analyze(inst.polynomial, opts);
    o.classified = a.type;
    o.non_rational = a.summary.non_rational;
    o.undecided = a.summary.undecided;
    o.violation = a.summary.violation;
    for (const auto& r : a.reports) {
      if (r.discrepancy == 1 && !r.coordinate_hyperplane && r.rationality.verdict == Rationality::non_rational) {
        o.non_rational_weights.push_back(r.weight);
      }
    }
    o.warnings = a.warnings;
    if (a.type != inst.intended) {
      o.warnings.push_back("classified as " + a.type.to_string() + ", generated as " + inst.intended.to_string());
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace cdv
