#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "cdv/curvegeom.hpp"

using namespace cdv;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

// Oracle: ray casting against the hull edges, independent of the strict
// orientation test used by the library.
long count_interior_by_parity(const LatticePolygon& poly) {
  const auto& v = poly.vertices;
  long lo0 = v[0][0], hi0 = v[0][0], lo1 = v[0][1], hi1 = v[0][1];
  for (const auto& p : v) {
    lo0 = std::min(lo0, p[0]), hi0 = std::max(hi0, p[0]);
    lo1 = std::min(lo1, p[1]), hi1 = std::max(hi1, p[1]);
  }
  long count = 0;
  for (long x = lo0; x <= hi0; ++x) {
    for (long y = lo1; y <= hi1; ++y) {
      bool on_edge = false, in = false;
      for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
        const auto &a = v[i], &b = v[j];
        const long cr = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
        if (cr == 0 && std::min(a[0], b[0]) <= x && x <= std::max(a[0], b[0]) && std::min(a[1], b[1]) <= y &&
            y <= std::max(a[1], b[1]))
          on_edge = true;
        // Half-open crossing rule, done in exact arithmetic.
        if ((a[1] > y) != (b[1] > y)) {
          const long num = (b[0] - a[0]) * (y - a[1]);
          const long den = b[1] - a[1];
          // x < a0 + num/den
          if (den > 0 ? (x - a[0]) * den < num : (x - a[0]) * den > num) in = !in;
        }
      }
      if (in && !on_edge) ++count;
    }
  }
  return count;
}

std::vector<LatticePoint> random_points(std::mt19937& rng, int n, int box) {
  std::uniform_int_distribution<long> c(0, box);
  std::vector<LatticePoint> pts;
  for (int i = 0; i < n; ++i) pts.push_back({c(rng), c(rng)});
  return pts;
}

}  // namespace

TEST(Cone, Examples) {
  auto c3 = detect_cone(P("y^3 + z^5 + t^15"), Weight({8, 5, 3, 1}));
  ASSERT_TRUE(c3);
  EXPECT_EQ(c3->missing_variable, 0);
  EXPECT_EQ(c3->base_weights, (std::array<int, 3>{5, 3, 1}));

  auto c1 = detect_cone(P("y^2*z + z^3 + t^3"), Weight({2, 1, 1, 1}));
  ASSERT_TRUE(c1);
  EXPECT_EQ(c1->missing_variable, 0);
  EXPECT_EQ(c1->base_weights, (std::array<int, 3>{1, 1, 1}));

  EXPECT_FALSE(detect_cone(P("x^2 + y^2 + z^2 + t^2"), Weight({1, 1, 1, 1})));
}

TEST(Cone, LargestWeightAbsentVariableWins) {
  auto c = detect_cone(P("z^4 + t^4"), Weight({2, 3, 1, 1}));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->missing_variable, 1);
  EXPECT_EQ(c->base_variables, (std::array<int, 3>{0, 2, 3}));
}

TEST(Chart, Examples) {
  EXPECT_EQ(chart_polynomial(*detect_cone(P("y^3 + y*z^3 + t^9"), Weight({5, 3, 2, 1}))), P("y^3 + y*z^3 + 1"));
  EXPECT_EQ(chart_polynomial(*detect_cone(P("y^3 + z^5 + t^15"), Weight({8, 5, 3, 1}))), P("y^3 + z^5 + 1"));
  auto c1 = *detect_cone(P("y^2*z + z^3 + t^3"), Weight({2, 1, 1, 1}));
  EXPECT_EQ(chart_variable(c1), 3);
  EXPECT_EQ(chart_polynomial(c1), P("y^2*z + z^3 + 1"));
  // Content is removed.
  EXPECT_EQ(chart_polynomial(*detect_cone(P("2*y^3 + 4*z^5 + 6*t^15"), Weight({8, 5, 3, 1}))),
            P("y^3 + 2*z^5 + 3"));
}

TEST(Chart, NeedsAWeightOneVariable) {
  auto c = detect_cone(P("y^2 + z^3"), Weight({7, 3, 2, 5}));
  ASSERT_TRUE(c);
  EXPECT_THROW(chart_polynomial(*c), std::domain_error);
}

TEST(Genus, Examples) {
  auto g2 = polygon_genus(P("y^3 + y*z^3 + 1"));
  EXPECT_EQ(g2.genus, 3);
  EXPECT_EQ(g2.polygon.interior_points, (std::vector<LatticePoint>{{1, 1}, {1, 2}, {2, 1}}));
  EXPECT_FALSE(is_hyperelliptic(g2.polygon));

  auto g3 = polygon_genus(P("y^3 + z^5 + 1"));
  EXPECT_EQ(g3.genus, 4);
  EXPECT_FALSE(is_hyperelliptic(g3.polygon));

  auto g1 = polygon_genus(P("y^2*z + z^3 + 1"));
  EXPECT_EQ(g1.genus, 1);
  EXPECT_EQ(g1.polygon.vertices, (std::vector<LatticePoint>{{0, 0}, {3, 0}, {1, 2}}));

  auto h = polygon_genus(P("y^2 + z^5 + 1"));
  EXPECT_EQ(h.polygon.interior_points, (std::vector<LatticePoint>{{1, 1}, {2, 1}}));
  EXPECT_TRUE(is_hyperelliptic(h.polygon));
}

TEST(Genus, DegenerateSupports) {
  EXPECT_EQ(polygon_genus(P("y^3 + 1")).genus, 0);
  EXPECT_EQ(polygon_genus(P("y^2 + z^2")).genus, 0);
  EXPECT_EQ(polygon_genus(P("y*z")).genus, 0);
  EXPECT_THROW(polygon_genus(P("x + y + z")), std::invalid_argument);
}

TEST(Genus, PickAndRayCastingAgree) {
  std::mt19937 rng(5);
  int nondegenerate = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto poly = lattice_polygon(random_points(rng, 3 + trial % 6, 3 + trial % 9));
    if (poly.vertices.size() < 3) continue;
    ++nondegenerate;
    const long interior = static_cast<long>(poly.interior_points.size());
    // 2I = 2A - B + 2
    EXPECT_EQ(2 * interior, poly.doubled_area - poly.boundary_points + 2);
    EXPECT_GT(poly.doubled_area, 0);
    EXPECT_EQ(interior, count_interior_by_parity(poly));
  }
  EXPECT_GT(nondegenerate, 250);
}

TEST(Genus, InvariantUnderUnimodularMaps) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> small(-2, 2), shift(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    auto pts = random_points(rng, 5, 6);
    auto base = lattice_polygon(pts);
    long a, b, c, d;
    do {
      a = small(rng), b = small(rng), c = small(rng), d = small(rng);
    } while (std::abs(a * d - b * c) != 1);
    const long s0 = shift(rng), s1 = shift(rng);
    for (auto& p : pts) p = {a * p[0] + b * p[1] + s0, c * p[0] + d * p[1] + s1};
    auto moved = lattice_polygon(pts);
    EXPECT_EQ(moved.interior_points.size(), base.interior_points.size());
    EXPECT_EQ(moved.boundary_points, base.boundary_points);
    EXPECT_EQ(moved.doubled_area, base.doubled_area);
    EXPECT_EQ(is_hyperelliptic(moved), is_hyperelliptic(base));
  }
}

TEST(Genus, ThinPolygonsAreHyperelliptic) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> u(0, 12), v(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<LatticePoint> pts;
    for (int i = 0; i < 6; ++i) pts.push_back({u(rng), v(rng)});
    EXPECT_TRUE(is_hyperelliptic(lattice_polygon(pts)));
  }
}

TEST(Rationality, Cascade) {
  const auto cD4 = SingularityType::cD(4);
  auto one = classify_rationality({cD4, Weight({2, 1, 1, 1}), P("y^2*z + z^3 + t^3"), P("y^2*z + z^3 + t^3")});
  EXPECT_EQ(one.verdict, Rationality::non_rational) << one.rule;
  EXPECT_EQ(one.genus->genus, 1);
  EXPECT_TRUE(*one.hyperelliptic);
  EXPECT_TRUE(one.hyperelliptic_by_convention);
  ASSERT_TRUE(one.chart_check);
  EXPECT_NE(*one.chart_check, Verdict::degenerate);

  auto point = classify_rationality({cD4, Weight({1, 1, 1, 1}), P("x^2"), P("x")});
  EXPECT_EQ(point.verdict, Rationality::rational);
  EXPECT_EQ(point.face_dimension, 0);

  auto linear = classify_rationality(
      {SingularityType::cD(6), Weight({3, 2, 1, 1}), P("y*t^4 + z^6 + t^6"), P("y*t^4 + z^6 + t^6")});
  EXPECT_EQ(linear.verdict, Rationality::rational);
  EXPECT_EQ(linear.rule, "linear in y");

  auto plt = classify_rationality(
      {SingularityType::of(SingularityType::Kind::cE6), Weight({6, 4, 3, 1}), P("x^2 + y^3 + z^4"),
       P("x^2 + y^3 + z^4")});
  EXPECT_EQ(plt.verdict, Rationality::rational_by_plt);

  auto conic = classify_rationality({cD4, Weight({2, 1, 1, 1}), P("y^2 + z^2 + t^2"), P("y^2 + z^2 + t^2")});
  EXPECT_EQ(conic.verdict, Rationality::rational);
  EXPECT_EQ(conic.genus->genus, 0);

  auto quadric = classify_rationality(
      {SingularityType::cA(1), Weight({1, 1, 1, 1}), P("x^2 + y^2 + z^2 + t^2"), P("x^2 + y^2 + z^2 + t^2")});
  EXPECT_EQ(quadric.verdict, Rationality::rational);
}

TEST(Rationality, DegenerateChartIsUndecided) {
  // y^3 + z^3 + 1 - 3yz is singular at (1, 1).
  Polynomial g = P("y^3 + z^3 + t^3 - 3*y*z*t");
  auto r = classify_rationality({SingularityType::cD(4), Weight({2, 1, 1, 1}), g, g});
  EXPECT_EQ(r.genus->genus, 1);
  EXPECT_EQ(r.verdict, Rationality::undecided);
  EXPECT_EQ(*r.chart_check, Verdict::degenerate);
}

TEST(Rationality, NoRuleLeavesItUndecided) {
  Polynomial g = P("x^2*y^2 + y^4*z^2 + z^6*t^2 + x^3*t^2");
  auto r = classify_rationality({SingularityType::of(SingularityType::Kind::cE7), Weight({1, 1, 1, 1}), g, g});
  EXPECT_FALSE(r.cone);
  EXPECT_EQ(r.verdict, Rationality::undecided);
}

TEST(Plt, Table) {
  EXPECT_TRUE(is_plt_weight(SingularityType::cD(7), Weight({4, 3, 2, 1})));
  EXPECT_FALSE(is_plt_weight(SingularityType::cD(7), Weight({4, 3, 1, 1})));
  EXPECT_TRUE(is_plt_weight(SingularityType::of(SingularityType::Kind::cE8), Weight({15, 10, 6, 1})));
  EXPECT_FALSE(is_plt_weight(SingularityType::of(SingularityType::Kind::cE7), Weight({6, 4, 3, 1})));
}
