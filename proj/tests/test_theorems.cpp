#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cdv/theorems.hpp"

using namespace cdv;
using K = SingularityType::Kind;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }

Rational R(const char* s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

std::set<std::string> as_strings(const std::vector<Quadruple>& qs) {
  std::set<std::string> out;
  for (const auto& q : qs) out.insert(q.to_string());
  return out;
}

std::set<std::string> as_strings(const std::vector<std::array<const char*, 4>>& qs) {
  std::set<std::string> out;
  for (const auto& q : qs) {
    out.insert("(" + R(q[0]).get_str() + "," + R(q[1]).get_str() + "," + R(q[2]).get_str() + "," + R(q[3]).get_str() +
               ")");
  }
  return out;
}

// The three cD families, written out from their closed forms.
std::set<std::string> cD_families(int n) {
  std::set<std::string> out;
  auto put = [&](Rational a, Rational b, Rational c, Rational d) {
    for (auto* r : {&a, &b, &c, &d}) r->canonicalize();
    out.insert("(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "," + d.get_str() + ")");
  };
  if (n % 2 == 0) {
    const int k = n / 2;
    put(Rational(2 * k - 1, k), Rational(2 * k - 1, k - 1), 2 * k - 1, 2 * k - 1);
  } else {
    const int k = (n - 1) / 2;
    put(2, 2, 2 * k, 2 * k);
  }
  for (int k = 2; k <= n - 1; ++k) put(2, Rational(2 * k, k - 1), k, 2 * k);
  return out;
}

std::set<Weight> weight_set(const std::vector<Weight>& ws) { return {ws.begin(), ws.end()}; }

const DivisorReport* only_non_rational(const Analysis& a) {
  const DivisorReport* found = nullptr;
  for (const auto& r : a.reports) {
    if (r.discrepancy == 1 && r.rationality.verdict == Rationality::non_rational) {
      if (found) return nullptr;
      found = &r;
    }
  }
  return found;
}

}  // namespace

TEST(Quadruples, E6AndE7MatchTheirLists) {
  EXPECT_EQ(as_strings(lemma_quadruples(SingularityType::of(K::cE6))),
            as_strings({{"2", "2", "4", "4"}, {"2", "3", "3", "6"}, {"2", "8/3", "4", "8"}, {"2", "3", "4", "12"}}));
  EXPECT_EQ(as_strings(lemma_quadruples(SingularityType::of(K::cE7))),
            as_strings({{"2", "2", "6", "6"},
                        {"2", "3", "3", "6"},
                        {"2", "8/3", "4", "8"},
                        {"9/5", "3", "9/2", "9"},
                        {"2", "5/2", "5", "10"},
                        {"2", "3", "4", "12"},
                        {"2", "14/5", "14/3", "14"},
                        {"2", "3", "9/2", "18"}}));
}

TEST(Quadruples, E8ContainsItsListPlusTwo) {
  const auto got = as_strings(lemma_quadruples(SingularityType::of(K::cE8)));
  const auto listed = as_strings({{"2", "3", "3", "6"},
                                  {"2", "8/3", "4", "8"},
                                  {"9/5", "3", "9/2", "9"},
                                  {"2", "3", "4", "12"},
                                  {"2", "14/5", "14/3", "14"},
                                  {"15/8", "3", "5", "15"},
                                  {"2", "3", "9/2", "18"},
                                  {"2", "3", "24/5", "24"},
                                  {"2", "3", "5", "30"}});
  std::set<std::string> extra;
  std::set_difference(got.begin(), got.end(), listed.begin(), listed.end(), std::inserter(extra, extra.end()));
  EXPECT_TRUE(std::includes(got.begin(), got.end(), listed.begin(), listed.end()));
  // Both satisfy a = 2, b <= 3, c <= 5 and carry a two-dimensional face.
  EXPECT_EQ(extra, as_strings({{"2", "5/2", "5", "10"}, {"2", "20/7", "5", "20"}}));
}

TEST(Quadruples, DFamilies) {
  for (int n = 4; n <= 12; ++n) {
    EXPECT_EQ(as_strings(lemma_quadruples(SingularityType::cD(n))), cD_families(n)) << "n=" << n;
  }
}

TEST(Quadruples, DiscrepancyOneIdentity) {
  for (auto t : {SingularityType::cD(5), SingularityType::cD(10), SingularityType::of(K::cE6),
                 SingularityType::of(K::cE7), SingularityType::of(K::cE8)}) {
    for (const auto& q : scan_quadruples(t)) {
      const Rational m = q.m;
      EXPECT_EQ(1 / q.a + 1 / q.b + 1 / q.c + 1 / q.d, 1 + 2 / m) << q.to_string();
      const std::array<Rational, 4> abcd{q.a, q.b, q.c, q.d};
      for (int i = 0; i < 4; ++i) EXPECT_EQ(Rational(q.derived_weight[i]), m / abcd[i]);
    }
  }
}

TEST(Quadruples, FaceFilterOnlyRemoves) {
  for (auto t : {SingularityType::cD(9), SingularityType::of(K::cE7)}) {
    const auto all = scan_quadruples(t);
    const auto kept = lemma_quadruples(t);
    EXPECT_LT(kept.size(), all.size());
    for (const auto& q : kept) {
      EXPECT_GE(q.face_dimension, 2);
      EXPECT_NE(std::find(all.begin(), all.end(), q), all.end());
    }
  }
}

TEST(Quadruples, RejectsOtherTypes) {
  EXPECT_THROW(lemma_quadruples(SingularityType::cA(2)), std::invalid_argument);
  EXPECT_THROW(candidate_weights(SingularityType::of(K::smooth)), std::invalid_argument);
}

TEST(Catalog, Lists) {
  EXPECT_EQ(weight_set(candidate_weights(SingularityType::of(K::cE6))),
            weight_set({Weight({2, 2, 1, 1}), Weight({3, 2, 2, 1}), Weight({4, 3, 2, 1})}));
  EXPECT_EQ(weight_set(candidate_weights(SingularityType::of(K::cE7))),
            weight_set({Weight({3, 2, 1, 1}), Weight({4, 3, 2, 1}), Weight({5, 3, 2, 1}), Weight({6, 4, 3, 1})}));
  const auto e8 = candidate_weights(SingularityType::of(K::cE8));
  EXPECT_EQ(e8.size(), 8u);
  EXPECT_EQ(weight_set(e8).count(Weight({8, 5, 3, 1})), 1u);
  EXPECT_EQ(weight_set(e8).count(Weight({12, 8, 5, 1})), 1u);
  EXPECT_EQ(candidate_weights(SingularityType::cD(4)), std::vector<Weight>{Weight({2, 1, 1, 1})});
  EXPECT_EQ(candidate_weights(SingularityType::cD(9)), std::vector<Weight>{Weight({4, 4, 1, 1})});
  EXPECT_EQ(candidate_weights(SingularityType::cD(12)), std::vector<Weight>{Weight({6, 5, 1, 1})});
}

TEST(Catalog, ExactCorrespondenceForDAndE6) {
  for (auto t : {SingularityType::cD(4), SingularityType::cD(7), SingularityType::cD(12), SingularityType::of(K::cE6)}) {
    const auto c = compare_with_catalog(t);
    EXPECT_TRUE(c.scan_only.empty()) << t.to_string();
    EXPECT_TRUE(c.catalog_only.empty()) << t.to_string();
    EXPECT_EQ(weight_set(c.in_both), weight_set(candidate_weights(t)));
  }
  EXPECT_EQ(compare_with_catalog(SingularityType::of(K::cE6)).plt, std::vector<Weight>{Weight({6, 4, 3, 1})});
}

TEST(Catalog, E7MismatchIsFlagged) {
  const auto c = compare_with_catalog(SingularityType::of(K::cE7));
  EXPECT_EQ(c.catalog_only, std::vector<Weight>{Weight({3, 2, 1, 1})});
  EXPECT_EQ(weight_set(c.scan_only).count(Weight({3, 3, 1, 1})), 1u);
  EXPECT_EQ(c.flags.size(), 1u);
}

TEST(Analyze, ExampleOneFamily) {
  for (int k = 2; k <= 4; ++k) {
    const std::string e = std::to_string(2 * k - 1);
    const auto a = analyze(P("x^2 + y^2*z + z^" + e + " + t^" + e));
    EXPECT_EQ(a.type, SingularityType::cD(2 * k));
    EXPECT_EQ(a.summary.non_rational, 1);
    EXPECT_FALSE(a.summary.violation);
    const auto* r = only_non_rational(a);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->weight, Weight({k, k - 1, 1, 1}));
    EXPECT_EQ(r->rationality.genus->genus, k - 1);
    EXPECT_TRUE(*r->rationality.hyperelliptic);
    EXPECT_TRUE(r->in_catalog);
    EXPECT_FALSE(a.boundary_touched);
  }
}

TEST(Analyze, ExampleThree) {
  const auto a = analyze(P("x^2 + y^3 + z^5 + t^15"));
  EXPECT_EQ(a.type.kind, K::cE8);
  const auto* r = only_non_rational(a);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->weight, Weight({8, 5, 3, 1}));
  EXPECT_EQ(r->rationality.genus->genus, 4);
  EXPECT_FALSE(*r->rationality.hyperelliptic);
}

TEST(Analyze, ExampleTwo) {
  const auto a = analyze(P("x^2 + y^3 + y*z^3 + t^9"));
  EXPECT_EQ(a.type.kind, K::cE7);
  const auto* r = only_non_rational(a);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->weight, Weight({5, 3, 2, 1}));
  EXPECT_EQ(r->rationality.genus->genus, 3);
  EXPECT_FALSE(*r->rationality.hyperelliptic);
  // Catalog status: (3,2,1,1) is enumerated here, (6,4,3,1) is not.
  for (const auto& s : a.summary.catalog) {
    if (s.weight == Weight({3, 2, 1, 1})) EXPECT_TRUE(s.realized);
    if (s.weight == Weight({6, 4, 3, 1})) EXPECT_FALSE(s.realized);
  }
}

TEST(Analyze, QuadricHasNoNonRationalDivisor) {
  const auto a = analyze(P("x^2 + y^2 + z^2 + t^2"));
  EXPECT_EQ(a.summary.non_rational, 0);
  ASSERT_EQ(a.weights, std::vector<Weight>{Weight({1, 1, 1, 1})});
  EXPECT_EQ(a.reports.size(), 1u);
  EXPECT_EQ(a.reports[0].rationality.verdict, Rationality::rational);
}

TEST(Analyze, DiscrepancyIsMultiplicity) {
  for (const char* s : {"x^2 + y^2*z + z^5 + t^5", "x^2 + y^3 + y*z^3 + t^9", "x^2 + y^3 + z^4 + t^4"}) {
    for (const auto& r : analyze(P(s)).reports) EXPECT_EQ(r.discrepancy, r.multiplicity) << s;
  }
}

TEST(Analyze, BadInput) {
  EXPECT_THROW(analyze(Polynomial{}), std::invalid_argument);
  EXPECT_THROW(analyze(P("1 + x^2 + y^2 + z^2 + t^2")), std::invalid_argument);
}

TEST(Corpus, DeterministicAndLargeEnough) {
  const auto c = generate_corpus(0);
  EXPECT_GE(c.size(), 100u);
  const auto again = generate_corpus(0);
  ASSERT_EQ(again.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(again[i].polynomial, c[i].polynomial);
  const auto other = generate_corpus(1);
  bool differs = false;
  for (std::size_t i = 0; i < c.size(); ++i) differs = differs || other[i].polynomial != c[i].polynomial;
  EXPECT_TRUE(differs);
}

TEST(Corpus, UniquenessAndGenusBounds) {
  for (const auto& inst : generate_corpus(0)) {
    const auto a = analyze(inst.polynomial);
    ASSERT_EQ(a.type, inst.intended) << inst.label;
    ASSERT_TRUE(a.diagram_check);
    EXPECT_NE(*a.diagram_check, Verdict::degenerate) << inst.label;
    EXPECT_LE(a.summary.non_rational, 1) << inst.label;
    EXPECT_FALSE(a.summary.violation) << inst.label;
    for (const auto& r : a.reports) {
      if (r.discrepancy != 1 || r.rationality.verdict != Rationality::non_rational) continue;
      const int g = r.rationality.genus->genus;
      switch (a.type.kind) {
        case K::cD:
          EXPECT_LE(g, a.type.n / 2 - 1) << inst.label;
          EXPECT_TRUE(*r.rationality.hyperelliptic) << inst.label;
          break;
        case K::cE6: EXPECT_EQ(g, 1) << inst.label; break;
        case K::cE7:
          if (r.weight == Weight({5, 3, 2, 1})) EXPECT_LE(g, 3) << inst.label;
          break;
        case K::cE8:
          if (r.weight == Weight({8, 5, 3, 1})) EXPECT_LE(g, 4) << inst.label;
          break;
        default: break;
      }
    }
  }
}

TEST(Corpus, RunMatchesAnalyze) {
  auto c = generate_corpus(3);
  c.resize(12);
  const auto out = run_corpus(c);
  ASSERT_EQ(out.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto a = analyze(c[i].polynomial);
    EXPECT_EQ(out[i].non_rational, a.summary.non_rational);
    EXPECT_EQ(out[i].classified, a.type);
    EXPECT_EQ(static_cast<int>(out[i].non_rational_weights.size()), out[i].non_rational);
  }
}
