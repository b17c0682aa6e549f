#include <gtest/gtest.h>

#include <random>

#include "cdv/normalform.hpp"

using namespace cdv;
using K = SingularityType::Kind;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

std::string type_of(const char* s) { return classify_type(P(s)).to_string(); }

// Random invertible linear change of all four coordinates.
Substitution random_linear_change(std::mt19937& rng, int trunc) {
  std::uniform_int_distribution<int> c(-2, 2);
  while (true) {
    std::array<Polynomial, kNumVars> r;
    std::array<std::array<long, 4>, 4> m{};
    for (int i = 0; i < kNumVars; ++i) {
      for (int j = 0; j < kNumVars; ++j) {
        m[i][j] = (i == j) ? 1 + (c(rng) == 0) : (c(rng) % 2 == 0 ? 0 : c(rng));
        Exponent e{};
        e[j] = 1;
        r[i].add_term(e, m[i][j]);
      }
    }
    // Determinant by cofactor expansion over permutations.
    long det = 0;
    int p[4] = {0, 1, 2, 3};
    do {
      int inv = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) inv += p[i] > p[j];
      long term = (inv % 2) ? -1 : 1;
      for (int i = 0; i < 4; ++i) term *= m[i][p[i]];
      det += term;
    } while (std::next_permutation(p, p + 4));
    if (det != 0) return Substitution(r, trunc);
  }
}

int x_monomials(const Polynomial& f) {
  int n = 0;
  for (const auto& [e, c] : f.terms())
    if (e[0] >= 1 && e != Exponent{2, 0, 0, 0}) ++n;
  return n;
}

}  // namespace

TEST(Classify, WorkedExamples) {
  EXPECT_EQ(type_of("x^2 + y^2*z + z^3 + t^3"), "cD(4)");
  EXPECT_EQ(type_of("x^2 + y^3 + y*z^3 + t^9"), "cE7");
  EXPECT_EQ(type_of("x^2 + y^3 + z^4 + t^4"), "cE6");
  EXPECT_EQ(type_of("x^2 + y^3 + z^5 + t^15"), "cE8");
}

TEST(Classify, BoundaryCases) {
  EXPECT_THROW(classify_type(P("1 + x^2")), std::invalid_argument);
  EXPECT_EQ(type_of("x + y^2"), "smooth");
  EXPECT_EQ(type_of("x^3 + y^3 + z^3 + t^3"), "other");
  EXPECT_EQ(type_of("x^2 + y^4 + z^4 + t^4"), "other");
  EXPECT_EQ(type_of("x^2 + y^2*z"), "other");
  EXPECT_EQ(type_of("x^2 + y^2 + z^2 + t^2"), "cA(1)");
  EXPECT_EQ(type_of("x^2 + y^2 + z^3 + t^3"), "cA(2)");
  EXPECT_EQ(type_of("x*y + z^5 + t^7"), "cA(4)");
  EXPECT_EQ(type_of("x^2 + 2*x*y + y^2 + z^3 + t^3"), "cD(4)");
}

TEST(Classify, DSeriesParameter) {
  EXPECT_EQ(type_of("x^2 + y^2*z + z^5 + t^5"), "cD(6)");
  EXPECT_EQ(type_of("x^2 + y^2*z + z^5 + t^9"), "cD(6)");
  EXPECT_EQ(type_of("x^2 + y^2*z + z^4*t + t^7"), "cD(6)");
  // A y*t^b term contributes like z^(2b-1) on a general section.
  EXPECT_EQ(type_of("x^2 + y^2*z + y*t^3 + z^10 + t^11"), "cD(6)");
  EXPECT_EQ(type_of("x^2 + y^2*z + y*t^5 + z^7 + t^8"), "cD(8)");
  for (int k = 2; k <= 6; ++k) {
    std::string f = "x^2 + y^2*z + z^" + std::to_string(2 * k - 1) + " + t^" + std::to_string(2 * k - 1);
    EXPECT_EQ(classify_type(parse_polynomial(f)), SingularityType::cD(2 * k)) << f;
  }
}

TEST(Classify, TypeSurvivesCoordinateChanges) {
  const char* inputs[] = {"x^2 + y^2*z + z^3 + t^3",     "x^2 + y^3 + y*z^3 + t^5",  "x^2 + y^3 + z^4 + t^4",
                          "x^2 + y^3 + z^5 + t^7",       "x^2 + y^2*z + z^6 + t^6",  "x^2 + y^2 + z^4 + t^5",
                          "x^2 + y^2*z + z^4 + y*t^4",   "x^2 + y^3 + z^4 + z*t^3"};
  std::mt19937 rng(17);
  for (const char* s : inputs) {
    Polynomial f = P(s);
    SingularityType expected = classify_type(f);
    ASSERT_NE(expected.kind, K::other) << s;
    for (int trial = 0; trial < 4; ++trial) {
      Polynomial g = apply_substitution(f, random_linear_change(rng, 40));
      EXPECT_EQ(classify_type(g), expected) << s << " -> " << g;
    }
  }
}

TEST(Classify, SymmetryAndScaling) {
  Polynomial f = P("x^2 + y^3 + y*z^3 + z*t^6 + t^9");
  Polynomial swapped = P("x^2 + y^3 + y*t^3 + t*z^6 + z^9");
  EXPECT_EQ(classify_type(f), classify_type(swapped));
  std::array<Polynomial, kNumVars> r = {P("3*x"), P("-1/2*y"), P("5*z"), P("2/7*t")};
  EXPECT_EQ(classify_type(apply_substitution(f, Substitution(r, 30))), classify_type(f));
}

TEST(Reduce, CompletesTheSquareInX) {
  auto cert = reduce_to_normal_form(P("x^2 + 2*x*t^3 + y^3 + z^4"));
  EXPECT_EQ(cert.reduced, P("x^2 + y^3 + z^4 - t^6"));
  ASSERT_EQ(cert.applied_changes.size(), 1u);
  EXPECT_EQ(cert.applied_changes[0].replacement(0), P("x - t^3"));
  EXPECT_EQ(cert.type.kind, K::cE6);
}

TEST(Reduce, RemovesYSquaredTerm) {
  auto cert = reduce_to_normal_form(P("x^2 + y^3 + 3*y^2*t^2 + z^4"));
  EXPECT_EQ(cert.reduced, P("x^2 + y^3 - 3*y*t^4 + 2*t^6 + z^4"));
  ASSERT_EQ(cert.applied_changes.size(), 1u);
  EXPECT_EQ(cert.applied_changes[0].replacement(1), P("y - t^2"));
}

TEST(Reduce, NormalFormIsFixed) {
  for (const char* s : {"x^2 + y^3 + z^4 + t^4", "x^2 + y^2*z + z^3 + t^3", "x^2 + y^3 + y*z^3 + t^9"}) {
    auto cert = reduce_to_normal_form(P(s));
    EXPECT_EQ(cert.reduced, P(s));
    EXPECT_TRUE(cert.applied_changes.empty()) << s;
  }
}

TEST(Reduce, SquareRootSubstitution) {
  auto cert = reduce_to_normal_form(P("x^2 + x^2*z + y^3 + z^4 + t^4"), 12);
  EXPECT_EQ(x_monomials(cert.reduced), 0);
  EXPECT_EQ(cert.reduced, P("x^2 + y^3 + z^4 + t^4"));
}

TEST(Reduce, ConstraintsAreReported) {
  auto e6 = reduce_to_normal_form(P("x^2 + y^3 + z^4 + t^5 + z*t^3 + z^2*t^2"));
  ASSERT_EQ(e6.satisfied_constraints.size(), 3u);
  for (const auto& c : e6.satisfied_constraints) EXPECT_TRUE(c.holds) << c.statement;
  EXPECT_EQ(e6.satisfied_constraints[0].statement, "i=1: 0 + b_1 = 0 + 5 >= 4");

  auto d = reduce_to_normal_form(P("x^2 + y^2*z + z^5 + t^7 + z*t^5"));
  EXPECT_EQ(d.type, SingularityType::cD(6));
  EXPECT_EQ(d.satisfied_constraints.size(), 5u);
  for (const auto& c : d.satisfied_constraints) EXPECT_TRUE(c.holds) << c.statement;

  auto e7 = reduce_to_normal_form(P("x^2 + y^3 + y*z^3 + t^9"));
  EXPECT_TRUE(e7.satisfied_constraints.empty());
  EXPECT_FALSE(e7.notes.empty());
}

TEST(Reduce, NonCdvInputsAreRejected) {
  EXPECT_THROW(reduce_to_normal_form(P("x + y^2")), NormalFormError);
  EXPECT_THROW(reduce_to_normal_form(P("x^3 + y^3 + z^3 + t^3")), NormalFormError);
  EXPECT_THROW(reduce_to_normal_form(P("x^2 + y^2*z")), NormalFormError);
}

TEST(Reduce, TransformedInputsReachTheShape) {
  const char* inputs[] = {"x^2 + y^3 + z^4 + t^4", "x^2 + y^3 + y*z^3 + t^7", "x^2 + y^3 + z^5 + t^6",
                          "x^2 + y^2*z + z^5 + t^5", "x^2 + y^2*z + z^3 + t^3"};
  std::mt19937 rng(8);
  for (const char* s : inputs) {
    Polynomial f = P(s);
    // Mix in higher-order terms through a nonlinear change x <- x + y*z, y <- y + t^2.
    std::array<Polynomial, kNumVars> r = {P("x + y*z"), P("y + t^2"), P("z"), P("t")};
    Polynomial g = apply_substitution(f, Substitution(r, 40));
    auto cert = reduce_to_normal_form(g);
    EXPECT_EQ(cert.type, classify_type(f)) << s;
    EXPECT_EQ(x_monomials(cert.reduced), 0) << s;
    EXPECT_EQ(replay(g, cert.applied_changes, cert.truncation_degree), cert.reduced);
    auto again = reduce_to_normal_form(cert.reduced, cert.truncation_degree);
    EXPECT_TRUE(again.applied_changes.empty()) << s << " -> " << cert.reduced;
    for (const auto& c : cert.satisfied_constraints) EXPECT_TRUE(c.holds) << c.statement;
  }
}

TEST(Reduce, ECaseShapes) {
  auto e6 = reduce_to_normal_form(P("x^2 + y^3 + z^4 + y^2*z^2 + y*z^3*t + z^3*t^2 + t^5"));
  for (const auto& [e, c] : e6.reduced.terms()) {
    // Tail: at least y^3 or z^4; the leading terms themselves also pass here.
    if (e[1] >= 3 || e[2] >= 4 || e[0] == 2) continue;
    EXPECT_LE(e[1], 1) << monomial_string(e);
    EXPECT_LE(e[2], 2) << monomial_string(e);
  }
}

TEST(ParseType, Forms) {
  EXPECT_EQ(parse_type("cD:6"), SingularityType::cD(6));
  EXPECT_EQ(parse_type("cD(6)"), SingularityType::cD(6));
  EXPECT_EQ(parse_type("cE8").kind, K::cE8);
  EXPECT_THROW(parse_type("cD:3"), std::invalid_argument);
  EXPECT_THROW(parse_type("cF4"), std::invalid_argument);
}
