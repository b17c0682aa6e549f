#include <gtest/gtest.h>

#include <random>

#include "cdv/intlattice.hpp"

using namespace cdv;

namespace {

IntVector V(std::initializer_list<long> c) {
  IntVector r;
  for (long v : c) r.push_back(Integer(v));
  return r;
}

bool in_integer_span(const std::vector<IntVector>& basis, const IntVector& v) {
  auto c = solve_in_span(basis, v);
  if (!c) return false;
  for (const auto& q : *c)
    if (q.get_den() != 1) return false;
  return true;
}

}  // namespace

TEST(Lattice, KernelOfSingleRow) {
  auto k = integer_kernel({V({2, 4})}, 2);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(dot(k[0], V({2, 4})), 0);
  EXPECT_EQ(primitive(k[0]), k[0]);
  EXPECT_EQ(rational_rank({V({1, 2, 3}), V({2, 4, 6})}), 1);
  EXPECT_EQ(integer_kernel({}, 3).size(), 3u);
}

TEST(Lattice, AffineRank) {
  EXPECT_EQ(affine_rank({{0, 2, 1, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}}), 2);
  EXPECT_EQ(affine_rank({{2, 0, 0, 0}}), 0);
  EXPECT_EQ(affine_rank({{0, 3, 0, 0}, {0, 0, 5, 0}, {0, 0, 0, 15}, {0, 1, 2, 4}}), 2);
}

TEST(Lattice, KernelIsSaturatedOnRandomRows) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<IntVector> rows;
    for (int r = 0; r < 2; ++r) rows.push_back(V({c(rng), c(rng), c(rng), c(rng)}));
    auto k = integer_kernel(rows, 4);
    EXPECT_EQ(k.size() + rational_rank(rows), 4u);
    EXPECT_EQ(rational_kernel(rows, 4).size(), k.size());
    for (const auto& b : k)
      for (const auto& row : rows) EXPECT_EQ(dot(b, row), 0);
    // Oracle: every small integer kernel vector is an integer combination.
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        for (int d = -2; d <= 2; ++d)
          for (int e = -2; e <= 2; ++e) {
            IntVector v = V({a, b, d, e});
            bool kernel = true;
            for (const auto& row : rows) kernel = kernel && dot(v, row) == 0;
            if (kernel) EXPECT_TRUE(in_integer_span(k, v));
          }
  }
}
