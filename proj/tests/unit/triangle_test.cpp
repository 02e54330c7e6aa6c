#include "trinomial/triangle.hpp"

#include <vector>

#include <gtest/gtest.h>

#include "trinomial/binomial.hpp"

namespace trinomial {
namespace {

std::vector<ExactInteger> as_vector(std::span<const ExactInteger> row) {
  return {row.begin(), row.end()};
}

std::vector<ExactInteger> ints(std::initializer_list<long> values) {
  return {values.begin(), values.end()};
}

// T(n,k) = sum_j <n,j> <n-j, k-2j>: choose j squared factors, then k-2j
// linear ones among the rest.
ExactInteger trinomial_by_multinomial(int n, int k) {
  ExactInteger total;
  for (int j = 0; 2 * j <= k; ++j) total += character(n, j) * character(n - j, k - 2 * j);
  return total;
}

TEST(TriangleTest, GoldenRows) {
  const auto tri = TrinomialTriangle::build(5);
  EXPECT_EQ(as_vector(tri.row(0)), ints({1}));
  EXPECT_EQ(as_vector(tri.row(1)), ints({1, 1, 1}));
  EXPECT_EQ(as_vector(tri.row(2)), ints({1, 2, 3, 2, 1}));
  EXPECT_EQ(as_vector(tri.row(3)), ints({1, 3, 6, 7, 6, 3, 1}));
  EXPECT_EQ(as_vector(tri.row(4)), ints({1, 4, 10, 16, 19, 16, 10, 4, 1}));
  EXPECT_EQ(as_vector(tri.row(5)), ints({1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1}));
}

TEST(TriangleTest, MatchesMultinomialExpansion) {
  const auto tri = TrinomialTriangle::build(60);
  for (int n = 0; n <= 60; ++n) {
    for (int k = 0; k <= 2 * n; ++k) {
      ASSERT_EQ(tri.coeff(n, k), trinomial_by_multinomial(n, k)) << n << " " << k;
    }
  }
}

TEST(TriangleTest, PalindromeRowSumsAndAlternatingSums) {
  const auto tri = TrinomialTriangle::build(80);
  for (int n = 0; n <= 80; ++n) {
    const auto row = tri.row(n);
    ASSERT_EQ(row.size(), static_cast<std::size_t>(2 * n + 1));
    ExactInteger sum;
    ExactInteger alternating;
    for (int k = 0; k <= 2 * n; ++k) {
      ASSERT_EQ(row[k], row[2 * n - k]);
      sum += row[k];
      alternating += (k % 2 == 0) ? row[k] : -row[k];
    }
    ASSERT_EQ(sum, ExactInteger(3).pow(n));
    ASSERT_EQ(alternating, ExactInteger(1));
  }
}

TEST(TriangleTest, CoefficientEdges) {
  const auto tri = TrinomialTriangle::build(4);
  EXPECT_EQ(tri.coeff(4, -1), ExactInteger(0));
  EXPECT_EQ(tri.coeff(4, 9), ExactInteger(0));
  EXPECT_EQ(tri.diagonal(4, 0), ExactInteger(19));
  EXPECT_EQ(tri.diagonal(4, 4), ExactInteger(1));
  EXPECT_EQ(tri.diagonal(2, 3), ExactInteger(0));
  EXPECT_THROW(tri.row(5), std::out_of_range);
  EXPECT_THROW(tri.coeff(5, 0), std::out_of_range);
  EXPECT_THROW(TrinomialTriangle::build(-1), std::invalid_argument);
}

TEST(LeadingTermTest, ClosedFormsToSixtyFour) {
  const auto tri = TrinomialTriangle::build(64);
  for (int n = 0; n <= 64; ++n) ASSERT_TRUE(leading_term_check(tri, n)) << n;
}

TEST(LeadingTermTest, KnownValues) {
  EXPECT_EQ(leading_term(4, 1), ExactRational(4));
  EXPECT_EQ(leading_term(4, 2), ExactRational(10));
  EXPECT_EQ(leading_term(4, 3), ExactRational(16));
  EXPECT_EQ(leading_term(4, 4), ExactRational(19));
  EXPECT_EQ(leading_term(5, 5), ExactRational(51));
  EXPECT_EQ(leading_term(3, 5), ExactRational(3));
  EXPECT_THROW(leading_term(3, 6), std::invalid_argument);
}

TEST(LeadingTermTest, FourFactorQuinticIsWrong) {
  // n(n-1)(n-2)(n+12)/120 lacks the (n+1) factor: 3/4 at n = 3, not 3.
  auto four_factor = [](int n) { return ExactRational(n * (n - 1) * (n - 2) * (n + 12), 120); };
  EXPECT_EQ(four_factor(3), ExactRational(3, 4));
  EXPECT_NE(four_factor(3), leading_term(3, 5));
  EXPECT_NE(four_factor(5), ExactRational(51));
}

}  // namespace
}  // namespace trinomial
