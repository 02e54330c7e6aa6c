#include "trinomial/recurrences.hpp"

#include <gtest/gtest.h>

#include "trinomial/triangle.hpp"

namespace trinomial {
namespace {

std::vector<ExactInteger> ints(std::initializer_list<long> values) {
  return {values.begin(), values.end()};
}

TEST(CentralRecurrenceTest, GoldenValues) {
  const auto seq = central_sequence(12);
  EXPECT_EQ(seq.values, ints({1, 1, 3, 7, 19, 51, 141, 393, 1107, 3139, 8953, 25653, 73789}));
  EXPECT_EQ(seq.lambda, 0);
  EXPECT_EQ(seq.method, Method::recurrence);
}

TEST(CentralRecurrenceTest, SingleSteps) {
  EXPECT_EQ(central_step(3, 7, 19), ExactInteger(51));
  EXPECT_EQ(central_step(10, 8953, 25653), ExactInteger(73789));
  EXPECT_EQ(central_step(0, 1, 1), ExactInteger(3));
  EXPECT_THROW(central_step(3, 7, 20), InexactDivision);
}

TEST(CentralRecurrenceTest, ShortSequences) {
  EXPECT_EQ(central_sequence(0).values, ints({1}));
  EXPECT_EQ(central_sequence(1).values, ints({1, 1}));
  EXPECT_THROW(central_sequence(-1), std::invalid_argument);
}

TEST(GeneralRecurrenceTest, SingleSteps) {
  EXPECT_EQ(general_step(1, 3, 6, 16), ExactInteger(45));
  EXPECT_EQ(general_step(1, 4, 16, 45), ExactInteger(126));
  EXPECT_EQ(general_step(2, 2, 1, 3), ExactInteger(10));
  EXPECT_THROW(general_step(3, 0, 0, 0), std::domain_error);
}

TEST(GeneralRecurrenceTest, Seeds) {
  EXPECT_EQ(general_sequence(1, 6).values, ints({0, 1, 2, 6, 16, 45, 126}));
  EXPECT_EQ(general_sequence(2, 5).values, ints({0, 0, 1, 3, 10, 30}));
  EXPECT_EQ(general_sequence(3, 5).values, ints({0, 0, 0, 1, 4, 15}));
  EXPECT_EQ(general_sequence(4, 2).values, ints({0, 0, 0}));
  EXPECT_EQ(general_sequence(4, 4).values, ints({0, 0, 0, 0, 1}));
}

TEST(GeneralRecurrenceTest, SeedsMatchTriangle) {
  const auto tri = TrinomialTriangle::build(41);
  for (int lambda = 0; lambda <= 40; ++lambda) {
    ASSERT_EQ(tri.diagonal(lambda, lambda), ExactInteger(1)) << lambda;
    ASSERT_EQ(tri.diagonal(lambda + 1, lambda), ExactInteger(lambda + 1)) << lambda;
    ASSERT_EQ(tri.diagonal(lambda - 1 < 0 ? 0 : lambda - 1, lambda), ExactInteger(lambda == 0 ? 1 : 0));
  }
}

TEST(GeneralRecurrenceTest, LambdaZeroReproducesCentral) {
  EXPECT_EQ(general_sequence(0, 200).values, central_sequence(200).values);
}

TEST(GeneralRecurrenceTest, MatchesTriangle) {
  const auto tri = TrinomialTriangle::build(100);
  for (int lambda = 0; lambda <= 10; ++lambda) {
    const auto seq = general_sequence(lambda, 100);
    for (int n = 0; n <= 100; ++n) {
      ASSERT_EQ(seq.values[n], tri.diagonal(n, lambda)) << n << " " << lambda;
    }
  }
}

TEST(CentralRecurrenceTest, GrowthBounds) {
  const auto p = central_sequence(201).values;
  for (int n = 5; n <= 200; ++n) {
    ASSERT_LT(2 * p[n], p[n + 1]) << n;
    ASSERT_LT(p[n + 1], 3 * p[n]) << n;
  }
}

TEST(GeneralRecurrenceTest, MinusThreeCoefficientBreaksIntegrality) {
  // With (2n - 3) in place of (2n + 3) the q step from n = 2 gives
  // 4 * (1*6 + 3*3*2) / (16 - 1) = 6.4 instead of 16.
  const int n = 2;
  const ExactRational wrong =
      ExactRational(n + 2, (n + 2) * (n + 2) - 1) * ExactRational((2 * n - 3) * 6 + 3 * (n + 1) * 2);
  EXPECT_EQ(wrong, ExactRational(32, 5));
  EXPECT_EQ(general_step(1, n, 2, 6), ExactInteger(16));
}

}  // namespace
}  // namespace trinomial
