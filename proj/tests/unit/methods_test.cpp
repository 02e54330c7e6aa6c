#include "trinomial/methods.hpp"

#include <gtest/gtest.h>

#include "trinomial/recurrences.hpp"
#include "trinomial/series.hpp"
#include "trinomial/triangle.hpp"

namespace trinomial {
namespace {

TEST(MethodNamesTest, RoundTrip) {
  for (Method m : selectable_methods()) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_EQ(selectable_methods().size(), 8u);
  EXPECT_FALSE(parse_method("stepwise").has_value());
  EXPECT_FALSE(parse_method("bogus").has_value());
  EXPECT_EQ(to_string(Method::stepwise), "stepwise");
}

TEST(ComputeDiagonalTest, GoldenCentralByEveryMethod) {
  const std::vector<ExactInteger> golden{1, 1, 3, 7, 19, 51, 141, 393, 1107, 3139, 8953, 25653, 73789};
  for (Method m : selectable_methods()) {
    const auto seq = compute_diagonal(m, 0, 12);
    EXPECT_EQ(seq.values, golden) << to_string(m);
    EXPECT_EQ(seq.method, m);
    EXPECT_EQ(seq.lambda, 0);
  }
}

TEST(ComputeDiagonalTest, StepwiseAgrees) {
  const auto tri = TrinomialTriangle::build(30);
  for (int lambda = 1; lambda <= 6; ++lambda) {
    const auto seq = compute_diagonal(Method::stepwise, lambda, 30);
    for (int n = 0; n <= 30; ++n) ASSERT_EQ(seq.values[n], tri.diagonal(n, lambda));
  }
}

TEST(ComputeDiagonalTest, Rejections) {
  EXPECT_THROW(compute_diagonal(Method::oracle, -1, 4), std::invalid_argument);
  EXPECT_THROW(compute_diagonal(Method::oracle, 0, -1), std::invalid_argument);
  EXPECT_THROW(crosscheck(-1), std::invalid_argument);
}

TEST(CrosscheckTest, AllMethodsAgreeToForty) { EXPECT_FALSE(crosscheck(40).has_value()); }

TEST(CrosscheckTest, RecurrenceAndSeriesToTwoHundred) {
  const auto tri = TrinomialTriangle::build(200);
  for (int lambda = 0; lambda <= 8; ++lambda) {
    const auto rec = compute_diagonal(Method::recurrence, lambda, 200);
    const auto Z = gf_Z(lambda, 200 + lambda);
    for (int n = 0; n <= 200; ++n) {
      ASSERT_EQ(rec.values[n], tri.diagonal(n, lambda)) << n << " " << lambda;
      ASSERT_EQ(Z[n + lambda], ExactRational(tri.diagonal(n, lambda))) << n << " " << lambda;
    }
  }
}

}  // namespace
}  // namespace trinomial
