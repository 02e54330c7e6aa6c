#pragma once

// Brute-force coefficient table of (1 + x + x^2)^n.
//
// Row n holds all 2n+1 coefficients; row n+1 is obtained by adding each
// coefficient of row n to its two predecessors. This is the ground truth
// every other method is checked against.

#include <span>
#include <vector>

#include "trinomial/exact.hpp"

namespace trinomial {

class TrinomialTriangle {
 public:
  /// Rows 0..max_n. Throws std::invalid_argument for negative max_n.
  static TrinomialTriangle build(int max_n);

  int max_n() const { return static_cast<int>(rows_.size()) - 1; }

  /// Row n (2n+1 entries). Throws std::out_of_range beyond max_n().
  std::span<const ExactInteger> row(int n) const;

  /// Coefficient of x^k in (1 + x + x^2)^n; zero for k < 0 or k > 2n.
  /// Throws std::out_of_range if n is not in 0..max_n().
  ExactInteger coeff(int n, int k) const;

  /// z(n, lambda) = T(n, n + lambda), the lambda-th diagonal.
  ExactInteger diagonal(int n, int lambda) const { return coeff(n, n + lambda); }

 private:
  explicit TrinomialTriangle(std::vector<std::vector<ExactInteger>> rows)
      : rows_(std::move(rows)) {}

  void check_row(int n) const;

  std::vector<std::vector<ExactInteger>> rows_;
};

/// Checks the closed forms of T(n,1) .. T(n,5) against row n. Indices
/// past 2n are skipped.
bool leading_term_check(const TrinomialTriangle& tri, int n);

/// Closed-form value of T(n, k) for k = 1..5 as used by
/// leading_term_check.
ExactRational leading_term(int n, int k);

}  // namespace trinomial
