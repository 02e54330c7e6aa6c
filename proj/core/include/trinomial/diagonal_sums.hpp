#pragma once

// Closed binomial sums for z(n, lambda), the coefficient of x^(n+lambda)
// in (1 + x + x^2)^n, and the term-ratio evaluation of the first form.
//
// All functions return 0 when lambda > n. Negative n or lambda throws
// std::invalid_argument.

#include <vector>

#include "trinomial/exact.hpp"

namespace trinomial {

/// z = sum_a <n,a> <n-a, lambda+a>
ExactInteger z_sum_form1(int n, int lambda);

/// z = sum_a <n, lambda+a> <n-lambda-a, a>
ExactInteger z_sum_form2(int n, int lambda);

/// z = sum_k <lambda+2k, k> <n, lambda+2k>
ExactInteger z_sum_form3(int n, int lambda);

/// Running state of the term-ratio evaluation. `term` is the current
/// summand; advance() multiplies it by
///   (n-2a-lambda)(n-2a-lambda-1) / ((a+1)(lambda+a+1)).
class TermRatioState {
 public:
  TermRatioState(int n, int lambda);

  const ExactRational& term() const { return term_; }
  const ExactRational& partial_sum() const { return partial_sum_; }
  int alpha() const { return alpha_; }

  bool finished() const { return term_.is_zero(); }

  /// Moves to the next term and adds it to the partial sum.
  void advance();

 private:
  int n_;
  int lambda_;
  int alpha_ = 0;
  ExactRational term_;
  ExactRational partial_sum_;
};

struct TermRatioResult {
  ExactInteger sum;
  std::vector<ExactInteger> terms;  // nonzero terms in order
};

/// Sums the series term by term. Each term must come out integral; a
/// fractional term throws InexactDivision.
TermRatioResult z_term_ratio(int n, int lambda);

/// p(n) = sum_a c_a <n, 2a> where c_0 = 1 and c_{a+1} = c_a (4a+2)/(a+1),
/// i.e. the numeric factors 1, 2/1, 2*6/(1*2), 2*6*10/(1*2*3), ...
ExactInteger central_p_factor_series(int n);

}  // namespace trinomial
