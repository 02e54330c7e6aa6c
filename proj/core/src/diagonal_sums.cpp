#include "trinomial/diagonal_sums.hpp"

#include <string>

#include "trinomial/binomial.hpp"

namespace trinomial {
namespace {

void require_nonnegative(int n, int lambda) {
  if (n < 0 || lambda < 0) {
    throw std::invalid_argument("diagonal sums need n >= 0 and lambda >= 0, got n=" +
                                std::to_string(n) +
                                " lambda=" + std::to_string(lambda));
  }
}

}  // namespace

ExactInteger z_sum_form1(int n, int lambda) {
  require_nonnegative(n, lambda);
  ExactInteger z;
  for (int a = 0;; ++a) {
    ExactInteger outer = character(n, a);
    if (outer.is_zero()) break;
    ExactInteger inner = character(n - a, lambda + a);
    if (inner.is_zero()) break;
    z += outer * inner;
  }
  return z;
}

ExactInteger z_sum_form2(int n, int lambda) {
  require_nonnegative(n, lambda);
  ExactInteger z;
  for (int a = 0;; ++a) {
    ExactInteger outer = character(n, lambda + a);
    if (outer.is_zero()) break;
    ExactInteger inner = character(n - lambda - a, a);
    if (inner.is_zero()) break;
    z += outer * inner;
  }
  return z;
}

ExactInteger z_sum_form3(int n, int lambda) {
  require_nonnegative(n, lambda);
  ExactInteger z;
  for (int k = 0;; ++k) {
    ExactInteger upper = character(n, lambda + 2 * k);
    if (upper.is_zero()) break;
    z += character(lambda + 2 * k, k) * upper;
  }
  return z;
}

TermRatioState::TermRatioState(int n, int lambda)
    : n_(n), lambda_(lambda), term_(character(n, lambda)), partial_sum_(term_) {
  require_nonnegative(n, lambda);
}

void TermRatioState::advance() {
  const int top = n_ - 2 * alpha_ - lambda_;
  term_ *= ExactRational(ExactInteger(top) * (top - 1),
                         ExactInteger(alpha_ + 1) * (lambda_ + alpha_ + 1));
  ++alpha_;
  partial_sum_ += term_;
}

TermRatioResult z_term_ratio(int n, int lambda) {
  TermRatioState state(n, lambda);
  TermRatioResult result;
  while (!state.finished()) {
    result.terms.push_back(state.term().to_integer());
    state.advance();
  }
  result.sum = state.partial_sum().to_integer();
  return result;
}

ExactInteger central_p_factor_series(int n) {
  require_nonnegative(n, 0);
  ExactRational factor = 1;
  ExactRational p;
  for (int a = 0; 2 * a <= n; ++a) {
    p += factor * character(n, 2 * a);
    factor *= central_binomial_step(a);
  }
  return p.to_integer();
}

}  // namespace trinomial
