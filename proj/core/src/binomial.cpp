#include "trinomial/binomial.hpp"

#include <algorithm>
#include <string>

namespace trinomial {

ExactInteger character(int n, int lambda) {
  if (n < 0) {
    throw std::invalid_argument("character: negative n " + std::to_string(n));
  }
  if (lambda < 0 || lambda > n) return 0;

  // Multiplicative formula; every partial product is itself a binomial
  // coefficient, so each division is exact.
  const int k = std::min(lambda, n - lambda);
  ExactInteger result = 1;
  for (int i = 1; i <= k; ++i) {
    result = div_exact(result * (n - k + i), i);
  }
  return result;
}

ProductIdentity product_swap(int n, int alpha, int beta) {
  // <n - a, b> needs a nonnegative upper index; when a > n the left factor
  // <n, a> is already zero.
  auto pair = [n](int first, int second) -> ExactInteger {
    ExactInteger outer = character(n, first);
    if (outer.is_zero()) return 0;
    return outer * character(n - first, second);
  };
  return {pair(alpha, beta), pair(beta, alpha)};
}

ProductIdentity product_collapse(int n, int alpha, int beta) {
  ExactInteger lhs = character(n, alpha);
  if (!lhs.is_zero()) lhs *= character(n - alpha, beta);
  ExactInteger rhs =
      alpha + beta < 0 ? ExactInteger(0)
                       : character(alpha + beta, alpha) * character(n, alpha + beta);
  return {lhs, rhs};
}

ExactRational central_binomial_step(int alpha) {
  if (alpha < 0) {
    throw std::invalid_argument("central_binomial_step: negative alpha");
  }
  return ExactRational(ExactInteger(4 * alpha + 2), ExactInteger(alpha + 1));
}

}  // namespace trinomial
