#pragma once

// Characters <n, lambda> (binomial coefficients, zero outside 0..n) and the
// two product transformations of pairs of characters.

#include "trinomial/exact.hpp"

namespace trinomial {

/// Binomial coefficient <n, lambda> with the boundary convention that it
/// vanishes for lambda < 0 or lambda > n. Throws std::invalid_argument for
/// negative n.
ExactInteger character(int n, int lambda);

/// Both sides of an identity between products of characters.
struct ProductIdentity {
  ExactInteger lhs;
  ExactInteger rhs;

  bool holds() const { return lhs == rhs; }
};

/// <n,a><n-a,b>  versus  <n,b><n-b,a>
ProductIdentity product_swap(int n, int alpha, int beta);

/// <n,a><n-a,b>  versus  <a+b,a><n,a+b>
ProductIdentity product_collapse(int n, int alpha, int beta);

inline bool product_swap_check(int n, int alpha, int beta) {
  return product_swap(n, alpha, beta).holds();
}
inline bool product_collapse_check(int n, int alpha, int beta) {
  return product_collapse(n, alpha, beta).holds();
}

/// Ratio <2a+2, a+1> / <2a, a> = (4a+2)/(a+1).
ExactRational central_binomial_step(int alpha);

}  // namespace trinomial
