#pragma once

// P-recursive generation of the diagonals z(n, lambda).
//
// Central diagonal (lambda = 0):
//   p'' = p' + (n+1)/(n+2) (p' + 3p)
// General diagonal:
//   z'' = (n+2) / ((n+2)^2 - lambda^2) * ((2n+3) z' + 3(n+1) z)
// where z, z', z'' are the values at n, n+1, n+2. Every step is evaluated
// in exact rationals and must land on an integer.

#include "trinomial/exact.hpp"
#include "trinomial/sequence.hpp"

namespace trinomial {

/// p(n+2) from p(n) and p(n+1).
ExactInteger central_step(int n, const ExactInteger& p, const ExactInteger& p1);

/// z(n+2, lambda) from z(n, lambda) and z(n+1, lambda). Requires
/// n + 2 > lambda.
ExactInteger general_step(int lambda, int n, const ExactInteger& z,
                          const ExactInteger& z1);

/// p(0..max_n), seeded with p(0) = p(1) = 1.
DiagonalSequence central_sequence(int max_n);

/// z(0..max_n, lambda), seeded with z(n) = 0 for n < lambda, z(lambda) = 1
/// and z(lambda+1) = lambda+1.
DiagonalSequence general_sequence(int lambda, int max_n);

}  // namespace trinomial
