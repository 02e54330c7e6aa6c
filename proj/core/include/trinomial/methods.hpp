#pragma once

// Uniform entry point over every algorithm that produces a diagonal.

#include <optional>
#include <string>

#include "trinomial/sequence.hpp"

namespace trinomial {

/// z(0..max_n, lambda) via `method`.
///
/// `delta` obtains p from the central recurrence and applies the
/// difference formula (lambda = 0 returns that p unchanged); `stepwise`
/// chains the relations of consecutive diagonals from the same p.
DiagonalSequence compute_diagonal(Method method, int lambda, int max_n);

struct Mismatch {
  int n = 0;
  int lambda = 0;
  Method method = Method::oracle;
  std::string expected;
  std::string actual;
};

/// Compares every selectable method with the oracle for 0 <= lambda <= n
/// <= max_n; returns the first disagreement, if any.
std::optional<Mismatch> crosscheck(int max_n);

}  // namespace trinomial
