#pragma once

// Forward differences of the central sequence and the expressions of the
// off-centre diagonals through them:
//
//   2z = D^l p - l D^(l-2) p + l(l-3)/2 D^(l-4) p - l(l-4)(l-5)/6 D^(l-6) p + ...
//
// continued while the order of D stays nonnegative.

#include <span>
#include <vector>

#include "trinomial/exact.hpp"
#include "trinomial/sequence.hpp"

namespace trinomial {

/// deltas[k][n] = D^k p(n); row k has base.size() - k entries.
class DifferenceTable {
 public:
  /// Throws std::invalid_argument unless base.size() > max_order >= 0.
  DifferenceTable(std::span<const ExactInteger> base, int max_order);

  int max_order() const { return static_cast<int>(deltas_.size()) - 1; }
  std::span<const ExactInteger> base() const { return deltas_.front(); }

  /// Row k of the table. Throws std::out_of_range for k > max_order().
  std::span<const ExactInteger> row(int k) const;

  /// D^k p(n). Throws std::out_of_range if not covered by the table.
  const ExactInteger& at(int k, int n) const;

 private:
  std::vector<std::vector<ExactInteger>> deltas_;
};

inline DifferenceTable build_difference_table(std::span<const ExactInteger> p_values,
                                              int max_order) {
  return DifferenceTable(p_values, max_order);
}

/// Signed coefficients c_j (j = 0..lambda/2) of D^(lambda-2j) p:
/// c_0 = 1, c_j = (-1)^j (lambda/j) <lambda-j-1, j-1>.
std::vector<ExactInteger> delta_coefficients(int lambda);

/// z(n, lambda) for lambda >= 1. The right-hand side must be even; an odd
/// value throws InexactDivision. Throws std::out_of_range if the table is
/// too shallow or too short.
ExactInteger z_from_differences(const DifferenceTable& table, int lambda, int n);

/// Diagonals lambda = 1..max_lambda for n = 0..max_n via
///   q = (p' - p)/2,  z_l = z_{l-1}' - z_{l-1} - z_{l-2}.
/// Requires p_values.size() >= max_n + max_lambda + 1.
std::vector<DiagonalSequence> stepwise_chain(std::span<const ExactInteger> p_values,
                                             int max_lambda, int max_n);

}  // namespace trinomial
