#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "trinomial/exact.hpp"

namespace trinomial {

/// Algorithm that produced a diagonal.
enum class Method {
  oracle,      // brute-force triangle
  sum1,        // sum_a <n,a><n-a,lambda+a>
  sum2,        // sum_a <n,lambda+a><n-lambda-a,a>
  sum3,        // sum_k <lambda+2k,k><n,lambda+2k>
  ratio,       // term-ratio evaluation of sum1
  recurrence,  // three-term P-recursive recurrence
  delta,       // forward differences of the central sequence
  series,      // coefficients of P * nu^lambda
  stepwise,    // chained relations z_l(n) = z_{l-1}(n+1) - z_{l-1}(n) - z_{l-2}(n)
};

std::string_view to_string(Method method);

/// Parses the user-facing method names (everything except `stepwise`).
std::optional<Method> parse_method(std::string_view name);

/// The eight methods selectable from the command line, oracle first.
const std::vector<Method>& selectable_methods();

/// z(n, lambda) for n = 0..values.size()-1.
struct DiagonalSequence {
  int lambda = 0;
  std::vector<ExactInteger> values;
  Method method = Method::oracle;

  int max_n() const { return static_cast<int>(values.size()) - 1; }
};

}  // namespace trinomial
