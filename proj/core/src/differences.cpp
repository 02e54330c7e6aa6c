#include "trinomial/differences.hpp"

#include <string>

#include "trinomial/binomial.hpp"

namespace trinomial {

DifferenceTable::DifferenceTable(std::span<const ExactInteger> base,
                                 int max_order) {
  if (max_order < 0) {
    throw std::invalid_argument("difference table: negative order");
  }
  if (base.size() <= static_cast<std::size_t>(max_order)) {
    throw std::invalid_argument("difference table: need more than " +
                                std::to_string(max_order) + " values, got " +
                                std::to_string(base.size()));
  }
  deltas_.reserve(static_cast<std::size_t>(max_order) + 1);
  deltas_.emplace_back(base.begin(), base.end());
  for (int k = 0; k < max_order; ++k) {
    const auto& prev = deltas_.back();
    std::vector<ExactInteger> next;
    next.reserve(prev.size() - 1);
    for (std::size_t n = 0; n + 1 < prev.size(); ++n) {
      next.push_back(prev[n + 1] - prev[n]);
    }
    deltas_.push_back(std::move(next));
  }
}

std::span<const ExactInteger> DifferenceTable::row(int k) const {
  if (k < 0 || k > max_order()) {
    throw std::out_of_range("difference order " + std::to_string(k) +
                            " not in table");
  }
  return deltas_[static_cast<std::size_t>(k)];
}

const ExactInteger& DifferenceTable::at(int k, int n) const {
  auto r = row(k);
  if (n < 0 || static_cast<std::size_t>(n) >= r.size()) {
    throw std::out_of_range("D^" + std::to_string(k) + " p(" + std::to_string(n) +
                            ") not in table");
  }
  return r[static_cast<std::size_t>(n)];
}

std::vector<ExactInteger> delta_coefficients(int lambda) {
  if (lambda < 1) throw std::invalid_argument("delta_coefficients: lambda < 1");
  std::vector<ExactInteger> c{ExactInteger(1)};
  for (int j = 1; lambda - 2 * j >= 0; ++j) {
    ExactInteger magnitude = div_exact(lambda * character(lambda - j - 1, j - 1), j);
    c.push_back(j % 2 == 0 ? magnitude : -magnitude);
  }
  return c;
}

ExactInteger z_from_differences(const DifferenceTable& table, int lambda, int n) {
  const auto c = delta_coefficients(lambda);
  ExactInteger twice;
  for (std::size_t j = 0; j < c.size(); ++j) {
    twice += c[j] * table.at(lambda - 2 * static_cast<int>(j), n);
  }
  if (!twice.is_even()) {
    throw InexactDivision("difference formula gave odd 2z=" + twice.to_string() +
                          " at n=" + std::to_string(n) +
                          " lambda=" + std::to_string(lambda));
  }
  return div_exact(twice, 2);
}

std::vector<DiagonalSequence> stepwise_chain(std::span<const ExactInteger> p_values,
                                             int max_lambda, int max_n) {
  if (max_lambda < 0 || max_n < 0) {
    throw std::invalid_argument("stepwise_chain: negative bound");
  }
  const auto needed = static_cast<std::size_t>(max_n + max_lambda + 1);
  if (p_values.size() < needed) {
    throw std::invalid_argument("stepwise_chain: need " + std::to_string(needed) +
                                " values of p, got " +
                                std::to_string(p_values.size()));
  }

  // Level l is kept on n = 0..(len(p) - 1 - l); each level consumes one
  // index of look-ahead.
  std::vector<ExactInteger> two_back;                                  // z_{l-2}
  std::vector<ExactInteger> one_back(p_values.begin(), p_values.end());  // z_{l-1}
  std::vector<DiagonalSequence> out;

  for (int lambda = 1; lambda <= max_lambda; ++lambda) {
    std::vector<ExactInteger> next;
    next.reserve(one_back.size() - 1);
    for (std::size_t n = 0; n + 1 < one_back.size(); ++n) {
      if (lambda == 1) {
        next.push_back(div_exact(one_back[n + 1] - one_back[n], 2));
      } else {
        next.push_back(one_back[n + 1] - one_back[n] - two_back[n]);
      }
    }
    two_back = std::move(one_back);
    one_back = std::move(next);
    out.push_back({lambda,
                   std::vector<ExactInteger>(one_back.begin(),
                                             one_back.begin() + max_n + 1),
                   Method::stepwise});
  }
  return out;
}

}  // namespace trinomial
