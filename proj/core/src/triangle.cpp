#include "trinomial/triangle.hpp"

#include <string>

namespace trinomial {

TrinomialTriangle TrinomialTriangle::build(int max_n) {
  if (max_n < 0) throw std::invalid_argument("build_triangle: negative max_n");

  std::vector<std::vector<ExactInteger>> rows;
  rows.reserve(static_cast<std::size_t>(max_n) + 1);
  rows.push_back({ExactInteger(1)});

  for (int n = 0; n < max_n; ++n) {
    const auto& prev = rows.back();
    std::vector<ExactInteger> next(prev.size() + 2);
    for (std::size_t k = 0; k < next.size(); ++k) {
      ExactInteger sum;
      for (std::size_t back = 0; back <= 2; ++back) {
        if (k >= back && k - back < prev.size()) sum += prev[k - back];
      }
      next[k] = std::move(sum);
    }
    rows.push_back(std::move(next));
  }
  return TrinomialTriangle(std::move(rows));
}

void TrinomialTriangle::check_row(int n) const {
  if (n < 0 || n > max_n()) {
    throw std::out_of_range("row " + std::to_string(n) +
                            " outside built range 0.." +
                            std::to_string(max_n()));
  }
}

std::span<const ExactInteger> TrinomialTriangle::row(int n) const {
  check_row(n);
  return rows_[static_cast<std::size_t>(n)];
}

ExactInteger TrinomialTriangle::coeff(int n, int k) const {
  check_row(n);
  if (k < 0 || k > 2 * n) return 0;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

ExactRational leading_term(int n, int k) {
  const ExactInteger m = n;
  switch (k) {
    case 1:
      return m;
    case 2:
      return ExactRational(m * (m + 1), 2);
    case 3:
      return ExactRational(m * (m - 1) * (m + 4), 6);
    case 4:
      return ExactRational(m * (m - 1) * (m * m + 7 * m - 6), 24);
    case 5:
      // The commonly printed n(n-1)(n-2)(n+12)/120 lacks the factor (n+1);
      // without it T(3,5) would come out as 3/4.
      return ExactRational(m * (m - 1) * (m - 2) * (m + 1) * (m + 12), 120);
    default:
      throw std::invalid_argument("leading_term: k must be in 1..5");
  }
}

bool leading_term_check(const TrinomialTriangle& tri, int n) {
  for (int k = 1; k <= 5 && k <= 2 * n; ++k) {
    if (leading_term(n, k) != ExactRational(tri.coeff(n, k))) return false;
  }
  return true;
}

}  // namespace trinomial
