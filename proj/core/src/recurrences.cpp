#include "trinomial/recurrences.hpp"

#include <string>

namespace trinomial {
namespace {

ExactInteger integral_step(const ExactRational& value, const char* what, int n) {
  if (!value.is_integer()) {
    throw InexactDivision(std::string(what) + " step at n=" + std::to_string(n) +
                          " produced " + value.to_string());
  }
  return value.numerator();
}

}  // namespace

ExactInteger central_step(int n, const ExactInteger& p, const ExactInteger& p1) {
  if (n < 0) throw std::invalid_argument("central_step: negative n");
  ExactRational next =
      ExactRational(p1) + ExactRational(ExactInteger(n + 1), ExactInteger(n + 2)) *
                              ExactRational(p1 + 3 * p);
  return integral_step(next, "central recurrence", n);
}

ExactInteger general_step(int lambda, int n, const ExactInteger& z,
                          const ExactInteger& z1) {
  if (n < 0 || lambda < 0) {
    throw std::invalid_argument("general_step: negative n or lambda");
  }
  const ExactInteger m = n + 2;
  const ExactInteger denominator = m * m - ExactInteger(lambda) * lambda;
  if (denominator.sign() <= 0) {
    throw std::domain_error("general_step: (n+2)^2 - lambda^2 must be positive (n=" +
                            std::to_string(n) + ", lambda=" + std::to_string(lambda) +
                            ")");
  }
  ExactRational next(m * ((2 * n + 3) * z1 + ExactInteger(3 * (n + 1)) * z),
                     denominator);
  return integral_step(next, "general recurrence", n);
}

DiagonalSequence central_sequence(int max_n) {
  if (max_n < 0) throw std::invalid_argument("central_sequence: negative max_n");
  DiagonalSequence seq{0, {}, Method::recurrence};
  seq.values.reserve(static_cast<std::size_t>(max_n) + 1);
  seq.values.emplace_back(1);
  if (max_n >= 1) seq.values.emplace_back(1);
  for (int n = 0; n + 2 <= max_n; ++n) {
    seq.values.push_back(central_step(n, seq.values[n], seq.values[n + 1]));
  }
  return seq;
}

DiagonalSequence general_sequence(int lambda, int max_n) {
  if (lambda < 0 || max_n < 0) {
    throw std::invalid_argument("general_sequence: negative lambda or max_n");
  }
  DiagonalSequence seq{lambda, {}, Method::recurrence};
  seq.values.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    if (n < lambda) {
      seq.values.emplace_back(0);
    } else if (n == lambda) {
      seq.values.emplace_back(1);
    } else if (n == lambda + 1) {
      seq.values.emplace_back(lambda + 1);
    } else {
      seq.values.push_back(
          general_step(lambda, n - 2, seq.values[n - 2], seq.values[n - 1]));
    }
  }
  return seq;
}

}  // namespace trinomial
