#pragma once

// Truncated formal power series with exact rational coefficients.
//
// A PowerSeries of order N carries the coefficients of x^0 .. x^N. Binary
// operations require both operands to have the same order; combining
// series of different orders throws std::invalid_argument instead of
// silently truncating.

#include <initializer_list>
#include <string>
#include <vector>

#include "trinomial/exact.hpp"

namespace trinomial {

class PowerSeries {
 public:
  /// The zero series of the given order.
  explicit PowerSeries(int order);

  /// Polynomial with the given low-order coefficients; terms beyond
  /// `order` are dropped.
  PowerSeries(int order, std::vector<ExactRational> coeffs);
  PowerSeries(int order, std::initializer_list<ExactRational> coeffs)
      : PowerSeries(order, std::vector<ExactRational>(coeffs)) {}

  static PowerSeries one(int order) { return PowerSeries(order, {1}); }
  static PowerSeries monomial(int order, int degree, ExactRational coeff = 1);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<ExactRational>& coeffs() const { return coeffs_; }

  /// Coefficient of x^k; throws std::out_of_range if k > order().
  const ExactRational& operator[](int k) const;

  /// Same series cut to a lower order. Raising the order is rejected.
  PowerSeries truncated(int new_order) const;

  PowerSeries operator-() const;
  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(const ExactRational& scalar);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const ExactRational& s) { return a *= s; }
  friend PowerSeries operator*(const ExactRational& s, PowerSeries a) { return a *= s; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<ExactRational> coeffs_;
};

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

/// Throws std::domain_error if b has a zero constant term.
PowerSeries series_div(const PowerSeries& a, const PowerSeries& b);

/// a^k by repeated squaring.
PowerSeries series_pow(const PowerSeries& a, unsigned k);

/// The square root with constant term 1. Requires a[0] == 1 (else
/// std::domain_error). Computed by Newton iteration with doubling
/// precision and certified by squaring back.
PowerSeries series_sqrt(const PowerSeries& a);

/// 1 - 2x - 3x^2
PowerSeries radicand(int order);

/// P = 1 / sqrt(1 - 2x - 3x^2); [x^n] P = p(n).
PowerSeries gf_P(int order);

/// nu = (1 - x - sqrt(1 - 2x - 3x^2)) / 2, so that nu^2 = nu(1 - x) - x^2.
PowerSeries gf_nu(int order);

/// Z_lambda = P nu^lambda; [x^(n+lambda)] Z_lambda = z(n, lambda).
PowerSeries gf_Z(int lambda, int order);

/// Result of substituting x = b / (1 + b + b^2).
struct BSubstitution {
  ExactRational b;
  ExactRational x;
  ExactRational radical;   // sqrt(1 - 2x - 3x^2) = (1 - b^2)/(1 + b + b^2)
  ExactRational nu;        // (1 - x - radical)/2, which equals b x
  double nu_series = 0.0;  // truncated nu series evaluated at x
  double series_error = 0.0;  // |nu_series - b x|
  bool radical_identity = false;  // 1 - 2x - 3x^2 == radical^2
  bool nu_identity = false;       // nu == b x
};

/// Requires 0 <= b < 1 (else std::invalid_argument). `series_order`
/// controls how many terms of nu are summed for the numeric check.
BSubstitution b_substitution_check(const ExactRational& b, int series_order = 256);

/// Lines "degree,numerator,denominator" under that header.
std::string to_csv(const PowerSeries& s);

/// Human-readable polynomial such as "1 - x - 2x^2 + 1/2x^3".
std::string to_polynomial_string(const PowerSeries& s);

}  // namespace trinomial
