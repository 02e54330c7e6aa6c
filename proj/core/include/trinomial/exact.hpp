#pragma once

// Exact integer and rational arithmetic.
//
// ExactInteger and ExactRational are immutable-by-convention value types
// backed by GMP. Every coefficient, character and series term in this
// library is carried in one of these; floating point only appears in
// quadrature.hpp.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace trinomial {

/// Raised when a quotient is requested that is not an integer, or when a
/// value expected to be integral (a recurrence step, a series term) is not.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ExactInteger {
 public:
  ExactInteger() = default;

  template <typename T>
    requires std::is_integral_v<T>
  ExactInteger(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  explicit ExactInteger(mpz_class value) : value_(std::move(value)) {}

  /// Parses an optionally signed decimal string such as "-123".
  static ExactInteger parse(std::string_view text);

  std::string to_string() const { return value_.get_str(10); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_even() const { return mpz_even_p(value_.get_mpz_t()) != 0; }

  ExactInteger abs() const { return ExactInteger(mpz_class(::abs(value_))); }
  ExactInteger pow(unsigned long exponent) const;

  /// True when the value fits a signed 64-bit integer.
  bool fits_int64() const { return mpz_fits_slong_p(value_.get_mpz_t()) != 0; }
  std::int64_t to_int64() const;

  const mpz_class& raw() const { return value_; }

  ExactInteger operator-() const { return ExactInteger(mpz_class(-value_)); }

  ExactInteger& operator+=(const ExactInteger& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  ExactInteger& operator-=(const ExactInteger& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  ExactInteger& operator*=(const ExactInteger& rhs) {
    value_ *= rhs.value_;
    return *this;
  }

  friend ExactInteger operator+(ExactInteger lhs, const ExactInteger& rhs) {
    return lhs += rhs;
  }
  friend ExactInteger operator-(ExactInteger lhs, const ExactInteger& rhs) {
    return lhs -= rhs;
  }
  friend ExactInteger operator*(ExactInteger lhs, const ExactInteger& rhs) {
    return lhs *= rhs;
  }

  friend bool operator==(const ExactInteger& a, const ExactInteger& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const ExactInteger& a,
                                          const ExactInteger& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

/// a / b, requiring b != 0 and b | a.
/// Throws std::domain_error on a zero divisor and InexactDivision on a
/// nonzero remainder.
ExactInteger div_exact(const ExactInteger& a, const ExactInteger& b);

ExactInteger gcd(const ExactInteger& a, const ExactInteger& b);

std::ostream& operator<<(std::ostream& os, const ExactInteger& value);

/// A fraction kept in lowest terms with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;

  template <typename T>
    requires std::is_integral_v<T>
  ExactRational(T value)  // NOLINT(google-explicit-constructor)
      : ExactRational(ExactInteger(value)) {}

  ExactRational(const ExactInteger& value)  // NOLINT(google-explicit-constructor)
      : value_(value.raw()) {}

  /// Normalizes numerator/denominator. Throws std::domain_error if the
  /// denominator is zero.
  ExactRational(const ExactInteger& numerator, const ExactInteger& denominator);

  /// Parses "22/7", "-3" or "4/-8" (normalized on the way in).
  static ExactRational parse(std::string_view text);

  ExactInteger numerator() const {
    return ExactInteger(mpz_class(value_.get_num()));
  }
  ExactInteger denominator() const {
    return ExactInteger(mpz_class(value_.get_den()));
  }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return cmp(value_.get_den(), 1) == 0; }

  /// The value as an integer; throws InexactDivision if it is not one.
  ExactInteger to_integer() const;

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  /// Rounded decimal expansion with `digits` digits after the point.
  std::string to_decimal(unsigned digits) const;

  const mpq_class& raw() const { return value_; }

  ExactRational operator-() const;

  ExactRational& operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  ExactRational& operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  ExactRational& operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) {
    return lhs += rhs;
  }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) {
    return lhs -= rhs;
  }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) {
    return lhs *= rhs;
  }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) {
    return lhs /= rhs;
  }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a,
                                          const ExactRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit ExactRational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& value);

}  // namespace trinomial
