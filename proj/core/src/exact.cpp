#include "trinomial/exact.hpp"

#include <cctype>
#include <ostream>

namespace trinomial {
namespace {

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ExactInteger ExactInteger::parse(std::string_view text) {
  if (!is_decimal_integer(text)) {
    throw std::invalid_argument("not a decimal integer: '" +
                                std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return ExactInteger(mpz_class(std::string(text), 10));
}

ExactInteger ExactInteger::pow(unsigned long exponent) const {
  mpz_class result;
  mpz_pow_ui(result.get_mpz_t(), value_.get_mpz_t(), exponent);
  return ExactInteger(std::move(result));
}

std::int64_t ExactInteger::to_int64() const {
  if (!fits_int64()) {
    throw std::overflow_error("integer does not fit 64 bits: " + to_string());
  }
  return value_.get_si();
}

ExactInteger div_exact(const ExactInteger& a, const ExactInteger& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(a.raw().get_mpz_t(), b.raw().get_mpz_t())) {
    throw InexactDivision(a.to_string() + " is not divisible by " +
                          b.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return ExactInteger(std::move(q));
}

ExactInteger gcd(const ExactInteger& a, const ExactInteger& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return ExactInteger(std::move(g));
}

std::ostream& operator<<(std::ostream& os, const ExactInteger& value) {
  return os << value.to_string();
}

ExactRational::ExactRational(const ExactInteger& numerator,
                             const ExactInteger& denominator) {
  if (denominator.is_zero()) throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator.raw(), denominator.raw());
  value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return ExactRational(ExactInteger::parse(text));
  }
  auto num = ExactInteger::parse(text.substr(0, slash));
  auto den = ExactInteger::parse(text.substr(slash + 1));
  return ExactRational(num, den);
}

ExactInteger ExactRational::to_integer() const {
  if (!is_integer()) {
    throw InexactDivision("value is not an integer: " + to_string());
  }
  return numerator();
}

std::string ExactRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

std::string ExactRational::to_decimal(unsigned digits) const {
  // round(|v| * 10^digits) as an integer, then place the point.
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class num = abs(value_.get_num()) * scale * 2 + value_.get_den();
  mpz_class den = value_.get_den() * 2;
  mpz_class scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

  std::string body = scaled.get_str(10);
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  if (digits > 0) body.insert(body.size() - digits, ".");
  bool negative = sign() < 0 && scaled != 0;
  return negative ? "-" + body : body;
}

ExactRational ExactRational::operator-() const {
  return ExactRational(mpq_class(-value_));
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& value) {
  return os << value.to_string();
}

}  // namespace trinomial
