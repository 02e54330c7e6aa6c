#include "trinomial/series.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace trinomial {
namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
  }
}

double approximate(const ExactRational& value) {
  return std::stod(value.to_decimal(20));
}

}  // namespace

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries::PowerSeries(int order, std::vector<ExactRational> coeffs)
    : PowerSeries(order) {
  const auto n = std::min(coeffs.size(), coeffs_.size());
  for (std::size_t k = 0; k < n; ++k) coeffs_[k] = std::move(coeffs[k]);
}

PowerSeries PowerSeries::monomial(int order, int degree, ExactRational coeff) {
  PowerSeries s(order);
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = std::move(coeff);
  return s;
}

const ExactRational& PowerSeries::operator[](int k) const {
  if (k < 0 || k > order()) {
    throw std::out_of_range("coefficient x^" + std::to_string(k) +
                            " beyond order " + std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

PowerSeries PowerSeries::truncated(int new_order) const {
  if (new_order > order()) {
    throw std::invalid_argument("truncated: cannot raise order from " +
                                std::to_string(order()) + " to " +
                                std::to_string(new_order));
  }
  return PowerSeries(new_order, std::vector<ExactRational>(
                                    coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  require_same_order(*this, rhs, "add");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  require_same_order(*this, rhs, "sub");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const ExactRational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "mul");
  const int n = a.order();
  PowerSeries r(n);
  for (int i = 0; i <= n; ++i) {
    const auto& ai = a.coeffs_[i];
    if (ai.is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!b.coeffs_[j].is_zero()) r.coeffs_[i + j] += ai * b.coeffs_[j];
    }
  }
  return r;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b, "div");
  if (b.coeffs_[0].is_zero()) {
    throw std::domain_error("series division by a series with zero constant term");
  }
  const int n = a.order();
  PowerSeries q(n);
  for (int k = 0; k <= n; ++k) {
    ExactRational acc = a.coeffs_[k];
    for (int j = 1; j <= k; ++j) {
      if (!b.coeffs_[j].is_zero()) acc -= b.coeffs_[j] * q.coeffs_[k - j];
    }
    q.coeffs_[k] = acc / b.coeffs_[0];
  }
  return q;
}

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) { return a + b; }
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }
PowerSeries series_div(const PowerSeries& a, const PowerSeries& b) { return a / b; }

PowerSeries series_pow(const PowerSeries& a, unsigned k) {
  PowerSeries result = PowerSeries::one(a.order());
  PowerSeries base = a;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

PowerSeries series_sqrt(const PowerSeries& a) {
  if (a[0] != ExactRational(1)) {
    throw std::domain_error("series_sqrt: constant term must be 1, got " +
                            a[0].to_string());
  }
  const int n = a.order();
  const ExactRational half(ExactInteger(1), ExactInteger(2));

  // s is correct through x^precision; each Newton step doubles that.
  PowerSeries s = PowerSeries::one(0);
  int precision = 0;
  while (precision < n) {
    precision = std::min(n, 2 * precision + 1);
    PowerSeries widened(precision, s.coeffs());
    s = (widened + a.truncated(precision) / widened) * half;
  }

  if (s * s != a) {
    throw std::logic_error("series_sqrt: Newton iterate failed to square back");
  }
  return s;
}

PowerSeries radicand(int order) { return PowerSeries(order, {1, -2, -3}); }

PowerSeries gf_P(int order) {
  return PowerSeries::one(order) / series_sqrt(radicand(order));
}

PowerSeries gf_nu(int order) {
  const ExactRational half(ExactInteger(1), ExactInteger(2));
  return (PowerSeries(order, {1, -1}) - series_sqrt(radicand(order))) * half;
}

PowerSeries gf_Z(int lambda, int order) {
  if (lambda < 0) throw std::invalid_argument("gf_Z: negative lambda");
  PowerSeries p = gf_P(order);
  if (lambda == 0) return p;
  return p * series_pow(gf_nu(order), static_cast<unsigned>(lambda));
}

BSubstitution b_substitution_check(const ExactRational& b, int series_order) {
  if (b.sign() < 0 || b >= ExactRational(1)) {
    throw std::invalid_argument("b must lie in [0, 1), got " + b.to_string());
  }
  BSubstitution out;
  out.b = b;
  const ExactRational denom = ExactRational(1) + b + b * b;
  out.x = b / denom;
  out.radical = (ExactRational(1) - b * b) / denom;
  out.nu = (ExactRational(1) - out.x - out.radical) / ExactRational(2);

  const ExactRational& x = out.x;
  out.radical_identity =
      ExactRational(1) - ExactRational(2) * x - ExactRational(3) * x * x ==
      out.radical * out.radical;
  out.nu_identity = out.nu == b * x;

  // Horner evaluation of the truncated nu series at x.
  const PowerSeries nu = gf_nu(series_order);
  const double xd = approximate(x);
  double acc = 0.0;
  for (int k = series_order; k >= 0; --k) acc = acc * xd + approximate(nu[k]);
  out.nu_series = acc;
  out.series_error = std::abs(acc - approximate(b * x));
  return out;
}

std::string to_csv(const PowerSeries& s) {
  std::ostringstream os;
  os << "degree,numerator,denominator\n";
  for (int k = 0; k <= s.order(); ++k) {
    os << k << ',' << s[k].numerator() << ',' << s[k].denominator() << '\n';
  }
  return os.str();
}

std::string to_polynomial_string(const PowerSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= s.order(); ++k) {
    const ExactRational& c = s[k];
    if (c.is_zero()) continue;
    ExactRational magnitude = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == ExactRational(1);
    if (k == 0 || !unit) os << magnitude;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace trinomial
