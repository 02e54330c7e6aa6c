#include "trinomial/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "trinomial/binomial.hpp"
#include "trinomial/triangle.hpp"

namespace trinomial {
namespace {

constexpr double kPi = std::numbers::pi;

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

double int_pow(double base, int exponent) {
  double result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

QuadratureResult scaled(QuadratureResult r, double factor) {
  r.value *= factor;
  r.abs_error_estimate *= std::abs(factor);
  return r;
}

}  // namespace

double to_double(const ExactInteger& value) { return std::stod(value.to_string()); }

QuadratureResult integrate_0_pi(const Integrand& f, double tol,
                                const QuadratureOptions& options) {
  if (!(tol >= 1e-13)) {
    throw std::invalid_argument("integrate_0_pi: tolerance must be >= 1e-13");
  }
  if (options.base_panels == 0 || options.max_panels < options.base_panels) {
    throw std::invalid_argument("integrate_0_pi: bad panel budget");
  }

  std::size_t panels = options.base_panels;
  double h = kPi / static_cast<double>(panels);

  CompensatedSum initial;
  initial.add(0.5 * f(0.0));
  initial.add(0.5 * f(kPi));
  for (std::size_t k = 1; k < panels; ++k) initial.add(f(static_cast<double>(k) * h));
  double estimate = h * initial.value();

  QuadratureResult result{estimate, 0.0, panels, false};
  while (2 * panels <= options.max_panels) {
    CompensatedSum midpoints;
    for (std::size_t k = 0; k < panels; ++k) {
      midpoints.add(f((static_cast<double>(k) + 0.5) * h));
    }
    const double refined = 0.5 * estimate + 0.5 * h * midpoints.value();
    panels *= 2;
    h *= 0.5;

    const double change = std::abs(refined - estimate);
    estimate = refined;
    result = {estimate, change, panels, false};
    const double accept = std::max(tol, options.rel_tol * std::abs(estimate));
    if (panels >= options.min_panels && change <= accept) {
      result.converged = true;
      break;
    }
  }
  return result;
}

QuadratureResult z_by_integral(int n, int lambda, double tol,
                               const QuadratureOptions& options) {
  if (n < 0 || lambda < 0 || n > 30) {
    throw std::invalid_argument("z_by_integral: need 0 <= lambda and 0 <= n <= 30");
  }
  QuadratureOptions opts = options;
  opts.rel_tol = tol;
  auto f = [n, lambda](double phi) {
    return std::cos(lambda * phi) * int_pow(1.0 + 2.0 * std::cos(phi), n);
  };
  return scaled(integrate_0_pi(f, kPi * tol, opts), 1.0 / kPi);
}

bool fourier_decomposition_check(int n, int max_lambda, double tol, int grid) {
  if (n < 0 || n > 20) {
    throw std::invalid_argument("fourier_decomposition_check: need 0 <= n <= 20");
  }
  if (max_lambda < 0 || grid < 2) {
    throw std::invalid_argument("fourier_decomposition_check: bad lambda or grid");
  }
  const auto tri = TrinomialTriangle::build(n);
  std::vector<double> z;
  for (int lambda = 0; lambda <= max_lambda; ++lambda) {
    z.push_back(to_double(tri.diagonal(n, lambda)));
  }

  for (int i = 0; i < grid; ++i) {
    const double phi = kPi * i / (grid - 1);
    const double lhs = int_pow(1.0 + 2.0 * std::cos(phi), n);
    CompensatedSum rhs;
    for (int lambda = 0; lambda <= max_lambda; ++lambda) {
      rhs.add((lambda == 0 ? 1.0 : 2.0) * z[lambda] * std::cos(lambda * phi));
    }
    if (std::abs(lhs - rhs.value()) > tol * std::max(1.0, std::abs(lhs))) {
      return false;
    }
  }
  return true;
}

std::vector<ExactInteger> cos_power_expansion(int alpha) {
  if (alpha < 0) throw std::invalid_argument("cos_power_expansion: negative alpha");
  std::vector<ExactInteger> coeffs;
  for (int j = 0; alpha - 2 * j >= 0; ++j) {
    ExactInteger c = character(alpha, j);
    coeffs.push_back(alpha - 2 * j == 0 ? c : 2 * c);
  }
  return coeffs;
}

double gf_closed_form(double x) { return 1.0 / std::sqrt(1.0 - 2.0 * x - 3.0 * x * x); }

QuadratureResult gf_by_integral(double x, double tol, const QuadratureOptions& options) {
  if (!(x > -1.0 && x < 1.0 / 3.0)) {
    throw std::invalid_argument("gf_by_integral: x must lie in (-1, 1/3)");
  }
  auto f = [x](double phi) { return 1.0 / (1.0 - x - 2.0 * x * std::cos(phi)); };
  return scaled(integrate_0_pi(f, kPi * tol, options), 1.0 / kPi);
}

double gf_antiderivative_route(double x) {
  if (!(x > -1.0 && x < 1.0 / 3.0)) {
    throw std::invalid_argument("gf_antiderivative_route: x must lie in (-1, 1/3)");
  }
  const double k = 2.0 * x / (1.0 - x);
  auto antiderivative = [k](double phi) {
    const double c = std::cos(phi);
    const double arg = std::clamp((c - k) / (1.0 - k * c), -1.0, 1.0);
    return std::acos(arg);
  };
  const double span = antiderivative(kPi) - antiderivative(0.0);
  return span / (kPi * (1.0 - x) * std::sqrt(1.0 - k * k));
}

QuadratureResult b_integral(double b, int lambda, double tol,
                            const QuadratureOptions& options) {
  if (!(b >= 0.0 && b < 1.0) || lambda < 0) {
    throw std::invalid_argument("b_integral: need 0 <= b < 1 and lambda >= 0");
  }
  auto f = [b, lambda](double phi) {
    return std::cos(lambda * phi) / (1.0 - 2.0 * b * std::cos(phi) + b * b);
  };
  return integrate_0_pi(f, tol, options);
}

double b_integral_closed_form(double b, int lambda) {
  return kPi * std::pow(b, lambda) / (1.0 - b * b);
}

bool b_identity_check(double b, int lambda, double tol,
                      const QuadratureOptions& options) {
  const auto r = b_integral(b, lambda, tol, options);
  return r.converged && std::abs(r.value - b_integral_closed_form(b, lambda)) <= tol;
}

bool b_reduction_chain_check(double b, int max_lambda, double tol,
                             const QuadratureOptions& options) {
  if (!(b > 0.0 && b < 1.0) || max_lambda < 1) {
    throw std::invalid_argument(
        "b_reduction_chain_check: need 0 < b < 1 and max_lambda >= 1");
  }
  std::vector<double> I;
  for (int lambda = 0; lambda <= max_lambda; ++lambda) {
    const auto r = b_integral(b, lambda, tol, options);
    if (!r.converged) return false;
    if (std::abs(r.value - b_integral_closed_form(b, lambda)) > tol) return false;
    I.push_back(r.value);
  }
  if (std::abs((1.0 + b * b) * I[0] - 2.0 * b * I[1] - kPi) > tol) return false;
  for (int lambda = 1; lambda < max_lambda; ++lambda) {
    const double predicted = (1.0 + b * b) / b * I[lambda] - I[lambda - 1];
    if (std::abs(predicted - I[lambda + 1]) > tol) return false;
  }
  return true;
}

}  // namespace trinomial
