#pragma once

// Numerical verification of the integral representations over [0, pi].
//
// Every integrand here extends to a smooth, even, 2pi-periodic function,
// for which the composite trapezoid rule converges geometrically. The
// integrator doubles the panel count until two successive estimates agree.

#include <cstddef>
#include <functional>
#include <vector>

#include "trinomial/exact.hpp"

namespace trinomial {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;  // |last estimate - previous estimate|
  std::size_t panels = 0;
  bool converged = false;
};

struct QuadratureOptions {
  std::size_t base_panels = 16;
  // No comparison is made below this many panels, so a trigonometric
  // polynomial of degree < 2 * min_panels cannot alias into a false
  // convergence.
  std::size_t min_panels = 128;
  std::size_t max_panels = std::size_t{1} << 20;
  // Convergence also accepted when the change is below rel_tol * |value|.
  double rel_tol = 0.0;
};

using Integrand = std::function<double(double)>;

/// Integrates f over [0, pi] to absolute tolerance `tol` (>= 1e-13, else
/// std::invalid_argument). Non-convergence within options.max_panels is
/// reported through `converged`, not thrown.
QuadratureResult integrate_0_pi(const Integrand& f, double tol,
                                const QuadratureOptions& options = {});

/// z(n, lambda) = (1/pi) int_0^pi cos(lambda phi) (1 + 2 cos phi)^n dphi.
/// `tol` is relative to max(1, |z|). Requires 0 <= lambda, 0 <= n <= 30.
QuadratureResult z_by_integral(int n, int lambda, double tol,
                               const QuadratureOptions& options = {});

/// Checks (1 + 2 cos phi)^n = p + 2q cos phi + 2r cos 2phi + ... at `grid`
/// equally spaced angles from 0 to pi, using the exact diagonals
/// lambda = 0..max_lambda. Pointwise tolerance is tol * max(1, |lhs|).
/// Requires 0 <= n <= 20.
bool fourier_decomposition_check(int n, int max_lambda, double tol, int grid = 64);

/// Coefficients of cos(alpha phi), cos((alpha-2) phi), ... in
/// 2^alpha cos^alpha phi. The constant term (alpha even) is taken once.
std::vector<ExactInteger> cos_power_expansion(int alpha);

/// P(x) = (1/pi) int_0^pi dphi / (1 - x - 2x cos phi), for -1 < x < 1/3
/// (else std::invalid_argument).
QuadratureResult gf_by_integral(double x, double tol,
                                const QuadratureOptions& options = {});

/// P(x) from the closed antiderivative
///   arccos((cos phi - k)/(1 - k cos phi)) / ((1-x) sqrt(1-k^2)),  k = 2x/(1-x),
/// evaluated between phi = 0 and phi = pi and divided by pi.
double gf_antiderivative_route(double x);

/// 1 / sqrt(1 - 2x - 3x^2)
double gf_closed_form(double x);

/// I(lambda) = int_0^pi cos(lambda phi) dphi / (1 - 2b cos phi + b^2).
QuadratureResult b_integral(double b, int lambda, double tol,
                            const QuadratureOptions& options = {});

/// pi b^lambda / (1 - b^2)
double b_integral_closed_form(double b, int lambda);

/// b_integral(b, lambda) against the closed form, within tol. Requires
/// 0 <= b < 1 and lambda >= 0.
bool b_identity_check(double b, int lambda, double tol,
                      const QuadratureOptions& options = {});

/// Computes I(0..max_lambda) by quadrature and checks
///   (1 + b^2) I(0) - 2b I(1) = pi,
///   I(l+1) = ((1 + b^2)/b) I(l) - I(l-1)   for 1 <= l < max_lambda,
/// and I(l) = pi b^l / (1 - b^2), all within tol. Requires 0 < b < 1.
bool b_reduction_chain_check(double b, int max_lambda, double tol,
                             const QuadratureOptions& options = {});

/// Decimal conversion of an exact integer to the nearest double.
double to_double(const ExactInteger& value);

}  // namespace trinomial
