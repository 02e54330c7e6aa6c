#include "trinomial_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "trinomial/methods.hpp"
#include "trinomial/quadrature.hpp"
#include "trinomial/series.hpp"
#include "trinomial/triangle.hpp"
#include "trinomial_cli/output.hpp"

namespace trinomial::cli {
namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

struct Settings {
  std::string format = "table";
  double tol = 1e-9;
  std::size_t max_panels = std::size_t{1} << 20;

  int n = 0;
  int lambda = 0;
  int max_n = 12;
  int max_lambda = -1;
  int order = 12;
  int repeat = 3;
  std::string method = "recurrence";
  std::optional<double> x;
  double b = 0.5;
  bool poly = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Format format_of(const Settings& s) {
  auto f = parse_format(s.format);
  if (!f) throw UsageError("unknown format '" + s.format + "' (table, csv, json)");
  return *f;
}

Method method_of(const Settings& s) {
  auto m = parse_method(s.method);
  if (!m) {
    throw UsageError("unknown method '" + s.method +
                     "' (oracle, sum1, sum2, sum3, ratio, recurrence, delta, series)");
  }
  return *m;
}

QuadratureOptions quadrature_options(const Settings& s) {
  QuadratureOptions opts;
  opts.max_panels = s.max_panels;
  return opts;
}

int cmd_row(const Settings& s, std::ostream& out) {
  if (s.n < 0) throw UsageError("--n must be >= 0");
  const auto tri = TrinomialTriangle::build(s.n);
  out << format_row(s.n, tri.row(s.n), format_of(s));
  return kOk;
}

int cmd_diag(const Settings& s, int lambda, std::ostream& out) {
  if (s.max_n < 0 || lambda < 0) throw UsageError("--max-n and --lambda must be >= 0");
  out << format_sequence(compute_diagonal(method_of(s), lambda, s.max_n), format_of(s));
  return kOk;
}

int cmd_crosscheck(const Settings& s, std::ostream& out) {
  if (s.max_n < 0) throw UsageError("--max-n must be >= 0");
  if (auto m = crosscheck(s.max_n)) {
    out << "MISMATCH n=" << m->n << " lambda=" << m->lambda
        << " method=" << to_string(m->method) << " expected=" << m->expected
        << " actual=" << m->actual << '\n';
    return kCheckFailed;
  }
  out << "OK\n";
  return kOk;
}

int cmd_gf(const Settings& s, std::ostream& out) {
  if (s.order < 0 || s.lambda < 0) throw UsageError("--order and --lambda must be >= 0");
  const auto series = gf_Z(s.lambda, s.order);
  if (s.poly) {
    out << to_polynomial_string(series) << '\n';
  } else {
    out << format_series(series, s.lambda, format_of(s));
  }
  return kOk;
}

int cmd_quad(const Settings& s, std::ostream& out, std::ostream& err) {
  QuadratureReport report;
  double scale = 1.0;
  if (s.x) {
    report.label = "P(" + std::to_string(*s.x) + ")";
    report.result = gf_by_integral(*s.x, s.tol, quadrature_options(s));
    report.reference = gf_closed_form(*s.x);
    report.antiderivative = gf_antiderivative_route(*s.x);
  } else {
    if (s.n < 0 || s.n > 30 || s.lambda < 0) {
      throw UsageError("quad needs 0 <= --n <= 30 and --lambda >= 0 (or --x)");
    }
    report.label = "z(" + std::to_string(s.n) + "," + std::to_string(s.lambda) + ")";
    report.result = z_by_integral(s.n, s.lambda, s.tol, quadrature_options(s));
    report.reference =
        to_double(TrinomialTriangle::build(s.n).diagonal(s.n, s.lambda));
    scale = std::max(1.0, std::abs(report.reference));
  }
  out << format_quadrature(report, format_of(s));

  if (!report.result.converged) {
    err << "quadrature did not converge within " << s.max_panels << " panels\n";
    return kCheckFailed;
  }
  if (std::abs(report.result.value - report.reference) > s.tol * scale) {
    err << "quadrature value disagrees with reference beyond tolerance\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_identity(const Settings& s, std::ostream& out) {
  if (!(s.b >= 0.0 && s.b < 1.0) || s.lambda < 0) {
    throw UsageError("identity needs 0 <= --b < 1 and --lambda >= 0");
  }
  const auto opts = quadrature_options(s);
  const auto integral = b_integral(s.b, s.lambda, s.tol, opts);
  const bool single = b_identity_check(s.b, s.lambda, s.tol, opts);
  out << "integral  b=" << s.b << " lambda=" << s.lambda << "  quadrature="
      << std::setprecision(15) << integral.value
      << "  closed=" << b_integral_closed_form(s.b, s.lambda) << "  "
      << (single ? "PASS" : "FAIL") << '\n';

  bool chain = true;
  const int max_lambda = s.max_lambda >= 0 ? s.max_lambda : std::max(1, s.lambda);
  if (s.b > 0.0) {
    chain = b_reduction_chain_check(s.b, max_lambda, s.tol, opts);
    out << "reduction b=" << s.b << " lambda=0.." << max_lambda << "  "
        << (chain ? "PASS" : "FAIL") << '\n';
  } else {
    out << "reduction skipped (needs b > 0)\n";
  }
  return single && chain ? kOk : kCheckFailed;
}

int cmd_bench(const Settings& s, std::ostream& out) {
  if (s.max_n < 0 || s.repeat < 1) throw UsageError("bench needs --max-n >= 0, --repeat >= 1");
  std::vector<BenchLine> lines;
  for (Method method : selectable_methods()) {
    const auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < s.repeat; ++r) {
      auto seq = compute_diagonal(method, 0, s.max_n);
      if (seq.values.empty()) return kCheckFailed;
    }
    const auto elapsed = std::chrono::duration<double, std::nano>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    lines.push_back({method, elapsed / (s.repeat * (s.max_n + 1.0))});
  }
  out << format_bench(lines, s.max_n, format_of(s));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Coefficients of (1 + x + x^2)^n by several independent methods"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output format: table, csv or json")
      ->capture_default_str();
  app.add_option("--tol", s.tol, "Quadrature tolerance")->capture_default_str();
  app.add_option("--max-panels", s.max_panels, "Quadrature panel budget")
      ->capture_default_str();

  auto* row = app.add_subcommand("row", "Row n of the coefficient triangle");
  row->add_option("--n", s.n, "Exponent")->required();

  auto* central = app.add_subcommand("central", "Central coefficients p(0..max-n)");
  central->add_option("--max-n", s.max_n)->capture_default_str();
  central->add_option("--method", s.method)->capture_default_str();

  auto* diag = app.add_subcommand("diag", "Diagonal z(n, lambda) for n = 0..max-n");
  diag->add_option("--lambda", s.lambda)->required();
  diag->add_option("--max-n", s.max_n)->capture_default_str();
  diag->add_option("--method", s.method)->capture_default_str();

  auto* check = app.add_subcommand("crosscheck", "Compare all methods with the oracle");
  check->add_option("--max-n", s.max_n)->capture_default_str();

  auto* gf = app.add_subcommand("gf", "Coefficients of P (lambda 0) or Z_lambda");
  gf->add_option("--lambda", s.lambda)->capture_default_str();
  gf->add_option("--order", s.order)->capture_default_str();
  gf->add_flag("--poly", s.poly, "Print as a polynomial string");

  auto* quad = app.add_subcommand("quad", "Integral representation of z(n,lambda) or P(x)");
  quad->add_option("--n", s.n);
  quad->add_option("--lambda", s.lambda);
  quad->add_option("--x", s.x, "Evaluate P(x) by its integral instead");

  auto* identity = app.add_subcommand("identity", "Check int cos(l phi)/(1 - 2b cos phi + b^2)");
  identity->add_option("--b", s.b)->capture_default_str();
  identity->add_option("--lambda", s.lambda)->capture_default_str();
  identity->add_option("--max-lambda", s.max_lambda, "Depth of the reduction chain");

  auto* bench = app.add_subcommand("bench", "Time each method producing p(0..max-n)");
  bench->add_option("--max-n", s.max_n)->capture_default_str();
  bench->add_option("--repeat", s.repeat)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (*row) return cmd_row(s, out);
    if (*central) return cmd_diag(s, 0, out);
    if (*diag) return cmd_diag(s, s.lambda, out);
    if (*check) return cmd_crosscheck(s, out);
    if (*gf) return cmd_gf(s, out);
    if (*quad) return cmd_quad(s, out, err);
    if (*identity) return cmd_identity(s, out);
    if (*bench) return cmd_bench(s, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kBadInput;
}

}  // namespace trinomial::cli
