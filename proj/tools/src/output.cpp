#include "trinomial_cli/output.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace trinomial::cli {
namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump() + "\n"; }

std::string fixed(double v, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << std::fixed << v;
  return os.str();
}

std::string scientific(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

std::string format_row(int n, std::span<const ExactInteger> row, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::table:
      for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
      os << '\n';
      return os.str();
    case Format::csv:
      os << "n,k,coefficient\n";
      for (std::size_t k = 0; k < row.size(); ++k) {
        os << n << ',' << k << ',' << row[k] << '\n';
      }
      return os.str();
    case Format::json: {
      json coeffs = json::array();
      for (const auto& c : row) coeffs.push_back(c.to_string());
      return dump({{"n", n}, {"coefficients", coeffs}});
    }
  }
  return {};
}

std::string format_sequence(const DiagonalSequence& seq, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::table:
      for (int n = 0; n <= seq.max_n(); ++n) os << n << ' ' << seq.values[n] << '\n';
      return os.str();
    case Format::csv:
      os << "n,lambda,value\n";
      for (int n = 0; n <= seq.max_n(); ++n) {
        os << n << ',' << seq.lambda << ',' << seq.values[n] << '\n';
      }
      return os.str();
    case Format::json: {
      json values = json::array();
      for (const auto& v : seq.values) values.push_back(v.to_string());
      return dump({{"lambda", seq.lambda},
                   {"method", std::string(to_string(seq.method))},
                   {"values", values}});
    }
  }
  return {};
}

std::string format_series(const PowerSeries& series, int lambda, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::table:
      for (int k = 0; k <= series.order(); ++k) os << k << ' ' << series[k] << '\n';
      return os.str();
    case Format::csv:
      return to_csv(series);
    case Format::json: {
      json coeffs = json::array();
      for (const auto& c : series.coeffs()) coeffs.push_back(c.to_string());
      return dump({{"lambda", lambda}, {"order", series.order()}, {"coefficients", coeffs}});
    }
  }
  return {};
}

std::string format_quadrature(const QuadratureReport& report, Format format) {
  const auto& r = report.result;
  std::ostringstream os;
  switch (format) {
    case Format::table:
      os << "quantity   " << report.label << '\n'
         << "value      " << fixed(r.value) << '\n'
         << "reference  " << fixed(report.reference) << '\n'
         << "abs_error  " << scientific(r.abs_error_estimate) << '\n'
         << "panels     " << r.panels << '\n'
         << "converged  " << (r.converged ? "true" : "false") << '\n';
      if (report.antiderivative) {
        os << "antideriv  " << fixed(*report.antiderivative) << '\n';
      }
      return os.str();
    case Format::csv:
      os << "quantity,value,reference,abs_error_estimate,panels,converged";
      if (report.antiderivative) os << ",antiderivative";
      os << '\n'
         << report.label << ',' << fixed(r.value, 15) << ',' << fixed(report.reference, 15)
         << ',' << scientific(r.abs_error_estimate) << ',' << r.panels << ','
         << (r.converged ? "true" : "false");
      if (report.antiderivative) os << ',' << fixed(*report.antiderivative, 15);
      os << '\n';
      return os.str();
    case Format::json: {
      json j{{"quantity", report.label},
             {"value", r.value},
             {"reference", report.reference},
             {"abs_error_estimate", r.abs_error_estimate},
             {"panels", r.panels},
             {"converged", r.converged}};
      if (report.antiderivative) j["antiderivative"] = *report.antiderivative;
      return dump(j);
    }
  }
  return {};
}

std::string format_bench(std::span<const BenchLine> lines, int max_n, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::table:
      for (const auto& l : lines) {
        os << std::left << std::setw(12) << to_string(l.method) << std::right
           << std::setw(14) << fixed(l.ns_per_value, 1) << " ns/value\n";
      }
      return os.str();
    case Format::csv:
      os << "method,max_n,ns_per_value\n";
      for (const auto& l : lines) {
        os << to_string(l.method) << ',' << max_n << ',' << fixed(l.ns_per_value, 1) << '\n';
      }
      return os.str();
    case Format::json: {
      json arr = json::array();
      for (const auto& l : lines) {
        arr.push_back({{"method", std::string(to_string(l.method))},
                       {"ns_per_value", l.ns_per_value}});
      }
      return dump({{"max_n", max_n}, {"results", arr}});
    }
  }
  return {};
}

}  // namespace trinomial::cli
