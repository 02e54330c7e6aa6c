#pragma once

// Rendering of CLI results as plain tables, CSV or JSON.
//
// JSON carries every exact integer or rational as a decimal string so
// consumers with 53-bit numbers lose nothing.

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "trinomial/exact.hpp"
#include "trinomial/quadrature.hpp"
#include "trinomial/sequence.hpp"
#include "trinomial/series.hpp"

namespace trinomial::cli {

enum class Format { table, csv, json };

std::optional<Format> parse_format(std::string_view name);

std::string format_row(int n, std::span<const ExactInteger> row, Format format);

std::string format_sequence(const DiagonalSequence& seq, Format format);

std::string format_series(const PowerSeries& series, int lambda, Format format);

struct QuadratureReport {
  std::string label;       // e.g. "z(6,0)" or "P(0.25)"
  QuadratureResult result;
  double reference = 0.0;  // exact or closed-form value
  std::optional<double> antiderivative;
};

std::string format_quadrature(const QuadratureReport& report, Format format);

struct BenchLine {
  Method method;
  double ns_per_value;
};

std::string format_bench(std::span<const BenchLine> lines, int max_n, Format format);

}  // namespace trinomial::cli
