#include "trinomial/methods.hpp"

#include <array>

#include "trinomial/diagonal_sums.hpp"
#include "trinomial/differences.hpp"
#include "trinomial/recurrences.hpp"
#include "trinomial/series.hpp"
#include "trinomial/triangle.hpp"

namespace trinomial {
namespace {

constexpr std::array kNames{
    std::pair{Method::oracle, std::string_view("oracle")},
    std::pair{Method::sum1, std::string_view("sum1")},
    std::pair{Method::sum2, std::string_view("sum2")},
    std::pair{Method::sum3, std::string_view("sum3")},
    std::pair{Method::ratio, std::string_view("ratio")},
    std::pair{Method::recurrence, std::string_view("recurrence")},
    std::pair{Method::delta, std::string_view("delta")},
    std::pair{Method::series, std::string_view("series")},
    std::pair{Method::stepwise, std::string_view("stepwise")},
};

template <typename F>
DiagonalSequence pointwise(Method method, int lambda, int max_n, F&& z) {
  DiagonalSequence seq{lambda, {}, method};
  seq.values.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) seq.values.push_back(z(n));
  return seq;
}

}  // namespace

std::string_view to_string(Method method) {
  for (const auto& [m, name] : kNames) {
    if (m == method) return name;
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (const auto& [m, n] : kNames) {
    if (n == name && m != Method::stepwise) return m;
  }
  return std::nullopt;
}

const std::vector<Method>& selectable_methods() {
  static const std::vector<Method> methods{
      Method::oracle, Method::sum1,       Method::sum2,  Method::sum3,
      Method::ratio,  Method::recurrence, Method::delta, Method::series};
  return methods;
}

DiagonalSequence compute_diagonal(Method method, int lambda, int max_n) {
  if (lambda < 0 || max_n < 0) {
    throw std::invalid_argument("compute_diagonal: negative lambda or max_n");
  }
  switch (method) {
    case Method::oracle: {
      const auto tri = TrinomialTriangle::build(max_n);
      return pointwise(method, lambda, max_n,
                       [&](int n) { return tri.diagonal(n, lambda); });
    }
    case Method::sum1:
      return pointwise(method, lambda, max_n,
                       [&](int n) { return z_sum_form1(n, lambda); });
    case Method::sum2:
      return pointwise(method, lambda, max_n,
                       [&](int n) { return z_sum_form2(n, lambda); });
    case Method::sum3:
      return pointwise(method, lambda, max_n,
                       [&](int n) { return z_sum_form3(n, lambda); });
    case Method::ratio:
      return pointwise(method, lambda, max_n,
                       [&](int n) { return z_term_ratio(n, lambda).sum; });
    case Method::recurrence:
      return lambda == 0 ? central_sequence(max_n) : general_sequence(lambda, max_n);
    case Method::delta: {
      auto p = central_sequence(max_n + lambda);
      if (lambda == 0) {
        p.method = method;
        return p;
      }
      const DifferenceTable table(p.values, lambda);
      return pointwise(method, lambda, max_n,
                       [&](int n) { return z_from_differences(table, lambda, n); });
    }
    case Method::series: {
      const auto z = gf_Z(lambda, max_n + lambda);
      return pointwise(method, lambda, max_n,
                       [&](int n) { return z[n + lambda].to_integer(); });
    }
    case Method::stepwise: {
      auto p = central_sequence(max_n + lambda);
      if (lambda == 0) {
        p.method = method;
        return p;
      }
      return stepwise_chain(p.values, lambda, max_n).back();
    }
  }
  throw std::invalid_argument("compute_diagonal: unknown method");
}

std::optional<Mismatch> crosscheck(int max_n) {
  if (max_n < 0) throw std::invalid_argument("crosscheck: negative max_n");
  const auto tri = TrinomialTriangle::build(max_n);
  for (int lambda = 0; lambda <= max_n; ++lambda) {
    for (Method method : selectable_methods()) {
      const auto seq = compute_diagonal(method, lambda, max_n);
      for (int n = 0; n <= max_n; ++n) {
        const auto expected = tri.diagonal(n, lambda);
        if (seq.values[n] != expected) {
          return Mismatch{n, lambda, method, expected.to_string(),
                          seq.values[n].to_string()};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace trinomial
