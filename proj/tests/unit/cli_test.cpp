#include "trinomial_cli/commands.hpp"

#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

namespace trinomial::cli {
namespace {

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Strips the method-dependent parts of a rendering so the numbers can be
// compared across methods.
std::string numeric_column(const std::string& table) {
  std::istringstream in(table);
  std::string line;
  std::string column;
  while (std::getline(in, line)) column += line.substr(line.find(' ') + 1) + "\n";
  return column;
}

TEST(CliTest, Row) {
  const auto r = invoke({"row", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 4 10 16 19 16 10 4 1\n");

  const auto csv = invoke({"--format", "csv", "row", "--n", "1"});
  EXPECT_EQ(csv.out, "n,k,coefficient\n1,0,1\n1,1,1\n1,2,1\n");
}

TEST(CliTest, CentralJsonRoundTrip) {
  const auto r = invoke({"--format", "json", "central", "--max-n", "40", "--method", "series"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["lambda"], 0);
  EXPECT_EQ(j["method"], "series");
  ASSERT_EQ(j["values"].size(), 41u);
  EXPECT_EQ(j["values"][12], "73789");
  EXPECT_EQ(j["values"][40], "934837217271732457");  // beyond 2^53
}

TEST(CliTest, MethodsPrintIdenticalNumbers) {
  const auto reference = invoke({"diag", "--lambda", "3", "--max-n", "30", "--method", "oracle"});
  ASSERT_EQ(reference.code, 0);
  for (const char* m : {"sum1", "sum2", "sum3", "ratio", "recurrence", "delta", "series"}) {
    const auto r = invoke({"diag", "--lambda", "3", "--max-n", "30", "--method", m});
    ASSERT_EQ(r.code, 0) << m;
    EXPECT_EQ(numeric_column(r.out), numeric_column(reference.out)) << m;
    EXPECT_EQ(r.out, reference.out) << m;
  }
}

TEST(CliTest, CsvSequence) {
  const auto r = invoke({"--format", "csv", "diag", "--lambda", "1", "--max-n", "3"});
  EXPECT_EQ(r.out, "n,lambda,value\n0,1,0\n1,1,1\n2,1,2\n3,1,6\n");
}

TEST(CliTest, GeneratingFunction) {
  auto r = invoke({"gf", "--lambda", "1", "--order", "4", "--poly"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x^2 + 2x^3 + 6x^4\n");
  r = invoke({"--format", "csv", "gf", "--order", "2"});
  EXPECT_EQ(r.out, "degree,numerator,denominator\n0,1,1\n1,1,1\n2,3,1\n");
}

TEST(CliTest, Quadrature) {
  auto r = invoke({"--format", "json", "quad", "--n", "6", "--lambda", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["value"].get<double>(), 141.0, 1e-6);
  EXPECT_EQ(j["converged"], true);

  r = invoke({"--format", "csv", "quad", "--x", "0.25"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("quantity,value,reference,abs_error_estimate,panels,converged,antiderivative\n", 0), 0u);

  r = invoke({"--max-panels", "32", "--tol", "1e-13", "quad", "--n", "20", "--lambda", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("did not converge"), std::string::npos);
}

TEST(CliTest, Identity) {
  const auto r = invoke({"identity", "--b", "0.9", "--lambda", "5", "--max-lambda", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(CliTest, Crosscheck) {
  const auto r = invoke({"crosscheck", "--max-n", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "OK\n");
}

TEST(CliTest, Bench) {
  const auto r = invoke({"--format", "csv", "bench", "--max-n", "10", "--repeat", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("method,max_n,ns_per_value\n", 0), 0u);
}

TEST(CliTest, BadInputExitsTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"row"}).code, 2);
  EXPECT_EQ(invoke({"row", "--n", "-3"}).code, 2);
  EXPECT_EQ(invoke({"--format", "xml", "row", "--n", "2"}).code, 2);
  EXPECT_EQ(invoke({"central", "--method", "stepwise"}).code, 2);
  EXPECT_EQ(invoke({"quad", "--x", "0.5"}).code, 2);
  EXPECT_EQ(invoke({"identity", "--b", "1.5"}).code, 2);
  EXPECT_EQ(invoke({"row", "--n", "abc"}).code, 2);
}

}  // namespace
}  // namespace trinomial::cli
