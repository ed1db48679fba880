#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "copermanent/graph.hpp"
#include "copermanent/survey.hpp"
#include "gtest/gtest.h"

namespace copermanent::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("copermanent-cli-" + name);
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

TEST(Poly, PrintsPolynomial) {
  EXPECT_EQ(run_args({"poly", "A_", "--lambda", "unicode"}).out, "x^2+λ^2\n");
  EXPECT_EQ(run_args({"--lambda", "ascii", "poly", "A_"}).out, "x^2+y^2\n");
  EXPECT_EQ(run_args({"poly", "?"}).out, "1\n");
  EXPECT_EQ(run_args({"poly", "@"}).out, "x\n");
}

TEST(Poly, Evaluates) {
  const Result r = run_args({"poly", "A_", "--eval", "1,1", "--lambda", "ascii"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "x^2+y^2\n2\n");
  EXPECT_EQ(run_args({"poly", "A_", "--eval", "3,2"}).out.substr(8), "13\n");
  EXPECT_EQ(run_args({"poly", "A_", "--eval", "-1,-1"}).out.substr(8), "2\n");
}

TEST(Poly, Json) {
  const Result r = run_args({"poly", "A_", "--format", "json", "--eval", "3,2"});
  EXPECT_EQ(r.out,
            "{\"order\":2,\"polynomial\":\"x^2+y^2\",\"coefficients\":[[0,2,1],[2,0,1]],"
            "\"value\":\"13\"}\n");
}

TEST(Poly, ExitCodes) {
  EXPECT_EQ(run_args({"poly", "A`"}).code, kDataError);
  EXPECT_EQ(run_args({"poly", "C"}).code, kDataError);
  EXPECT_EQ(run_args({"poly", to_graph6(Graph(21))}).code, kCapacityError);
  EXPECT_EQ(run_args({"poly", "~?@?"}).code, kCapacityError);
  EXPECT_EQ(run_args({"poly", "A_", "--eval", "1"}).code, kUsageError);
  EXPECT_EQ(run_args({"poly", "A_", "--eval", "1,z"}).code, kUsageError);
  EXPECT_EQ(run_args({"poly"}).code, kUsageError);
  EXPECT_EQ(run_args({}).code, kUsageError);
  EXPECT_EQ(run_args({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(run_args({"--help"}).code, kSuccess);
}

TEST(Gen, WritesOneLinePerClass) {
  const Result four = run_args({"gen", "--n", "4"});
  EXPECT_EQ(four.code, kSuccess);
  EXPECT_EQ(count_lines(four.out), 11U);
  EXPECT_NE(four.err.find("11"), std::string::npos);
  EXPECT_EQ(run_args({"gen", "--n", "0"}).out, "?\n");

  const auto path = temp_file("gen5.g6");
  EXPECT_EQ(run_args({"gen", "--n", "5", "--output", path.string()}).code, kSuccess);
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  EXPECT_EQ(count_lines(contents.str()), 34U);
  std::filesystem::remove(path);
}

TEST(Gen, RefusesLargeOrders) {
  const Result r = run_args({"gen", "--n", "9"});
  EXPECT_EQ(r.code, kCapacityError);
  EXPECT_NE(r.err.find("--input"), std::string::npos);
  EXPECT_EQ(run_args({"gen", "--n", "-1"}).code, kUsageError);
}

TEST(Survey, Csv) {
  const Result r = run_args({"survey", "--n", "5", "--csv", "--jobs", "2"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "5,34,34,0,0.000000,1\n");
  EXPECT_NE(r.err.find("frac. with mate"), std::string::npos);
}

TEST(Survey, TextTableByDefault) {
  const Result r = run_args({"survey", "--n", "3"});
  EXPECT_EQ(r.out,
            "n  #graphs  #perm. pols  # with coperm. mate  frac. with mate  max. family\n"
            "3        4            4                    0         0.000000            1\n");
}

TEST(Survey, InputFileAndReport) {
  const auto g6 = temp_file("in6.g6");
  const auto report = temp_file("in6.json");
  ASSERT_EQ(run_args({"gen", "--n", "6", "--output", g6.string()}).code, kSuccess);
  const Result r = run_args({"survey", "--input", g6.string(), "--order", "6", "--csv",
                             "--report", report.string()});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "6,156,156,0,0.000000,1\n");
  std::ifstream in(report);
  std::stringstream json;
  json << in.rdbuf();
  const SurveyReport parsed = parse_report_json(json.str());
  EXPECT_EQ(parsed.num_graphs, 156U);
  EXPECT_EQ(parsed.order, 6);
  std::filesystem::remove(g6);
  std::filesystem::remove(report);
}

TEST(Survey, Checkpoint) {
  const auto ckpt = temp_file("n5.ckpt");
  std::filesystem::remove(ckpt);
  EXPECT_EQ(run_args({"survey", "--n", "5", "--csv", "--checkpoint", ckpt.string()}).out,
            "5,34,34,0,0.000000,1\n");
  // The second run finds every record in the checkpoint.
  EXPECT_EQ(run_args({"survey", "--n", "5", "--csv", "--checkpoint", ckpt.string()}).out,
            "5,34,34,0,0.000000,1\n");
  std::ifstream in(ckpt);
  std::stringstream contents;
  contents << in.rdbuf();
  EXPECT_EQ(count_lines(contents.str()), 34U);
  std::filesystem::remove(ckpt);
}

TEST(Survey, SourceErrors) {
  EXPECT_EQ(run_args({"survey"}).code, kUsageError);
  EXPECT_EQ(run_args({"survey", "--n", "3", "--input", "x.g6", "--order", "3"}).code, kUsageError);
  EXPECT_EQ(run_args({"survey", "--input", "x.g6"}).code, kUsageError);
  EXPECT_EQ(run_args({"survey", "--n", "9"}).code, kCapacityError);
  EXPECT_EQ(run_args({"survey", "--n", "3", "--jobs", "0"}).code, kUsageError);
  EXPECT_EQ(run_args({"survey", "--input", "/nonexistent/file.g6", "--order", "3"}).code,
            kDataError);

  const auto mixed = temp_file("mixed.g6");
  {
    std::ofstream out(mixed);
    out << "Bg\nC~\n";
  }
  const Result r = run_args({"survey", "--input", mixed.string(), "--order", "3"});
  EXPECT_EQ(r.code, kDataError);
  EXPECT_NE(r.err.find("OrderMismatch"), std::string::npos);

  {
    std::ofstream out(mixed);
    out << "Bg\nB`\n";
  }
  const Result bad = run_args({"survey", "--input", mixed.string(), "--order", "3"});
  EXPECT_EQ(bad.code, kDataError);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  std::filesystem::remove(mixed);
}

TEST(Mates, NoneBelowEight) {
  const Result r = run_args({"mates", "--n", "7"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "no copermanent families\n");
  EXPECT_EQ(run_args({"mates", "--n", "6", "--format", "json"}).out, "[]\n");
}

TEST(Mates, EightVertexFamilies) {
  const Result r = run_args({"mates", "--n", "8", "--lambda", "unicode"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("family 1 (2 members)"), std::string::npos);
  EXPECT_NE(r.out.find("family 2 (2 members)"), std::string::npos);
  EXPECT_EQ(r.out.find("family 3"), std::string::npos);
  EXPECT_NE(r.out.find("4353λ^4"), std::string::npos);
  EXPECT_NE(r.out.find("4033λ^4"), std::string::npos);
}

}  // namespace
}  // namespace copermanent::cli
