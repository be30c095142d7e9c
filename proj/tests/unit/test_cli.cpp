#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sigmaconic_cli/cli.hpp"

namespace cli = sigmaconic::cli;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sigmaconic-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& s) {
  std::vector<json> out;
  std::istringstream in(s);
  std::string l;
  while (std::getline(in, l))
    if (!l.empty()) out.push_back(json::parse(l));
  return out;
}

}  // namespace

TEST(Cli, ClassifyIdentityPG24) {
  const auto r = run({"classify", "--p", "2", "--n", "2", "--m", "1", "--matrix", "1", "0", "0", "0", "1", "0", "0",
                      "0", "1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0]["type"], "header");
  EXPECT_EQ(ls[0]["modulus"], json::array({1, 1, 1}));
  EXPECT_EQ(ls[1]["kind"], "KestenbandNondegenerate");
  EXPECT_EQ(ls[1]["cardinality"], 9);
}

TEST(Cli, ClassifyRankOne) {
  const auto r = run({"classify", "--p", "2", "--n", "3", "--matrix", "0", "0", "1", "0", "0", "0", "0", "0", "0"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(lines(r.out).back()["kind"], "UnionTwoLines");
}

TEST(Cli, ClassifyLineForm) {
  const auto r = run({"classify", "--p", "3", "--n", "2", "--matrix", "0", "1", "2", "0"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(lines(r.out).back()["kind"], "Subline");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"classify", "--p", "2", "--n", "4", "--m", "2", "--matrix", "1", "0", "0", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"classify", "--p", "4", "--n", "3", "--matrix", "1", "0", "0", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"classify", "--p", "2", "--n", "3", "--matrix", "1", "0", "9", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"census", "--p", "2", "--n", "3", "--mode", "random", "--count", "5"}).code, cli::kUsage);
  EXPECT_EQ(run({"mrd", "--p", "3", "--n", "3", "--T", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"mrd", "--p", "2", "--n", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kUsage);
}

TEST(Cli, ResourceCap) {
  const auto r = run({"census", "--p", "3", "--n", "3"});
  EXPECT_EQ(r.code, cli::kResourceCap);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("random"), std::string::npos);
}

TEST(Cli, CensusDiagonalPG24) {
  const auto r = run({"census", "--p", "2", "--n", "2", "--shape", "diagonal", "--records", "all"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 1u + 9 + 1);
  EXPECT_EQ(ls.back()["type"], "summary");
  EXPECT_EQ(ls.back()["cardinality"], json({{"3", 6}, {"9", 3}}));
}

TEST(Cli, RandomCensusIsByteDeterministic) {
  const std::vector<std::string> args{"census", "--p",     "3",         "--n",       "3",   "--mode", "random",
                                      "--count", "200",    "--seed",    "99",        "--records", "all"};
  const auto a = run(args);
  auto b_args = args;
  b_args.insert(b_args.end(), {"--threads", "2"});
  const auto b = run(b_args);
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  ASSERT_EQ(b.code, cli::kOk) << b.err;
  EXPECT_EQ(a.out, run(args).out);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CsvFormat) {
  const auto r = run({"census", "--p", "2", "--n", "2", "--shape", "diagonal", "--format", "csv"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out.rfind("section,key,value\n", 0), 0u);
  EXPECT_NE(r.out.find("summary.cardinality,3,6"), std::string::npos);
}

TEST(Cli, MrdAndCodeFile) {
  const auto path = std::filesystem::temp_directory_path() / "sigmaconic_cli_code.txt";
  const auto r = run({"mrd", "--p", "3", "--n", "3", "--T", "1", "2", "--code-out", path.string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto res = lines(r.out).back();
  EXPECT_EQ(res["exterior"], true);
  EXPECT_EQ(res["exterior_size"], 28);
  EXPECT_EQ(res["code_size"], 729);
  EXPECT_EQ(res["min_distance"], 2);
  EXPECT_EQ(res["singleton_bound"], 729);
  // T = F_3^* swaps out every component: X is the line x2 = 0 and the code is linear
  EXPECT_EQ(res["nonlinear"], false);
  std::ifstream in(path);
  std::string l;
  std::size_t n = 0;
  while (std::getline(in, l))
    if (!l.empty() && l[0] != '#') ++n;
  EXPECT_EQ(n, 729u);
  std::filesystem::remove(path);
}

TEST(Cli, MrdNonlinearForProperSubset) {
  const auto r = run({"mrd", "--p", "3", "--n", "3", "--T", "1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(lines(r.out).back()["nonlinear"], true);
}

TEST(Cli, SteinerCheckSingle) {
  const auto r = run({"steiner-check", "--p", "2", "--n", "3", "--matrix", "0", "4", "1", "0", "6", "0", "0", "0", "0"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(lines(r.out).back()["equal"], true);
}
