#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "cli.hpp"

using namespace mf24::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Expand) {
  EXPECT_EQ(run({"expand", "theta:1,1,1,1", "--prec", "5"}).out,
            "1 + 8*q + 24*q^2 + 32*q^3 + 24*q^4 + O(q^5)\n");
  EXPECT_EQ(run({"expand", "L:2", "--prec", "2"}).out, "1/24 + q + O(q^2)\n");
  EXPECT_EQ(run({"expand", "2:1,4:1,6:1,12:1", "--prec", "6"}).out,
            "q - q^3 - 2*q^5 + O(q^6)\n");
  EXPECT_EQ(run({"expand", "E:1,8@3", "--prec", "7"}).out, "q^3 + 2*q^6 + O(q^7)\n");
}

TEST(Cli, UsageErrors) {
  const CliRun r = run({"expand", "1:1"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"expand", "2:1,4:x"}).code, kUsage);
  EXPECT_EQ(run({"repnum", "--form", "5,5,5,5", "--n", "3", "--method", "formula"}).code, kUsage);
  EXPECT_EQ(run({"tables", "9.9"}).code, kUsage);
  EXPECT_EQ(run({"enumerate", "--character", "5"}).code, kUsage);
  EXPECT_EQ(run({"nonsense"}).code, kUsage);
}

TEST(Cli, Solve) {
  const CliRun r = run({"solve", "theta:1,1,1,1"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("space chi1, verified to q^60"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("  L_4 = 8\n"), std::string::npos) << r.out;
}

TEST(Cli, Tables) {
  CliRun r = run({"tables", "3.2"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "table 3.2: 8/8 rows match\n");
  r = run({"tables", "5.1"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "table 5.1: 32/32 rows match\n");
}

TEST(Cli, RepnumRange) {
  const CliRun r = run({"repnum", "--form", "1,1,1,1", "--range", "1..10", "--method", "both"});
  EXPECT_EQ(r.code, kSuccess);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "n,formula,brute_force,match");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_TRUE(line.ends_with(",yes")) << line;
  }
  EXPECT_EQ(rows, 10);
  EXPECT_EQ(run({"repnum", "--form", "1,2,3,6", "--n", "100"}).out,
            "N(1,2,3,6; 100): formula=186 brute_force=186 match=yes\n");
}

TEST(Cli, Enumerate) {
  const CliRun r = run({"enumerate", "--character", "8"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 213);
  EXPECT_TRUE(r.out.ends_with("# 212 eta quotients in chi8\n")) << r.out.substr(r.out.size() - 80);
  const CliRun e = run({"enumerate", "--character", "24", "--eisenstein-only", "--new-only"});
  EXPECT_TRUE(e.out.ends_with("# 8 eta quotients in chi24\n"));
}

TEST(Cli, Identities) {
  const CliRun r = run({"identities", "--prec", "40"});
  EXPECT_EQ(r.code, kSuccess) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}
