#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dyckstat/cli.hpp"
#include "dyckstat/dyck.hpp"

namespace dyckstat {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, TableText) {
  const auto r = run({"table", "--n", "5", "--stat", "up-residue", "--m", "3", "--residues", "0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "0:16 1:18 2:7 3:1\n");
}

TEST(Cli, TableJsonRoundTrips) {
  const auto r = run({"table", "--n", "6", "--stat", "up-residue", "--m", "3", "--residues", "0,2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto t = DistributionTable::from_json(r.out);
  EXPECT_EQ(t, distribution(6, Statistic::up_residue(ResidueSpec(3, {0, 2}))));
}

TEST(Cli, TableCsvAndCaps) {
  EXPECT_EQ(run({"table", "--n", "3", "--stat", "exterior-pairs", "--format", "csv"}).out, "k,count\n0,4\n1,1\n");
  EXPECT_EQ(run({"table", "--n", "15", "--stat", "height"}).code, kExitUsage);
  EXPECT_EQ(run({"table", "--n", "3", "--stat", "sary-pyramid-weight", "--s", "2"}).code, kExitOk);
}

TEST(Cli, MapOmega) {
  const auto r = run({"map", "--bijection", "omega", "--m", "2", "--path", "UUDD"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "UDUD\n");
}

TEST(Cli, MapPiWithTrace) {
  const auto r = run({"map", "--bijection", "pi", "--path", "UUDUDD", "--trace"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "UUUDDD\nCase3 UUDUDD\n");
  EXPECT_EQ(run({"map", "--bijection", "pi-inverse", "--path", "UUUDDD"}).out, "UUDUDD\n");
}

TEST(Cli, ParenthesesNeedFlag) {
  EXPECT_EQ(run({"render", "--path", "(())"}).code, kExitUsage);
  EXPECT_EQ(run({"--paren", "render", "--path", "(())"}).out, " /\\\n/  \\\n");
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"render", "--path", "UDDU"}).code, kExitUsage);
  EXPECT_EQ(run({"decompose", "--m", "3", "--path", "UD"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"map", "--bijection", "omega", "--path", "UD"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--check", "narayana", "--max-n", "20"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, TreeAndDecompose) {
  EXPECT_EQ(run({"tree", "--path", "UDUD"}).out, "*\n  o\n  o\n");
  EXPECT_EQ(run({"decompose", "--m", "2", "--path", "UUDD"}).out,
            R"({"m":2,"segments":[{"kind":"initial","line":1,"steps":"U"},)"
            R"({"kind":"above-block","line":1,"steps":"UD"},{"kind":"terminal","line":1,"steps":"D"}]})"
            "\n");
}

TEST(Cli, Series) {
  EXPECT_EQ(run({"series", "--m", "3", "--residues", "0", "--order", "3"}).out, "0: 1\n1: 1\n2: 2\n3: 4 1\n");
  EXPECT_EQ(run({"series", "--sary", "1", "--which", "E", "--order", "3"}).out, "0: 1\n1: 1\n2: 2\n3: 4 1\n");
  EXPECT_EQ(run({"series", "--sary", "2", "--which", "Q"}).code, kExitUsage);
}

TEST(Cli, VerifyPasses) {
  const auto r = run({"verify", "--check", "pi-transport", "--max-n", "9"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("pi-transport: PASS"), std::string::npos);
  EXPECT_EQ(run({"verify", "--check", "conjecture-2", "--m", "6"}).code, kExitOk);
}

TEST(Cli, OutputFileAndDeterminism) {
  const std::string path = ::testing::TempDir() + "dyckstat_cli_out.txt";
  const std::vector<std::string> args = {"--out", path, "table", "--n", "7", "--stat", "pyramid-weight"};
  EXPECT_EQ(run(args).code, kExitOk);
  std::ifstream in(path);
  std::stringstream first;
  first << in.rdbuf();
  EXPECT_EQ(first.str(), run({"table", "--n", "7", "--stat", "pyramid-weight"}).out);
  EXPECT_EQ(run(args).out, "");
  std::remove(path.c_str());
}

}  // namespace
}  // namespace dyckstat
