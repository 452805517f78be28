#include "segre/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = segre::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, BettiM2) {
  const Outcome r = run({"betti", "1,1,1"});
  EXPECT_EQ(r.code, segre::cli::kExitOk);
  EXPECT_EQ(r.out, "       0 1  2 3 4\n"
                   "total: 1 9 16 9 1\n"
                   "    0: 1 .  . . .\n"
                   "    1: . 9 16 9 .\n"
                   "    2: . .  . . 1\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, BettiJson) {
  const Outcome r = run({"betti", "1,1", "--format", "json", "--rank-backend", "exact"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"a\":[1,1],\"dims\":[[0,0,1],[1,0,0],[0,1,0],[1,1,1]]}\n");
}

TEST(Cli, NormalizationNotice) {
  const Outcome r = run({"betti", "1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.err, "note: using normalized dimension vector 2,1\n");
  EXPECT_EQ(r.out, run({"betti", "2,1"}).out);
}

TEST(Cli, OutputIndependentOfThreads) {
  EXPECT_EQ(run({"betti", "2,1,1", "--threads", "1"}).out, run({"betti", "2,1,1", "--threads", "4"}).out);
}

TEST(Cli, PFunctionRows) {
  const Outcome r = run({"pfunc", "2,2,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "  q: 0 1 2  3 4\n"
                   "  P: 0 2 6 14 ∞\n"
                   "P-q: 0 1 4 11 ∞\n");
  const Outcome j = run({"pfunc", "2,2,1", "--format", "json", "--qmax", "4"});
  EXPECT_NE(j.out.find("{\"q\":4,\"P\":null,\"P-q\":null}"), std::string::npos);
  EXPECT_NE(j.out.find("{\"q\":3,\"P\":14,\"P-q\":11}"), std::string::npos);
}

TEST(Cli, Straighten) {
  const Outcome r = run({"straighten", "--dims", "1,1,1,1", "0,0,0,1 0,1,0,1 1,1,0,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "+1 · z[0,0,0,1]·z[0,0,1,1]·z[0,1,1,1]\n");
}

TEST(Cli, Basis) {
  const Outcome r = run({"basis", "1,1", "--degree", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("degree 1: 1"), std::string::npos);
  EXPECT_NE(r.out.find("z[0,1]"), std::string::npos);
}

TEST(Cli, Bott) {
  EXPECT_EQ(run({"bott", "--m", "2", "--d", "-2"}).out, "H^1 = S_(-1,-1), dim = 1\n");
  EXPECT_EQ(run({"bott", "--m", "3", "--d", "-1", "--alpha", "0,0"}).out, "SINGULAR\n");
  EXPECT_EQ(run({"bott", "--m", "2", "--d", "3"}).out, "H^0 = S_(3,0), dim = 4\n");
  EXPECT_EQ(run({"bott", "--m", "3", "--d", "0", "--alpha", "0,1"}).code, segre::cli::kExitUsage);
}

TEST(Cli, Witness) {
  const Outcome r = run({"witness", "2,2,1", "--p", "8", "--q", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("is_cycle: true\n"), std::string::npos);
  EXPECT_NE(r.out.find("is_boundary: false\n"), std::string::npos);
  EXPECT_NE(r.out.find("kpq_dim: 8\n"), std::string::npos);
  EXPECT_EQ(run({"witness", "1,1,1,1", "--p", "11", "--q", "2"}).code, segre::cli::kExitUsage);
  EXPECT_EQ(run({"witness", "2,1,1", "--p", "3", "--q", "2"}).code, segre::cli::kExitUsage);
}

TEST(Cli, RefusalAndUsageExitCodes) {
  const Outcome refused = run({"betti", "2,2,2"});
  EXPECT_EQ(refused.code, segre::cli::kExitRefused);
  EXPECT_NE(refused.err.find("refused:"), std::string::npos);
  EXPECT_TRUE(refused.out.empty());
  EXPECT_EQ(run({"betti", "2,1,1", "--budget", "10"}).code, segre::cli::kExitRefused);
  EXPECT_EQ(run({}).code, segre::cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, segre::cli::kExitUsage);
  EXPECT_EQ(run({"betti", "2,x"}).code, segre::cli::kExitUsage);
  EXPECT_EQ(run({"betti", "0,0"}).code, segre::cli::kExitUsage);
  EXPECT_EQ(run({"betti", "1,1", "--format", "xml"}).code, segre::cli::kExitUsage);
  EXPECT_EQ(run({"betti", "1,1", "--rank-backend", "float"}).code, segre::cli::kExitUsage);
  const Outcome bad = run({"betti", "1,1", "--bogus"});
  EXPECT_EQ(bad.code, segre::cli::kExitUsage);
  EXPECT_FALSE(bad.err.empty());
}
