#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "minorcolor/claims.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(CLI_BIN) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp_path(const std::string& name) {
  return ::testing::TempDir() + name;
}

}  // namespace

TEST(CliHelp, ListsSubcommands) {
  RunResult r = run_cli("--help", true);
  EXPECT_EQ(r.code, 0);
  for (const char* sub : {"verify", "stats", "replay", "encode-dump"})
    EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
}

TEST(CliVerify, TinyRunWritesParseableJsonl) {
  std::string out = tmp_path("tiny.jsonl");
  RunResult r = run_cli("verify --n-max 2 --small-prime --out " + out, true);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("total="), std::string::npos);

  std::ifstream f(out);
  ASSERT_TRUE(f.good());
  std::string header;
  ASSERT_TRUE(std::getline(f, header));
  EXPECT_NE(header.find("minorcolor-claims/1"), std::string::npos);
  long lines = 0;
  for (std::string line; std::getline(f, line);) {
    minorcolor::ClaimReport rep = minorcolor::ClaimReport::from_jsonl(line);
    EXPECT_NE(rep.verdict, minorcolor::Verdict::Skip);
    ++lines;
  }
  EXPECT_GT(lines, 0);
}

TEST(CliVerify, ReportsTheKnownFailAtOrderThree) {
  std::string out = tmp_path("three.jsonl");
  RunResult r = run_cli("verify --n-max 3 --small-prime --out " + out);
  EXPECT_EQ(r.code, 2);
  std::ifstream f(out);
  long fails = 0;
  std::string line;
  std::getline(f, line);  // header
  while (std::getline(f, line)) {
    minorcolor::ClaimReport rep = minorcolor::ClaimReport::from_jsonl(line);
    if (rep.verdict == minorcolor::Verdict::Fail) {
      ++fails;
      EXPECT_EQ(rep.claim, minorcolor::ClaimId::T33);
      EXPECT_EQ(rep.graph, "Bo");
    }
  }
  EXPECT_EQ(fails, 1);
}

TEST(CliVerify, SkipOnlyExitWhenPinnedPrimeTooSmall) {
  RunResult r = run_cli(
      "verify --n-max 3 --small-prime --prime 3 --claims C4 --out " +
      tmp_path("skip.jsonl"));
  EXPECT_EQ(r.code, 3);
}

TEST(CliVerify, ConfigErrors) {
  EXPECT_EQ(run_cli("verify --n-max 2 --prime 5").code, 64);
  EXPECT_EQ(run_cli("verify --n-max 2 --small-prime --prime 6").code, 64);
  EXPECT_EQ(run_cli("verify --n-max 2 --claims L9").code, 64);
  EXPECT_EQ(run_cli("verify --bogus-flag").code, 64);
  EXPECT_EQ(run_cli("verify --n-max 2 --out /nonexistent-dir/x.jsonl").code, 64);
}

TEST(CliStats, SummarizesAndRejects) {
  std::string out = tmp_path("forstats.jsonl");
  ASSERT_EQ(run_cli("verify --n-max 2 --small-prime --out " + out).code, 0);
  RunResult r = run_cli("stats " + out);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("claim          pass    fail    skip vacuous   total"),
            std::string::npos);
  EXPECT_NE(r.out.find("all"), std::string::npos);

  EXPECT_EQ(run_cli("stats /no/such/file.jsonl").code, 64);

  std::string corrupt = tmp_path("corrupt.jsonl");
  std::ofstream c(corrupt);
  c << "{\"schema\":\"minorcolor-claims/1\"}\n";
  c << "this is not json\n";
  c.close();
  RunResult bad = run_cli("stats " + corrupt, true);
  EXPECT_EQ(bad.code, 65);
  EXPECT_NE(bad.out.find("line 2"), std::string::npos);
}

TEST(CliReplay, PrintsSequenceOrSaysWhy) {
  RunResult r = run_cli("replay Bo");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("reaches the complete graph on 2 vertices"),
            std::string::npos);
  EXPECT_NE(r.out.find("contract"), std::string::npos);

  EXPECT_EQ(run_cli("replay A_ --t 3").code, 1);   // no such minor
  EXPECT_EQ(run_cli("replay C", true).code, 65);   // truncated graph6
}

TEST(CliEncodeDump, FrozenVertexProduct) {
  RunResult r = run_cli("encode-dump A_ --t 2 --prime 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p=5\n(v1 - v2)\nann(v1)\n(v2 - v1)\nann(v2)\n");

  RunResult g = run_cli("encode-dump Bo --t 2 --prime 5 --what G --edge 2-1");
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("# m1="), std::string::npos);

  EXPECT_EQ(run_cli("encode-dump A_ --what X").code, 64);
  EXPECT_EQ(run_cli("encode-dump A_ --what H").code, 64);  // --edge missing
  EXPECT_EQ(run_cli("encode-dump A_ --what H --edge zz").code, 64);
  EXPECT_EQ(run_cli("encode-dump '~~~' --t 2").code, 65);
}

TEST(CliVerify, ExpandedFormOnRequest) {
  RunResult r = run_cli("encode-dump A_ --t 2 --prime 5 --expand --reduce");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("expanded: "), std::string::npos);
}
