#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Result {
  int code;
  std::string out;
};

// stdout and stderr merged unless keep_stderr is false.
Result run(const std::string &args, bool keep_stderr = true) {
  const std::string cmd =
      std::string("'") + VTWIN_CLI + "' " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST(Cli, Queries) {
  EXPECT_EQ(run("--n 4 isid 's1 s3 s1 s3'").out, "true\n");
  EXPECT_EQ(run("--n 3 isid 's1 s2'").out, "false\n");
  EXPECT_EQ(run("--n 3 isid 's1 s2'").code, 0);
  EXPECT_EQ(run("--n 3 equal 'r1 r2 r1' 'r2 r1 r2'").out, "true\n");
  EXPECT_EQ(run("--n 3 pi 'r1 r2'").out, "[3,1,2]\n");
  EXPECT_EQ(run("--n 3 rewrite 'r1 s1 r1 s1'").out, "L1.2^-2\n");
  EXPECT_EQ(run("--n 4 decompose s1").out, "pure L1.2\nperm [2,1,3,4]\n");
  EXPECT_EQ(run("--n 4 nf 'L3.4 L1.2'").out, "L1.2 L3.4\n");
}

TEST(Cli, JsonOutput) {
  const auto doc = nlohmann::json::parse(run("--n 3 --format json pi 'r1 r2'", false).out);
  EXPECT_EQ(doc.at("images"), (std::vector<int>{3, 1, 2}));
  const auto g = nlohmann::json::parse(run("--n 4 --format json graph", false).out);
  EXPECT_EQ(g.at("vertices").size(), 6u);
  EXPECT_EQ(g.at("edges").size(), 3u);
}

TEST(Cli, GraphDot) {
  const Result r = run("--n 4 --format dot graph");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("graph PVT_4 {", 0), 0u);
  EXPECT_NE(r.out.find("l_1_2 -- l_3_4;"), std::string::npos);
  EXPECT_EQ(run("--n 4 --format dot nf L1.2").code, 2);
}

TEST(Cli, Graphprops) {
  const auto doc =
      nlohmann::json::parse(run("--n 5 --format json graphprops", false).out);
  EXPECT_EQ(doc.at("degree"), 3);
  EXPECT_EQ(doc.at("chordal"), false);
  EXPECT_EQ(doc.at("dominating_pairs"), 0);
}

TEST(Cli, Errors) {
  const Result bad = run("--n 3 isid 's1 q2'");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("parse-error"), std::string::npos);
  EXPECT_NE(bad.out.find("  s1 q2\n     ^\n"), std::string::npos) << bad.out;
  const Result kernel = run("--n 3 rewrite s1");
  EXPECT_EQ(kernel.code, 2);
  EXPECT_NE(kernel.out.find("not-in-kernel"), std::string::npos) << kernel.out;
  EXPECT_EQ(run("isid s1").code, 2);
  EXPECT_EQ(run("--n 1 isid s1").code, 2);
  EXPECT_EQ(run("--n 9 isid s1").code, 2);
  EXPECT_EQ(run("--n 9 --force isid 's1 s1'").out, "true\n");
  EXPECT_EQ(run("--n 4 frobnicate").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, AutsGuard) {
  EXPECT_EQ(run("--n 7 auts").code, 2);
  const Result r = run("--n 4 auts");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("48 automorphisms\n", 0), 0u);
}

TEST(Cli, Verify) {
  const Result all = run("--n 5 verify all", false);
  EXPECT_EQ(all.code, 0);
  const auto doc = nlohmann::json::parse(all.out);
  EXPECT_EQ(doc.at("suite"), "all");
  EXPECT_EQ(doc.at("n"), 5);
  for (const auto &c : doc.at("claims"))
    EXPECT_EQ(c.at("status"), "pass") << c.at("id");
  const Result text = run("--n 4 --format text verify pvt4");
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(text.out.rfind("suite pvt4  n=4", 0), 0u);
  EXPECT_EQ(run("--n 5 verify pvt4").code, 2);
  EXPECT_EQ(run("--n 4 verify nothing").code, 2);
}
