#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd = std::string(PCRIT_CLI) + " " + args;
  if (!stdin_text.empty()) cmd = "printf '" + stdin_text + "' | " + cmd;
  cmd += " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json last_json_line(const std::string& out) {
  std::istringstream in(out);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return nlohmann::json::parse(last);
}

}  // namespace

TEST(Cli, ChirhoJson) {
  const Result r = run("chirho --witness", "E{O_\\n");
  ASSERT_EQ(r.code, 0);
  const auto j = last_json_line(r.out);
  EXPECT_EQ(j["version"], "1.0.0");
  EXPECT_EQ(j["input_digest"].get<std::string>().rfind("sha256:", 0), 0u);
  ASSERT_EQ(j["results"].size(), 1u);
  EXPECT_EQ(j["results"][0]["chi_rho"], 4);
  EXPECT_EQ(j["results"][0]["witness"].size(), 6u);
}

TEST(Cli, ChirhoTsv) {
  const Result r = run("chirho --format tsv", "Ch\\nCl\\n@\\n");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Ch\t3\nCl\t3\n@\t1\n");
}

TEST(Cli, Critical) {
  const Result r = run("critical --format tsv", "Ch\\nCl\\n");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Ch\t3\ttrue\ttrue\nCl\t3\tfalse\ttrue\n");
}

TEST(Cli, Gen) {
  EXPECT_EQ(run("gen net").out, "E{O_\n");
  EXPECT_EQ(run("gen cycle 5").out, "Dhc\n");
  const Result trees = run("gen trees 6");
  EXPECT_EQ(trees.code, 0);
  EXPECT_EQ(std::count(trees.out.begin(), trees.out.end(), '\n'), 6);
  EXPECT_EQ(run("gen hypercube 3").code, 2);
  EXPECT_EQ(run("gen realization 5 1").code, 2);
}

TEST(Cli, Verify) {
  const Result ok = run("verify small-critical-3 --corpus builtin:connected-le5");
  EXPECT_EQ(ok.code, 0);
  const auto j = last_json_line(ok.out);
  EXPECT_EQ(j["results"]["disagreement_count"], 0);
  const Result bad = run("verify edge-bound --corpus builtin:connected-le4");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("\"A_\""), std::string::npos);
  EXPECT_EQ(run("verify nope --corpus builtin:connected-le4").code, 2);
}

TEST(Cli, VerifyFromStdin) {
  const Result r = run("verify diam2 --corpus -", "Dhc\\nCl\\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_json_line(r.out)["results"]["checked"], 2);
}

TEST(Cli, ParseErrorExitCode) {
  EXPECT_EQ(run("chirho", "D?\\n").code, 3);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, Theorems) {
  const Result r = run("theorems");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("block-diam3"), std::string::npos);
}
