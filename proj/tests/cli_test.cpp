#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "repwords/word.hpp"

namespace {

struct result {
  int status;
  std::string out;
};

result run(const std::string& args, const std::string& stdin_text = "", const std::string& env = "") {
  std::string cmd = env + " " + std::string(REPWORDS_CLI) + " " + args + " 2>/dev/null";
  if (!stdin_text.empty()) cmd = "printf '%s' '" + stdin_text + "' | " + cmd;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, Std) {
  EXPECT_EQ(run("std 296893").out, "042341\n");
  EXPECT_EQ(run("std '30 10 30'").out, "101\n");
  EXPECT_EQ(run("std 12x").status, 2);
}

TEST(Cli, Repeats) {
  const auto r = run("repeats 00110");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "3\n");
}

TEST(Cli, Contains) {
  auto r = run("contains 13043134 1101 --occurrence");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "contains [2,5,6,7]\n");
  r = run("contains 012 00");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "avoids\n");
  EXPECT_EQ(run("contains 012 02").status, 2);  // not a pattern
}

TEST(Cli, Algebra) {
  EXPECT_EQ(run("algebra dsum 31422 4132").out, "314228576\n");
  EXPECT_EQ(run("algebra ssum 2413 121").out, "4635121\n");
  EXPECT_EQ(run("algebra concat 12 21").out, "1221\n");
  EXPECT_EQ(run("algebra dpow 21 3").out, "214365\n");
  EXPECT_EQ(run("algebra spow 123 3").out, "789456123\n");
  EXPECT_EQ(run("algebra spow 12 5").out, "9 10 7 8 5 6 3 4 1 2\n");
  EXPECT_EQ(run("algebra dsum 01 1").status, 1);
  EXPECT_EQ(run("algebra nope 1 1").status, 2);
}

TEST(Cli, ConstructRoundTripsThroughOtherCommands) {
  auto r = run("construct --n 3 --part r");
  EXPECT_EQ(r.out, "7 8 9 4 5 6 1 2 3\n");
  r = run("construct --n 2");
  ASSERT_EQ(r.status, 0);
  const auto s = repwords::parse_word(r.out);
  EXPECT_EQ(s.size(), 128u);
  EXPECT_EQ(run("repeats '" + r.out.substr(0, r.out.size() - 1) + "'").out, "64\n");
  EXPECT_EQ(run("repeats -", r.out).out, "64\n");
  EXPECT_EQ(run("construct --n 1").out, "1 1\n");
  EXPECT_EQ(run("construct --n 0").status, 1);
  EXPECT_EQ(run("construct --n 2 --part x").status, 2);
}

TEST(Cli, Verify) {
  auto r = run("verify --n 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("length=128 repeats=64 multiplicity_ok=true avoided=all", 0), 0u) << r.out;

  r = run("verify --n 2 --json");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"avoided", "elapsed_ms", "length", "multiplicity_ok", "repeats"}));
  EXPECT_EQ(j["length"], 128);
  EXPECT_EQ(j["avoided"].size(), 7u);
  for (const auto& [key, value] : j["avoided"].items()) EXPECT_TRUE(value.get<bool>()) << key;

  EXPECT_EQ(run("verify --n 2 --guard 10").status, 1);
  EXPECT_EQ(run("verify --n 2", "", "REPEATS_GUARD=10").status, 1);
  EXPECT_EQ(run("verify --n 2 --guard 200", "", "REPEATS_GUARD=10").status, 0);
}

TEST(Cli, Witness) {
  EXPECT_EQ(run("witness --n 1 000").out, "Constant [1,2,3]\n");
  EXPECT_EQ(run("witness --n 1 0101").out, "DoubleRun(id,id) [1,2,3,4]\n");
  EXPECT_EQ(run("witness --n 1 -", "0011").out, "DoubledMonotone(id) [1,2,3,4]\n");
  EXPECT_EQ(run("witness --n 1 011").status, 1);

  auto r = run("witness --n 1 --trace 0101");
  EXPECT_EQ(r.status, 0);
  const auto body = r.out.substr(r.out.find('\n') + 1);
  EXPECT_EQ(nlohmann::json::parse(body)["branch"], "claim");
}

TEST(Cli, Oracle) {
  EXPECT_EQ(run("oracle cayley --len 2").out, "00\n01\n10\n");
  EXPECT_EQ(run("oracle balanced --values 2 --mult 2").out, "1122\n1212\n1221\n2112\n2121\n2211\n");
  EXPECT_EQ(run("oracle cayley --len 11").status, 1);

  auto r = run("oracle max-repeats --n 1 --k 1 --max-values 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("max_repeats=1 witness=00 ", 0), 0u) << r.out;

  r = run("oracle balanced-check --n 1 --k 2");
  EXPECT_EQ(r.out, "holds=true words=20\n");

  const auto path = std::filesystem::temp_directory_path() / "repwords_cayley3.txt";
  EXPECT_EQ(run("oracle cayley --len 3 --out " + path.string()).status, 0);
  std::ifstream in(path);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) {
    EXPECT_TRUE(repwords::is_standardised(repwords::parse_word(line)));
    ++lines;
  }
  EXPECT_EQ(lines, 13u);
  std::filesystem::remove(path);
}

TEST(Cli, Render) {
  const auto r = run("render 002135");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find('*'), std::string::npos);
  EXPECT_NE(r.out.find("- "), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("bogus").status, 2);
  EXPECT_EQ(run("verify").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}
