#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fekete::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() /
             ("fekete_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
              ::testing::UnitTest::GetInstance()->current_test_info()->name());
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(Cli, TelephoneSequenceTable) {
  const auto r = run({"gtn", "--max-n", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1, 1, 2, 4, 10, 26\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, TelephoneSequenceJsonIsExact) {
  const auto r = run({"--varkappa", "7/2", "--format", "json", "gtn", "--max-n", "3"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["varkappa"], "7/2");
  EXPECT_EQ(j["values"][2]["value"], "9/2");
  EXPECT_EQ(j["values"][3]["value"], "23/2");
}

TEST(Cli, SmallVarkappaWarns) {
  const auto r = run({"--varkappa", "1/2", "gtn", "--max-n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, BoundA2) {
  const auto r = run({"--format", "json", "bound", "a2", "--vartheta", "1", "--kappa", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(r.out)["value"].get<double>(), 0.25);
}

TEST(Cli, FeketeSzegoVerdict) {
  const auto r = run({"--format", "json", "fs", "--mu", "0"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["branch"], "above-sigma2");
  EXPECT_DOUBLE_EQ(j["value"].get<double>(), 1);
  EXPECT_DOUBLE_EQ(j["sigma1"].get<double>(), -2);
  EXPECT_DOUBLE_EQ(j["sigma2"].get<double>(), -1.5);
  EXPECT_DOUBLE_EQ(j["aleph"].get<double>(), -4);

  const auto complex_mu = run({"--format", "json", "fs", "--mu", "0.5,0.5"});
  ASSERT_EQ(complex_mu.code, 0);
  EXPECT_TRUE(nlohmann::json::accept(complex_mu.out));
}

TEST(Cli, EverySubcommandEmitsParseableJson) {
  const std::vector<std::vector<std::string>> cases = {
      {"xseries", "--order", "4"},
      {"bound", "a3"},
      {"inverse-fs", "--hbar", "2"},
      {"log-coeff"},
      {"conv-fs", "--mu", "0", "--dist", "poisson", "--dist-param", "1"},
      {"conv-fs", "--mu", "0.2", "--dist", "pascal", "--dist-param", "0.3", "--s", "2"},
      {"dist", "--kind", "borel", "--param", "0.5", "--max-n", "4"},
      {"lemma", "--which", "3", "--v", "0.5,0.5", "--grid", "8"},
      {"lemma", "--which", "4", "--v", "1", "--grid", "8"},
  };
  for (auto args : cases) {
    args.insert(args.begin(), {"--format", "json"});
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << args[2] << ": " << r.err;
    EXPECT_TRUE(nlohmann::json::accept(r.out)) << r.out;
  }
}

TEST(Cli, InverseAndLogValues) {
  auto j = nlohmann::json::parse(run({"--format", "json", "inverse-fs", "--hbar", "2"}).out);
  EXPECT_DOUBLE_EQ(j["value"].get<double>(), 1);
  EXPECT_DOUBLE_EQ(j["d2_as_stated"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(j["d2_oracle"].get<double>(), 1);
  j = nlohmann::json::parse(run({"--format", "json", "log-coeff"}).out);
  EXPECT_DOUBLE_EQ(j["g2"].get<double>(), 1.5);
  EXPECT_DOUBLE_EQ(j["g2_reference"].get<double>(), 0.75);
}

TEST(Cli, CsvHasHeaderAndRow) {
  const auto r = run({"--format", "csv", "inverse-fs", "--hbar", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "vartheta,kappa,varkappa,hbar,value,d2_as_stated,d2_oracle,second_inequality\n0,0,1,2,1,0.5,1,1.5\n");
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(run({"--help"}).code, 0);
  for (const char* sub : {"gtn", "xseries", "bound", "fs", "inverse-fs", "log-coeff", "conv-fs", "dist", "member",
                          "lemma", "verify"}) {
    const auto r = run({sub, "--help"});
    EXPECT_EQ(r.code, 0) << sub;
    EXPECT_NE(r.out.find("Usage"), std::string::npos) << sub;
  }
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"fs", "--mu"}).code, 1);
  EXPECT_EQ(run({"fs", "--mu", "abc"}).code, 1);
  EXPECT_EQ(run({"bound", "a4"}).code, 1);
  EXPECT_EQ(run({"conv-fs", "--mu", "0"}).code, 1);
  EXPECT_EQ(run({"--format", "xml", "log-coeff"}).code, 1);
  EXPECT_EQ(run({"--kappa", "-1", "log-coeff"}).code, 1);
  EXPECT_EQ(run({"--varkappa", "1/0", "gtn"}).code, 1);
  EXPECT_EQ(run({"dist", "--kind", "borel", "--param", "2"}).code, 1);
  const auto r = run({"verify", "--suite", "nothing"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ConfigFileAndCommandLinePrecedence) {
  const auto dir = scratch_dir();
  const auto config = dir / "params.ini";
  std::ofstream(config) << "vartheta=1\nkappa=1\n";
  auto j = nlohmann::json::parse(run({"--config", config.string(), "--format", "json", "bound", "a2"}).out);
  EXPECT_DOUBLE_EQ(j["value"].get<double>(), 0.25);
  j = nlohmann::json::parse(run({"--config", config.string(), "--kappa", "0", "--format", "json", "bound", "a2"}).out);
  EXPECT_DOUBLE_EQ(j["value"].get<double>(), 0.5);
  std::filesystem::remove_all(dir);
}

TEST(Cli, MembershipFromFile) {
  const auto dir = scratch_dir();
  const auto inside = dir / "small.txt";
  const auto outside = dir / "big.txt";
  std::ofstream(inside) << "# f(z) = z + 0.01 z^2\n0\n1\n0.01\n";
  std::ofstream(outside) << "0\n1\n3\n";
  auto j = nlohmann::json::parse(run({"--format", "json", "member", "--f-coeffs", inside.string()}).out);
  EXPECT_TRUE(j["member"].get<bool>());
  j = nlohmann::json::parse(run({"--format", "json", "member", "--f-coeffs", outside.string()}).out);
  EXPECT_FALSE(j["member"].get<bool>());
  EXPECT_EQ(run({"member", "--f-coeffs", (dir / "missing.txt").string()}).code, 1);
  std::filesystem::remove_all(dir);
}

TEST(Cli, VerifyNeverOverwrites) {
  const auto dir = scratch_dir();
  const auto out = dir / "report.jsonl";
  const std::vector<std::string> args = {"--grid", "6", "verify", "--suite", "lemmas", "--out", out.string()};
  ASSERT_EQ(run(args).code, 0);
  ASSERT_EQ(run(args).code, 0);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    ++files;
    std::ifstream in(entry.path());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
      EXPECT_TRUE(nlohmann::json::accept(line));
      ++lines;
    }
    EXPECT_EQ(lines, 14u);  // 13 reports and the summary
  }
  EXPECT_EQ(files, 2u);
  std::filesystem::remove_all(dir);
}

TEST(Cli, VerifyToStdout) {
  const auto r = run({"--grid", "6", "verify", "--suite", "lemmas"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line, last;
  while (std::getline(in, line)) last = line;
  EXPECT_EQ(nlohmann::json::parse(last)["summary"]["soundnessViolations"], 0);
}

}  // namespace
