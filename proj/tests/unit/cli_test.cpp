#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "divconv/convolution.hpp"
#include "divconv/representation.hpp"

using namespace divconv;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "divconv");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Result run_binary(const std::string& args) {
  const std::string cmd = std::string(DIVCONV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WEXITSTATUS(status), out, {}};
}

}  // namespace

TEST(Cli, DimsReportsProfile) {
  const Result r = run_cli({"dims", "33"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("dim_E4=4 dim_S4=10"), std::string::npos) << r.out;
  const auto j = nlohmann::json::parse(run_cli({"--machine", "dims", "56"}).out);
  EXPECT_EQ(j["dim_S4"], 20);
  EXPECT_EQ(j["sturm_bound"], 32);
}

TEST(Cli, UsageAndLevelErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"dims"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"dims", "0"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"dims", "abc"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kOk);
  EXPECT_EQ(run_cli({"repnum", "--form", "cube", "1", "2", "3"}).code, cli::kUsage);
  const Result r = run_cli({"convsum", "1", "100"});
  EXPECT_EQ(r.code, cli::kUnsupportedLevel);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run_cli({"repnum", "1", "25", "10"}).code, cli::kUnsupportedLevel);
}

TEST(Cli, SearchOnTrivialLevelIsEmpty) {
  const auto j = nlohmann::json::parse(run_cli({"--machine", "search-cusp", "1"}).out);
  EXPECT_TRUE(j["results"].empty());
}

TEST(Cli, MachineOutputIsStable) {
  const Result a = run_cli({"--machine", "convsum", "1", "10", "--verify", "30"});
  const Result b = run_cli({"--machine", "convsum", "1", "10", "--verify", "30"});
  ASSERT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_TRUE(j["brute_force_ok"].get<bool>());
  for (const auto& [k, v] : j["sigma3"].items()) EXPECT_TRUE(v.is_string()) << k;
  EXPECT_EQ(run_cli({"--machine", "search-cusp", "24"}).out, run_cli({"--machine", "search-cusp", "24"}).out);
}

TEST(Cli, DiagonalAndCommonFactorRouting) {
  const Result d = run_cli({"convsum", "2", "2", "--verify", "40"});
  EXPECT_EQ(d.code, cli::kOk);
  EXPECT_NE(d.out.find("W_(1,1)(n) = 5/12 sigma3(n)"), std::string::npos) << d.out;
  const Result g = run_cli({"convsum", "4", "6", "--verify", "60"});
  EXPECT_EQ(g.code, cli::kOk);
  EXPECT_NE(g.out.find("W_(4,6)(n) = W_(2,3)(n/2)"), std::string::npos) << g.out;
}

TEST(Cli, FixtureOnlyFailsWhereFixtureIsBroken) {
  EXPECT_EQ(run_cli({"convsum", "1", "33", "--use-fixture", "--verify", "0"}).code, cli::kInternal);
  EXPECT_EQ(run_cli({"convsum", "1", "12", "--use-fixture", "--verify", "50"}).code, cli::kOk);
}

TEST(Cli, RepnumMatchesOracle) {
  const auto one = nlohmann::json::parse(run_cli({"--machine", "repnum", "--form", "quad", "1", "1", "1"}).out);
  EXPECT_EQ(one["count"], "16");
  for (std::int64_t n : {0, 1, 7, 30, 64, 100}) {
    const auto j = nlohmann::json::parse(
        run_cli({"--machine", "repnum", "--form", "hex", "1", "11", std::to_string(n)}).out);
    EXPECT_EQ(j["count"], rep_oracle(Form::Hex, 1, 11, n).get_str()) << n;
    EXPECT_EQ(j["terms"].size(), 8u);
  }
  const auto q = nlohmann::json::parse(run_cli({"--machine", "repnum", "2", "5", "40"}).out);
  EXPECT_EQ(q["count"], rep_oracle(Form::Quad, 2, 5, 40).get_str());
}

TEST(CliBinary, ExitCodesAndCacheFiles) {
  EXPECT_EQ(run_binary("--help").code, 0);
  EXPECT_EQ(run_binary("nonsense").code, 2);
  EXPECT_EQ(run_binary("basis 9").code, 3);
  const fs::path dir = fs::temp_directory_path() / ("divconv-cli-cache-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  const Result r = run_binary("--cache-dir " + dir.string() + " convsum 2 7 --verify 20");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(fs::exists(dir / "basis-14.json"));
  EXPECT_TRUE(fs::exists(dir / "formula-14.json"));
  const Result again = run_binary("--machine --cache-dir " + dir.string() + " convsum 2 7 --verify 20");
  EXPECT_EQ(again.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(again.out)["brute_force_ok"].get<bool>());
  fs::remove_all(dir);
}
