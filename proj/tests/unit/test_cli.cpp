#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qauth_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qauth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qauth::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tmp(const std::string& name) { return std::filesystem::path(QAUTH_TEST_TMPDIR) / name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(CliCodeBuild, BchToFile) {
  const auto path = tmp("bch-63-18.json");
  const auto r = run({"code", "build", "--bch", "w=6", "t=10", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("n = 63"), std::string::npos);
  EXPECT_NE(r.out.find("m = 18"), std::string::npos);
  EXPECT_NE(r.out.find("rank(G) = 18"), std::string::npos);
  const auto j = nlohmann::json::parse(slurp(path));
  EXPECT_EQ(j["n"], 63);
  EXPECT_EQ(j["m"], 18);
  EXPECT_EQ(j["t"], 10);
}

TEST(CliCodeBuild, RepetitionAndLargeBch) {
  const auto r = run({"code", "build", "--repetition", "3"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["m"], 1);
  EXPECT_EQ(j["t"], 1);
  const auto b = run({"code", "build", "--bch", "w=7", "t=23"});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(nlohmann::json::parse(b.out)["m"], 22);
}

TEST(CliCodeBuild, InvalidParameters) {
  EXPECT_EQ(run({"code", "build", "--bch", "w=6", "t=40"}).code, qauth::cli::kExitConfig);
  EXPECT_EQ(run({"code", "build", "--repetition", "4"}).code, qauth::cli::kExitConfig);
  EXPECT_EQ(run({"code", "build"}).code, qauth::cli::kExitConfig);
  EXPECT_EQ(run({"code", "build", "--bch", "w=6", "q=1"}).code, qauth::cli::kExitConfig);
  EXPECT_EQ(run({"bogus"}).code, qauth::cli::kExitConfig);
}

TEST(CliCodeBuild, SpecFileIsAcceptedAsCode) {
  const auto path = tmp("ham.json");
  ASSERT_EQ(run({"code", "build", "--hamming74", "--out", path.string()}).code, 0);
  const auto r = run({"oracle", "pdec", "--code", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
}

TEST(CliAnalytics, DefaultTableCsv) {
  const auto r = run({"analytics", "table"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "code,n,m,t,p_f,p_dec,p_f_prime,key_overhead");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 8U);
  EXPECT_EQ(rows[0].rfind("bch-63-57,63,57,1,1.3e-08,", 0), 0U) << rows[0];
  EXPECT_EQ(rows[4].substr(rows[4].size() - 4), "1.06");
}

TEST(CliAnalytics, ExactJson) {
  const auto r = run({"analytics", "table", "--code", "bch-127-113", "--format", "json", "--exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "analytics table");
  const auto& row = j["results"]["rows"][0];
  EXPECT_EQ(row["n"], 127);
  EXPECT_EQ(row["m"], 113);
  EXPECT_EQ(row["p_f"]["scientific"], "1.4e-16");
  EXPECT_FALSE(row["p_dec"]["numerator"].get<std::string>().empty());
}

TEST(CliSimulate, HonestBchCompleteness) {
  const auto r = run({"simulate", "honest", "--code", "bch-63-18", "--trials", "10000"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["results"]["trials"], 10000);
  EXPECT_EQ(j["results"]["successes"], 10000);
  EXPECT_EQ(j["config"]["seed"], qauth::cli::kDefaultSeed);
}

TEST(CliSimulate, NoMessageCoversReference) {
  const auto r = run({"simulate", "no-message", "--code", "rep3", "--trials", "200000", "--seed", "42", "--verify"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["results"]["reference"]["numerator"], "7");
  EXPECT_EQ(j["results"]["reference"]["denominator"], "16");
  EXPECT_TRUE(j["results"]["reference_in_interval"].get<bool>());
}

TEST(CliSimulate, ByteIdenticalOutputFiles) {
  const auto a = tmp("sim_a.json");
  const auto b = tmp("sim_b.json");
  const std::vector<std::string> base{"simulate", "intercept-resend", "--code", "hamming74", "--trials", "3000",
                                      "--seed", "7", "--out"};
  auto args_a = base;
  args_a.push_back(a.string());
  auto args_b = base;
  args_b.push_back(b.string());
  ASSERT_EQ(run(args_a).code, 0);
  ASSERT_EQ(run(args_b).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST(CliSimulate, BadMessagesAreConfigErrors) {
  EXPECT_EQ(run({"simulate", "no-message", "--code", "hamming74", "--forged-message", "101"}).code,
            qauth::cli::kExitConfig);
  EXPECT_EQ(run({"simulate", "intercept-resend", "--code", "rep3", "--on-decode-failure", "retry"}).code,
            qauth::cli::kExitConfig);
  EXPECT_EQ(run({"simulate", "honest", "--code", "nosuchcode"}).code, qauth::cli::kExitConfig);
}

TEST(CliOracle, PdecHammingGapZero) {
  const auto r = run({"oracle", "pdec", "--code", "hamming74"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["results"]["gap"], "0/1");
  EXPECT_TRUE(j["results"]["equal"].get<bool>());
}

TEST(CliOracle, InterceptResendReportsGap) {
  const auto r = run({"oracle", "ir", "--code", "rep3", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rep3,p_f_prime,37/64,21/32,false,-5/64"), std::string::npos) << r.out;
}

TEST(CliOracle, SizeBoundSuggestsSmallerCode) {
  const auto r = run({"oracle", "ir", "--code", "bch-63-57"});
  EXPECT_EQ(r.code, qauth::cli::kExitConfig);
  EXPECT_NE(r.err.find("smaller code"), std::string::npos) << r.err;
}

TEST(CliOracle, NoMessage) {
  const auto r = run({"oracle", "nomsg", "--code", "rep3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["results"]["any_codeword"]["numerator"], "7");
  EXPECT_TRUE(j["results"]["exact_codeword"]["equal"].get<bool>());
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("simulate"), std::string::npos);
}
