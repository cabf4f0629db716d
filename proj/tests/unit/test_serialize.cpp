#include <gtest/gtest.h>

#include <filesystem>

#include "qauth/bch.hpp"
#include "qauth/error.hpp"
#include "qauth/serialize.hpp"

using namespace qauth;

TEST(CodeSpec, RoundTripSmallCodes) {
  for (const auto& c : {make_repetition(3), make_repetition(5), make_hamming_7_4()}) {
    const auto j = code_to_json(c);
    EXPECT_TRUE(j["field"].is_null());
    const auto back = code_from_json(j);
    EXPECT_EQ(back.name(), c.name());
    EXPECT_EQ(back.generator(), c.generator());
    EXPECT_EQ(back.parity_check(), c.parity_check());
    EXPECT_EQ(back.t(), c.t());
  }
}

TEST(CodeSpec, HammingLayout) {
  const auto j = code_to_json(make_hamming_7_4());
  EXPECT_EQ(j["n"], 7);
  EXPECT_EQ(j["m"], 4);
  EXPECT_EQ(j["generator_rows"][0], "8c");
  ASSERT_EQ(j["parity_rows"].size(), 3U);
}

TEST(CodeSpec, BchRoundTripRestoresAlgebraicDecoder) {
  const auto c = build_bch(6, 10);
  const auto j = code_to_json(c);
  EXPECT_EQ(j["field"]["w"], 6);
  EXPECT_EQ(j["field"]["primitive_poly"], "0x43");
  const auto back = code_from_json(j);
  EXPECT_EQ(back.decoder_kind(), DecoderKind::Algebraic);
  EXPECT_EQ(back.generator(), c.generator());
}

TEST(CodeSpec, TamperedBchMatrixIsRejected) {
  auto j = code_to_json(build_bch(6, 2));
  std::string row = j["generator_rows"][0];
  row[0] = row[0] == '0' ? '1' : '0';
  j["generator_rows"][0] = row;
  EXPECT_THROW((void)code_from_json(j), InvalidInput);
}

TEST(CodeSpec, MalformedInput) {
  EXPECT_THROW((void)code_from_json(Json::array()), InvalidInput);
  auto j = code_to_json(make_repetition(3));
  j.erase("n");
  EXPECT_THROW((void)code_from_json(j), InvalidInput);
  auto k = code_to_json(make_repetition(3));
  k["m"] = 2;
  EXPECT_THROW((void)code_from_json(k), InvalidInput);
}

TEST(CodeSpec, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "qauth_test_code.json";
  write_code_file(make_hamming_7_4(), path);
  EXPECT_EQ(read_code_file(path).generator(), make_hamming_7_4().generator());
  std::filesystem::remove(path);
  EXPECT_THROW((void)read_code_file(path), InvalidInput);
}

TEST(Reports, SessionRecordHasNoKeyOrQubitData) {
  const NoMessageAdversary eve(NoMessageStrategy{BitWord::from_string("0110")});
  const auto rec = run_session(BitWord::from_string("1011"), make_hamming_7_4(), &eve, RandomStream(3));
  const auto j = to_json(rec);
  for (const char* key : {"code_name", "message_hex", "accepted", "forged", "adversary", "seed", "n", "m", "t"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["message_hex"], "b");
  EXPECT_EQ(j["adversary"], "no-message");
  const std::string text = j.dump();
  for (const char* banned : {"key", "x_ab", "basis", "prep"}) {
    EXPECT_EQ(text.find(banned), std::string::npos) << banned;
  }
}

TEST(Reports, OracleReportCarriesExactStrings) {
  const auto r = make_report("p", ExactProb(Rational(BigInt(37), BigInt(64))), ExactProb(Rational(BigInt(21), BigInt(32))));
  const auto j = to_json(r);
  EXPECT_EQ(j["exact_value"]["numerator"], "37");
  EXPECT_EQ(j["exact_value"]["denominator"], "64");
  EXPECT_EQ(j["gap"], "-5/64");
  EXPECT_EQ(j["equal"], false);
}

TEST(Reports, EnvelopeShape) {
  const auto j = make_envelope("oracle pdec", Json::object(), Json::object());
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["command"], "oracle pdec");
  EXPECT_TRUE(j.contains("config"));
  EXPECT_TRUE(j.contains("results"));
}
