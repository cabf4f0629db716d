#include <gtest/gtest.h>

#include "qauth/codes.hpp"
#include "qauth/error.hpp"
#include "qauth/random.hpp"

using namespace qauth;

namespace {

// All words of length n with weight <= t, as bit masks.
std::vector<std::uint64_t> patterns_up_to(std::size_t n, std::size_t t) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << n); ++e) {
    if (static_cast<std::size_t>(std::popcount(e)) <= t) out.push_back(e);
  }
  return out;
}

}  // namespace

TEST(Repetition, Parameters) {
  const auto c3 = make_repetition(3);
  EXPECT_EQ(c3.name(), "rep3");
  EXPECT_EQ(c3.n(), 3U);
  EXPECT_EQ(c3.m(), 1U);
  EXPECT_EQ(c3.t(), 1U);
  const auto c5 = make_repetition(5);
  EXPECT_EQ(c5.m(), 1U);
  EXPECT_EQ(c5.t(), 2U);
  EXPECT_THROW((void)make_repetition(4), InvalidInput);
  EXPECT_THROW((void)make_repetition(1), InvalidInput);
}

TEST(Hamming74, Parameters) {
  const auto c = make_hamming_7_4();
  EXPECT_EQ(c.n(), 7U);
  EXPECT_EQ(c.m(), 4U);
  EXPECT_EQ(c.t(), 1U);
  EXPECT_EQ(rank(c.generator()), 4U);
  EXPECT_EQ(c.decoder_kind(), DecoderKind::SyndromeTable);
}

TEST(Encode, Examples) {
  const auto rep = make_repetition(3);
  EXPECT_EQ(rep.encode(BitWord::from_string("1")).to_string(), "111");
  const auto ham = make_hamming_7_4();
  EXPECT_EQ(ham.encode(BitWord::from_string("1000")).to_string(), "1000110");
  EXPECT_EQ(ham.encode(BitWord::from_string("1011")).to_string(), "1011010");
  EXPECT_TRUE(ham.encode(BitWord(4)).is_zero());
  EXPECT_THROW((void)ham.encode(BitWord(3)), InvalidInput);
}

TEST(Encode, LinearAndInCode) {
  const auto ham = make_hamming_7_4();
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      const auto u = BitWord::from_uint(a, 4);
      const auto v = BitWord::from_uint(b, 4);
      ASSERT_EQ(ham.encode(u ^ v), ham.encode(u) ^ ham.encode(v));
    }
    EXPECT_TRUE(ham.is_codeword(ham.encode(BitWord::from_uint(a, 4))));
  }
}

TEST(Syndrome, Examples) {
  const auto rep = make_repetition(3);
  EXPECT_TRUE(rep.is_codeword(BitWord(3)));
  const auto w = BitWord::from_string("101");
  EXPECT_FALSE(rep.is_codeword(w));
  EXPECT_FALSE(rep.syndrome(w).is_zero());
  EXPECT_THROW((void)rep.syndrome(BitWord(4)), InvalidInput);
}

TEST(Syndrome, ZeroIffCodeword) {
  const auto ham = make_hamming_7_4();
  for (std::uint64_t x = 0; x < 128; ++x) {
    const auto w = BitWord::from_uint(x, 7);
    EXPECT_EQ(ham.is_codeword(w), ham.syndrome(w).is_zero());
  }
}

TEST(Decode, ZeroErrorsAndMajority) {
  const auto rep = make_repetition(3);
  const auto d0 = rep.decode_bounded(BitWord::from_string("111"));
  ASSERT_TRUE(d0);
  EXPECT_TRUE(d0->corrected_positions.empty());
  const auto d = rep.decode_bounded(BitWord::from_string("110"));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->codeword.to_string(), "111");
  EXPECT_EQ(d->message.to_string(), "1");
  EXPECT_EQ(d->corrected_positions, std::vector<std::size_t>{2});
}

TEST(Decode, CorrectsEveryPatternWithinRadiusExhaustively) {
  for (const auto& code : {make_repetition(3), make_repetition(5), make_hamming_7_4()}) {
    for (const auto& c : code.codewords()) {
      for (const auto e : patterns_up_to(code.n(), code.t())) {
        const auto r = c ^ BitWord::from_uint(e, code.n());
        const auto d = code.decode_bounded(r);
        ASSERT_TRUE(d) << code.name();
        ASSERT_EQ(d->codeword, c) << code.name();
        ASSERT_EQ(d->message, code.extract_message(c));
        ASSERT_EQ(d->corrected_positions, BitWord::from_uint(e, code.n()).support());
      }
    }
  }
}

TEST(Decode, HammingIsPerfect) {
  // Every word lies within distance 1 of exactly one codeword.
  const auto ham = make_hamming_7_4();
  for (std::uint64_t x = 0; x < 128; ++x) {
    const auto d = ham.decode_bounded(BitWord::from_uint(x, 7));
    ASSERT_TRUE(d);
    EXPECT_LE(d->corrected_positions.size(), 1U);
    EXPECT_TRUE(ham.is_codeword(d->codeword));
  }
}

TEST(WeightDistribution, Examples) {
  EXPECT_EQ(make_repetition(3).weight_distribution(), (std::vector<std::uint64_t>{1, 0, 0, 1}));
  EXPECT_EQ(make_hamming_7_4().weight_distribution(), (std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1}));
}

TEST(LinearCode, RejectsInconsistentMatrices) {
  const auto g = BitMatrix::from_strings({"111"});
  const auto h_bad = BitMatrix::from_strings({"110", "111"});
  EXPECT_THROW(LinearCode("bad", 1, g, h_bad), InvalidInput);
  const auto h = BitMatrix::from_strings({"110", "101"});
  EXPECT_THROW(LinearCode("t-too-big", 3, g, h), InvalidInput);
  // t = 1 for a [3,2] code: single-bit syndromes collide.
  EXPECT_THROW(LinearCode("collide", 1, BitMatrix::from_strings({"110", "011"}), BitMatrix::from_strings({"111"})),
               InvalidInput);
}

TEST(LinearCode, NonSystematicGeneratorIsNormalized) {
  // No column of this G is a unit vector for the second row.
  const auto g = BitMatrix::from_strings({"1111", "0011"});
  const auto h = BitMatrix::from_strings({"1100", "0011"});
  const LinearCode code("custom", 0, g, h);
  EXPECT_EQ(code.info_positions(), (std::vector<std::size_t>{0, 2}));
  for (std::uint64_t a = 0; a < 4; ++a) {
    const auto u = BitWord::from_uint(a, 2);
    EXPECT_EQ(code.extract_message(code.encode(u)), u);
  }
}

TEST(LinearCode, RandomRoundTripsOnLargerCode) {
  RandomStream rng(5);
  const auto ham = make_hamming_7_4();
  for (int i = 0; i < 1000; ++i) {
    const auto u = BitWord::random(4, rng);
    const auto d = ham.decode_bounded(ham.encode(u));
    ASSERT_TRUE(d);
    EXPECT_EQ(d->message, u);
  }
}
