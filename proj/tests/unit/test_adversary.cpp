#include <gtest/gtest.h>

#include <type_traits>

#include "qauth/adversary.hpp"
#include "qauth/bch.hpp"
#include "qauth/error.hpp"
#include "qauth/protocol.hpp"

using namespace qauth;

namespace {

QubitSequence send_with_key(const BitWord& message, const BitWord& key_bits, const LinearCode& code) {
  SecretKey key(key_bits);
  return alice_send(message, key, code);
}

// The adversary interface never hands out key material.
template <class T>
concept CarriesKey = requires(const T& t) { t.x_ab; } || requires(const T& t) { t.key; };

}  // namespace

static_assert(!CarriesKey<AdversaryTranscript>);
static_assert(!CarriesKey<InterceptResendStrategy>);
static_assert(!CarriesKey<NoMessageStrategy>);
static_assert(std::is_abstract_v<Adversary>);

TEST(NoMessageAttack, PreparesForgedCodewordInGuessedBases) {
  RandomStream rng(1);
  const auto ham = make_hamming_7_4();
  AdversaryTranscript tr;
  const auto forged = BitWord::from_string("1011");
  auto qs = no_message_attack(NoMessageStrategy{forged}, ham, rng, &tr);
  ASSERT_EQ(qs.size(), 7U);
  EXPECT_TRUE(tr.resent);
  EXPECT_EQ(tr.x_e, tr.x_e_prime);
  std::vector<Basis> bases;
  for (std::size_t j = 0; j < 7; ++j) bases.push_back(basis_for_key_bit(tr.x_e.get(j)));
  const auto bits = measure_all(qs, bases, rng);
  const auto c = ham.encode(forged);
  for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(bits[j], c.get(j));
}

TEST(NoMessageAttack, RejectsWrongForgedLength) {
  RandomStream rng(2);
  EXPECT_THROW((void)no_message_attack(NoMessageStrategy{BitWord(2)}, make_hamming_7_4(), rng), InvalidInput);
}

TEST(InterceptResend, MatchedKeyNeedsNoCorrection) {
  const auto ham = make_hamming_7_4();
  const auto forged = BitWord::from_string("0110");
  // Search Eve's seeds for one whose x_E equals the key 0000000.
  for (std::uint64_t seed = 0;; ++seed) {
    RandomStream probe(seed);
    if (!BitWord::random(7, probe).is_zero()) continue;
    RandomStream rng(seed);
    auto res = intercept_resend_attack(InterceptResendStrategy{forged}, send_with_key(BitWord::from_string("1011"),
                                                                                      BitWord(7), ham),
                                       ham, rng);
    ASSERT_TRUE(res.resend);
    EXPECT_TRUE(res.transcript.decode_success);
    EXPECT_TRUE(res.transcript.corrected_positions.empty());
    EXPECT_EQ(*res.transcript.m_e, ham.encode(BitWord::from_string("1011")));
    EXPECT_EQ(res.transcript.x_e_prime, BitWord(7));
    // Bob with the real key accepts the forgery.
    RandomStream bob(seed + 1);
    SecretKey key(BitWord(7));
    const auto out = bob_receive(std::move(*res.resend), key, ham, bob);
    ASSERT_TRUE(out.accepted());
    EXPECT_EQ(*out.message(), forged);
    break;
  }
}

TEST(InterceptResend, CorrectionOnlyTouchesWrongBasesWhenDecodeIsRight) {
  const auto ham = make_hamming_7_4();
  const RandomStream root(3);
  int checked = 0;
  for (std::uint64_t i = 0; i < 20000; ++i) {
    RandomStream s = root.substream(i);
    const auto key = BitWord::random(7, s);
    const auto msg = BitWord::random(4, s);
    auto res = intercept_resend_attack(InterceptResendStrategy{~msg}, send_with_key(msg, key, ham), ham, s);
    const auto& tr = res.transcript;
    ASSERT_TRUE(tr.m_e);
    if (!tr.decode_success) continue;
    const auto decoded = ham.decode_bounded(*tr.m_e);
    ASSERT_TRUE(decoded);
    ASSERT_EQ((*tr.m_e ^ decoded->codeword).support(), tr.corrected_positions);
    if (decoded->codeword != ham.encode(msg)) continue;
    const auto wrong = key ^ tr.x_e;
    for (std::size_t p : tr.corrected_positions) ASSERT_TRUE(wrong.get(p));
    ASSERT_EQ(hamming_weight(key ^ tr.x_e_prime), hamming_weight(wrong) - tr.corrected_positions.size());
    ++checked;
  }
  EXPECT_GT(checked, 1000);
}

TEST(InterceptResend, WrongLengthAborts) {
  RandomStream rng(4);
  const auto ham = make_hamming_7_4();
  QubitSequence short_seq;
  for (int i = 0; i < 6; ++i) short_seq.push_back(prepare(false, Basis::Z));
  auto res = intercept_resend_attack(InterceptResendStrategy{BitWord(4)}, std::move(short_seq), ham, rng);
  EXPECT_FALSE(res.resend);
  EXPECT_FALSE(res.transcript.resent);
}

TEST(InterceptResend, FailurePolicies) {
  // BCH(15,7,2) is not perfect, so decoding fails on some words.
  const auto code = build_bch(4, 2);
  const auto msg = BitWord::ones(7);
  int aborted = 0;
  int uncorrected = 0;
  for (std::uint64_t i = 0; i < 400; ++i) {
    for (const auto policy : {DecodeFailurePolicy::Abort, DecodeFailurePolicy::ResendUncorrected}) {
      RandomStream rng = RandomStream(7).substream(i);
      auto res = intercept_resend_attack(InterceptResendStrategy{BitWord(7), policy},
                                         send_with_key(msg, BitWord(15), code), code, rng);
      if (res.transcript.decode_success) {
        EXPECT_TRUE(res.resend);
        continue;
      }
      if (policy == DecodeFailurePolicy::Abort) {
        EXPECT_FALSE(res.resend);
        EXPECT_FALSE(res.transcript.resent);
        ++aborted;
      } else {
        ASSERT_TRUE(res.resend);
        EXPECT_EQ(res.transcript.x_e_prime, res.transcript.x_e);
        ++uncorrected;
      }
    }
  }
  EXPECT_GT(aborted, 0);
  EXPECT_EQ(aborted, uncorrected);
  EXPECT_EQ(to_string(DecodeFailurePolicy::Abort), "abort");
  EXPECT_EQ(to_string(DecodeFailurePolicy::ResendUncorrected), "resend_uncorrected");
}

TEST(Adversaries, ChannelInterposition) {
  const auto ham = make_hamming_7_4();
  const InterceptResendAdversary eve(InterceptResendStrategy{BitWord(4)});
  EXPECT_EQ(eve.name(), "intercept-resend");
  EXPECT_FALSE(eve.impersonates_sender());
  const NoMessageAdversary mallory(NoMessageStrategy{BitWord(4)});
  EXPECT_TRUE(mallory.impersonates_sender());

  RandomStream rng(6);
  auto ch = channel_send(send_with_key(BitWord::from_string("1011"), BitWord(7), ham));
  const auto tr = eve.act(ch, ham, rng);
  EXPECT_EQ(ch.size(), tr.resent ? 7U : 0U);
}
