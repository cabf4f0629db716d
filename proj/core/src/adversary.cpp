#include "qauth/adversary.hpp"

#include "qauth/error.hpp"

namespace qauth {

namespace {

QubitSequence prepare_word(const BitWord& codeword, const BitWord& bases) {
  QubitSequence out;
  out.reserve(codeword.size());
  for (std::size_t j = 0; j < codeword.size(); ++j) {
    out.push_back(prepare(codeword.get(j), basis_for_key_bit(bases.get(j))));
  }
  return out;
}

void check_forged_length(const BitWord& forged, const LinearCode& code) {
  if (forged.size() != code.m()) {
    throw InvalidInput("forged message must have m = " + std::to_string(code.m()) + " bits");
  }
}

}  // namespace

std::string_view to_string(DecodeFailurePolicy p) noexcept {
  return p == DecodeFailurePolicy::Abort ? "abort" : "resend_uncorrected";
}

QubitSequence no_message_attack(const NoMessageStrategy& strategy, const LinearCode& code, RandomStream& rng,
                                AdversaryTranscript* transcript) {
  check_forged_length(strategy.forged_message, code);
  const BitWord x_e = BitWord::random(code.n(), rng);
  QubitSequence out = prepare_word(code.encode(strategy.forged_message), x_e);
  if (transcript != nullptr) {
    transcript->x_e = x_e;
    transcript->x_e_prime = x_e;
    transcript->resent = true;
    transcript->forged_message = strategy.forged_message;
  }
  return out;
}

InterceptResendResult intercept_resend_attack(const InterceptResendStrategy& strategy, QubitSequence intercepted,
                                              const LinearCode& code, RandomStream& rng) {
  check_forged_length(strategy.forged_message, code);
  InterceptResendResult result;
  AdversaryTranscript& tr = result.transcript;
  tr.forged_message = strategy.forged_message;
  tr.x_e = BitWord::random(code.n(), rng);
  tr.x_e_prime = tr.x_e;
  if (intercepted.size() != code.n()) return result;

  BitWord m_e(code.n());
  for (std::size_t j = 0; j < code.n(); ++j) {
    if (measure(intercepted[j], basis_for_key_bit(tr.x_e.get(j)), rng)) m_e.set(j, true);
  }
  tr.m_e = m_e;

  if (auto decoded = code.decode_bounded(m_e)) {
    tr.decode_success = true;
    tr.corrected_positions = decoded->corrected_positions;
    for (std::size_t p : tr.corrected_positions) tr.x_e_prime.flip(p);
  } else if (strategy.on_decode_failure == DecodeFailurePolicy::Abort) {
    return result;
  }

  result.resend = prepare_word(code.encode(strategy.forged_message), tr.x_e_prime);
  tr.resent = true;
  return result;
}

AdversaryTranscript NoMessageAdversary::act(ChannelTap& channel, const LinearCode& code, RandomStream& rng) const {
  AdversaryTranscript tr;
  channel.inject(no_message_attack(strategy_, code, rng, &tr));
  return tr;
}

AdversaryTranscript InterceptResendAdversary::act(ChannelTap& channel, const LinearCode& code,
                                                  RandomStream& rng) const {
  auto result = intercept_resend_attack(strategy_, channel.take(), code, rng);
  if (result.resend) channel.inject(std::move(*result.resend));
  return std::move(result.transcript);
}

}  // namespace qauth
