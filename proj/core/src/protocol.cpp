#include "qauth/protocol.hpp"

#include "qauth/error.hpp"

namespace qauth {

SecretKey keygen(std::size_t n, RandomStream& rng) {
  if (n == 0) throw InvalidInput("key length must be at least 1");
  return SecretKey(BitWord::random(n, rng));
}

QubitSequence alice_send(const BitWord& message, SecretKey& key, const LinearCode& code) {
  if (key.used_) throw KeyReuse("secret key already used for a transmission");
  if (key.size() != code.n()) throw InvalidInput("key length must equal n");
  const BitWord c = code.encode(message);
  key.used_ = true;
  QubitSequence out;
  out.reserve(code.n());
  for (std::size_t j = 0; j < code.n(); ++j) {
    out.push_back(prepare(c.get(j), basis_for_key_bit(key.bits().get(j))));
  }
  return out;
}

std::string_view to_string(RejectReason r) noexcept {
  switch (r) {
    case RejectReason::None: return "none";
    case RejectReason::ParityCheckFailed: return "parity_check_failed";
    case RejectReason::QubitCountMismatch: return "qubit_count_mismatch";
  }
  return "unknown";
}

SessionOutcome bob_receive(QubitSequence qubits, const SecretKey& key, const LinearCode& code, RandomStream& rng) {
  if (key.size() != code.n()) throw InvalidInput("key length must equal n");
  if (qubits.size() != code.n()) return SessionOutcome::reject(RejectReason::QubitCountMismatch);
  BitWord m_b(code.n());
  for (std::size_t j = 0; j < code.n(); ++j) {
    if (measure(qubits[j], basis_for_key_bit(key.bits().get(j)), rng)) m_b.set(j, true);
  }
  if (!code.is_codeword(m_b)) return SessionOutcome::reject(RejectReason::ParityCheckFailed);
  return SessionOutcome::accept(code.extract_message(m_b));
}

SessionRecord run_session(const BitWord& message, const LinearCode& code, const Adversary* adversary,
                          const RandomStream& rng) {
  if (message.size() != code.m()) throw InvalidInput("message length must equal m");
  SessionRecord rec;
  rec.code_name = code.name();
  rec.message = message;
  rec.n = code.n();
  rec.m = code.m();
  rec.t = code.t();
  rec.seed = rng.seed();
  rec.adversary = adversary != nullptr ? std::string(adversary->name()) : "none";

  RandomStream key_rng = rng.substream(0);
  RandomStream eve_rng = rng.substream(1);
  RandomStream bob_rng = rng.substream(2);

  SecretKey key = keygen(code.n(), key_rng);
  ChannelTap channel;
  if (adversary == nullptr || !adversary->impersonates_sender()) {
    channel = channel_send(alice_send(message, key, code));
  }
  if (adversary != nullptr) rec.transcript = adversary->act(channel, code, eve_rng);

  rec.outcome = bob_receive(channel.deliver(), key, code, bob_rng);
  if (adversary != nullptr && rec.outcome.accepted()) {
    rec.forged = adversary->impersonates_sender() || *rec.outcome.message() != message;
  }
  return rec;
}

}  // namespace qauth
