#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qauth/adversary.hpp"
#include "qauth/codes.hpp"
#include "qauth/gf2.hpp"
#include "qauth/qsim.hpp"
#include "qauth/random.hpp"

namespace qauth {

/// Shared n-bit basis key x_AB. Single use: the sender marks it used, and
/// a second send with the same key throws KeyReuse. Move-only so the key
/// cannot be duplicated to sidestep that check.
class SecretKey {
 public:
  explicit SecretKey(BitWord bits) : bits_(std::move(bits)) {}
  SecretKey(const SecretKey&) = delete;
  SecretKey& operator=(const SecretKey&) = delete;
  SecretKey(SecretKey&&) noexcept = default;
  SecretKey& operator=(SecretKey&&) noexcept = default;
  ~SecretKey() = default;

  [[nodiscard]] const BitWord& bits() const noexcept { return bits_; }
  [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
  [[nodiscard]] bool used() const noexcept { return used_; }

 private:
  friend QubitSequence alice_send(const BitWord& message, SecretKey& key, const LinearCode& code);

  BitWord bits_;
  bool used_ = false;
};

[[nodiscard]] SecretKey keygen(std::size_t n, RandomStream& rng);

/// Encodes `message` and prepares qubit j as |c_j> in Z when key bit j is 0,
/// or in X when it is 1. Marks the key used.
[[nodiscard]] QubitSequence alice_send(const BitWord& message, SecretKey& key, const LinearCode& code);

enum class RejectReason {
  None,
  ParityCheckFailed,   ///< m_B·H^T != 0
  QubitCountMismatch,  ///< session aborted: too few or too many qubits
};

[[nodiscard]] std::string_view to_string(RejectReason r) noexcept;

class SessionOutcome {
 public:
  static SessionOutcome accept(BitWord message) { return SessionOutcome(std::move(message), RejectReason::None); }
  static SessionOutcome reject(RejectReason reason) { return SessionOutcome(std::nullopt, reason); }

  [[nodiscard]] bool accepted() const noexcept { return message_.has_value(); }
  /// Present only when accepted.
  [[nodiscard]] const std::optional<BitWord>& message() const noexcept { return message_; }
  [[nodiscard]] RejectReason reason() const noexcept { return reason_; }

 private:
  SessionOutcome(std::optional<BitWord> message, RejectReason reason)
      : message_(std::move(message)), reason_(reason) {}
  std::optional<BitWord> message_;
  RejectReason reason_;
};

/// Measures each qubit in the key's basis and runs the parity test. On
/// success the message is read off the code's information set. A wrong
/// qubit count rejects; a consumed handle throws ProtocolViolation.
[[nodiscard]] SessionOutcome bob_receive(QubitSequence qubits, const SecretKey& key, const LinearCode& code,
                                         RandomStream& rng);

struct SessionRecord {
  std::string code_name;
  BitWord message;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t t = 0;
  std::uint64_t seed = 0;
  std::string adversary;  ///< "none" for honest sessions
  SessionOutcome outcome = SessionOutcome::reject(RejectReason::None);
  /// Accepted while an adversary acted, and Bob did not end up with
  /// Alice's message (always true for an accepted no-message session).
  bool forged = false;
  std::optional<AdversaryTranscript> transcript;

  [[nodiscard]] bool accepted() const noexcept { return outcome.accepted(); }
};

/// One authenticated transmission: fresh key, Alice (unless the adversary
/// impersonates her), optional adversary on the channel, then Bob.
///
/// Substreams of `rng`: 0 key, 1 adversary, 2 Bob's measurements.
[[nodiscard]] SessionRecord run_session(const BitWord& message, const LinearCode& code, const Adversary* adversary,
                                        const RandomStream& rng);

}  // namespace qauth
