#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qauth/codes.hpp"
#include "qauth/gf2.hpp"
#include "qauth/qsim.hpp"
#include "qauth/random.hpp"

namespace qauth {

enum class DecodeFailurePolicy {
  Abort,              ///< send nothing; the forgery fails
  ResendUncorrected,  ///< resend using the uncorrected basis guess x_E
};

[[nodiscard]] std::string_view to_string(DecodeFailurePolicy p) noexcept;

/// What Eve did in one trial. Holds only data Eve herself produced or
/// observed; the shared key never appears here.
struct AdversaryTranscript {
  BitWord x_e;
  /// Eve's measured word (intercept-resend only).
  std::optional<BitWord> m_e;
  bool decode_success = false;
  /// Positions where m_E differs from the decoded codeword.
  std::vector<std::size_t> corrected_positions;
  BitWord x_e_prime;
  bool resent = false;
  BitWord forged_message;
};

/// Eve sends her own qubits to Bob before Alice transmits anything.
struct NoMessageStrategy {
  BitWord forged_message;
};

/// Eve measures Alice's qubits, decodes, corrects her basis guess and resends.
struct InterceptResendStrategy {
  BitWord forged_message;
  DecodeFailurePolicy on_decode_failure = DecodeFailurePolicy::Abort;
};

/// Draws x_E uniformly and prepares encode(forged_message) in those bases.
[[nodiscard]] QubitSequence no_message_attack(const NoMessageStrategy& strategy, const LinearCode& code,
                                              RandomStream& rng, AdversaryTranscript* transcript = nullptr);

struct InterceptResendResult {
  /// Empty when Eve aborts.
  std::optional<QubitSequence> resend;
  AdversaryTranscript transcript;
};

/// Intercept-resend with key correction.
///
/// x_E is drawn uniformly and each intercepted qubit measured in the basis
/// it selects. If decode_bounded(m_E) returns ĉ, every position where m_E
/// and ĉ differ has its basis guess flipped, giving x_E'. Eve then prepares
/// encode(forged_message) in the x_E' bases. A miscorrected ĉ is used as
/// is, since Eve cannot tell. On decode failure the strategy's policy
/// applies. A sequence of the wrong length is an abort.
[[nodiscard]] InterceptResendResult intercept_resend_attack(const InterceptResendStrategy& strategy,
                                                            QubitSequence intercepted, const LinearCode& code,
                                                            RandomStream& rng);

/// Channel-level interface used by the session runner. Implementations see
/// only the channel, the public code and their own randomness.
class Adversary {
 public:
  virtual ~Adversary() = default;
  [[nodiscard]] virtual std::string_view name() const noexcept = 0;
  /// True when the adversary transmits in place of the sender.
  [[nodiscard]] virtual bool impersonates_sender() const noexcept { return false; }
  virtual AdversaryTranscript act(ChannelTap& channel, const LinearCode& code, RandomStream& rng) const = 0;
};

class NoMessageAdversary final : public Adversary {
 public:
  explicit NoMessageAdversary(NoMessageStrategy strategy) : strategy_(std::move(strategy)) {}
  [[nodiscard]] std::string_view name() const noexcept override { return "no-message"; }
  [[nodiscard]] bool impersonates_sender() const noexcept override { return true; }
  AdversaryTranscript act(ChannelTap& channel, const LinearCode& code, RandomStream& rng) const override;

 private:
  NoMessageStrategy strategy_;
};

class InterceptResendAdversary final : public Adversary {
 public:
  explicit InterceptResendAdversary(InterceptResendStrategy strategy) : strategy_(std::move(strategy)) {}
  [[nodiscard]] std::string_view name() const noexcept override { return "intercept-resend"; }
  AdversaryTranscript act(ChannelTap& channel, const LinearCode& code, RandomStream& rng) const override;

 private:
  InterceptResendStrategy strategy_;
};

}  // namespace qauth
