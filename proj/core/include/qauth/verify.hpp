#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qauth/adversary.hpp"
#include "qauth/analytics.hpp"
#include "qauth/codes.hpp"

namespace qauth {

/// Exact value from an enumeration oracle set against a closed-form value.
struct OracleReport {
  std::string quantity;
  ExactProb exact_value;
  ExactProb formula_value;
  bool equal = false;
  /// exact_value - formula_value
  Rational gap;
};

[[nodiscard]] OracleReport make_report(std::string quantity, ExactProb exact, ExactProb formula);

inline constexpr std::size_t kNoMessageOracleMaxN = 16;
inline constexpr std::size_t kPdecOracleMaxN = 12;
inline constexpr std::size_t kInterceptResendOracleMaxN = 10;

/// Enumerates every Eve basis string and multiplies per-bit agreement
/// probabilities (1 on a matched basis, 1/2 otherwise) for Bob's word to
/// equal c_E. Takes x_AB = 0^n, which loses nothing since only x_E ⊕ x_AB
/// matters. Throws UnsupportedSize for n > 16.
[[nodiscard]] ExactProb oracle_no_message_exact_codeword(const LinearCode& code);

/// Bob accepts any codeword: sum_w A_w (1/4)^w (3/4)^(n-w).
[[nodiscard]] ExactProb oracle_no_message_any_codeword(const LinearCode& code);

/// Exact probability that Eve's decoder returns c_A, by enumerating every
/// basis-match pattern and every outcome on her mismatched positions and
/// running the code's own decoder. Compared against p_dec(n, t).
/// Throws UnsupportedSize for n > 12.
[[nodiscard]] OracleReport oracle_p_dec(const LinearCode& code);

/// Exact intercept-resend success probability for the strategy as
/// implemented, including miscorrections and any-codeword acceptance, set
/// against p_f_prime(n, t). The gap is reported, not required to be zero.
/// Throws UnsupportedSize for n > 10.
[[nodiscard]] OracleReport oracle_intercept_resend(const LinearCode& code,
                                                   DecodeFailurePolicy policy = DecodeFailurePolicy::Abort);

/// Success probability of intercept-resend restricted to x_E = x_AB.
[[nodiscard]] ExactProb oracle_intercept_resend_matched_key(const LinearCode& code);

// ---------------------------------------------------------------------------

struct TrialStats {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;  ///< sessions Bob accepted
  std::uint64_t forged = 0;
  std::uint64_t message_recovered = 0;  ///< accepted with Alice's message
  double estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double confidence = 0.99;
  std::uint64_t seed = 0;

  [[nodiscard]] bool interval_contains(double p) const noexcept { return ci_low <= p && p <= ci_high; }
};

/// Exact binomial (Clopper–Pearson) interval for `successes` out of `trials`.
[[nodiscard]] TrialStats clopper_pearson(std::uint64_t successes, std::uint64_t trials, double confidence = 0.99);

enum class AttackKind { Honest, NoMessage, InterceptResend };

[[nodiscard]] std::string_view to_string(AttackKind k) noexcept;

struct AttackConfig {
  AttackKind kind = AttackKind::Honest;
  /// Fixed message for Alice; drawn uniformly per trial when empty.
  std::optional<BitWord> alice_message;
  /// Eve's forgery; defaults to the complement of Alice's message.
  std::optional<BitWord> forged_message;
  DecodeFailurePolicy on_decode_failure = DecodeFailurePolicy::Abort;
};

/// Thread count from QAUTH_THREADS, else hardware concurrency (at least 1).
[[nodiscard]] unsigned default_thread_count();

/// Runs `trials` independent sessions. Trial i draws all of its randomness
/// from RandomStream(seed).substream(i), so results do not depend on
/// `threads` (0 picks default_thread_count()).
[[nodiscard]] TrialStats monte_carlo(const AttackConfig& config, const LinearCode& code, std::uint64_t trials,
                                     std::uint64_t seed, unsigned threads = 0);

}  // namespace qauth
