#include "qauth/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/special_functions/beta.hpp>

#include "qauth/error.hpp"
#include "qauth/protocol.hpp"

namespace qauth {

namespace {

BigInt pow2(std::size_t e) {
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

void check_size(const LinearCode& code, std::size_t limit, const char* oracle) {
  if (code.n() > limit) {
    throw UnsupportedSize(std::string(oracle) + " enumerates 2^n cases and supports n <= " + std::to_string(limit) +
                          "; code " + code.name() + " has n = " + std::to_string(code.n()) +
                          ". Try a smaller code such as rep3, rep5 or hamming74");
  }
}

// Codewords as bit masks (bit j = position j), for n <= 64.
std::vector<std::uint64_t> codeword_masks(const LinearCode& code) {
  std::vector<std::uint64_t> out;
  for (const auto& c : code.codewords()) out.push_back(c.to_uint());
  return out;
}

// Probability numerator over 2^(3n) for one (x_E, e) branch of intercept-resend.
struct IrBranch {
  bool resend = false;
  std::uint64_t x_e_prime = 0;
};

IrBranch intercept_branch(const LinearCode& code, std::uint64_t x_e, std::uint64_t error, DecodeFailurePolicy policy) {
  const std::size_t n = code.n();
  // c_A = 0, so Eve's measured word is the error pattern itself.
  auto decoded = code.decode_bounded(BitWord::from_uint(error, n));
  IrBranch b;
  b.x_e_prime = x_e;
  if (decoded) {
    for (std::size_t p : decoded->corrected_positions) b.x_e_prime ^= std::uint64_t{1} << p;
    b.resend = true;
  } else {
    b.resend = policy == DecodeFailurePolicy::ResendUncorrected;
  }
  return b;
}

}  // namespace

OracleReport make_report(std::string quantity, ExactProb exact, ExactProb formula) {
  OracleReport r;
  r.quantity = std::move(quantity);
  r.gap = exact.value() - formula.value();
  r.equal = r.gap == 0;
  r.exact_value = std::move(exact);
  r.formula_value = std::move(formula);
  return r;
}

ExactProb oracle_no_message_exact_codeword(const LinearCode& code) {
  check_size(code, kNoMessageOracleMaxN, "oracle_no_message_exact_codeword");
  const std::size_t n = code.n();
  // Each x_E has probability 2^-n; each wrong basis halves the chance.
  // Common denominator 2^(2n).
  BigInt num = 0;
  for (std::uint64_t x_e = 0; x_e < (std::uint64_t{1} << n); ++x_e) {
    const auto wrong = static_cast<std::size_t>(std::popcount(x_e));
    num += pow2(n - wrong);
  }
  return ExactProb::ratio(num, pow2(2 * n));
}

ExactProb oracle_no_message_any_codeword(const LinearCode& code) {
  const auto dist = code.weight_distribution();
  const std::size_t n = code.n();
  // A_w · 1^w · 3^(n-w) / 4^n
  BigInt num = 0;
  for (std::size_t w = 0; w <= n; ++w) {
    if (dist[w] == 0) continue;
    BigInt term = dist[w];
    for (std::size_t i = 0; i < n - w; ++i) term *= 3;
    num += term;
  }
  return ExactProb::ratio(num, pow2(2 * n));
}

OracleReport oracle_p_dec(const LinearCode& code) {
  check_size(code, kPdecOracleMaxN, "oracle_p_dec");
  const std::size_t n = code.n();
  const BitWord zero(n);
  // Denominator 2^(2n): x_E weight 2^-n, each outcome on |D| wrong bases 2^-|D|.
  BigInt num = 0;
  for (std::uint64_t x_e = 0; x_e < (std::uint64_t{1} << n); ++x_e) {
    const auto d = static_cast<std::size_t>(std::popcount(x_e));
    const BigInt weight = pow2(n - d);
    // Submask walk over error patterns supported on the wrong-basis set.
    std::uint64_t e = x_e;
    while (true) {
      auto decoded = code.decode_bounded(BitWord::from_uint(e, n));
      if (decoded && decoded->codeword == zero) num += weight;
      if (e == 0) break;
      e = (e - 1) & x_e;
    }
  }
  return make_report("p_dec", ExactProb::ratio(num, pow2(2 * n)), p_dec(n, code.t()));
}

OracleReport oracle_intercept_resend(const LinearCode& code, DecodeFailurePolicy policy) {
  check_size(code, kInterceptResendOracleMaxN, "oracle_intercept_resend");
  const std::size_t n = code.n();
  const auto masks = codeword_masks(code);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // Denominator 2^(3n). Branch (x_E, e) has probability 2^-n · 2^-|D|; Bob
  // accepts when his random bits on the residual wrong set D' form a codeword.
  BigInt num = 0;
  for (std::uint64_t x_e = 0; x_e <= full; ++x_e) {
    const auto d = static_cast<std::size_t>(std::popcount(x_e));
    std::uint64_t e = x_e;
    while (true) {
      const IrBranch b = intercept_branch(code, x_e, e, policy);
      if (b.resend) {
        const auto d_prime = static_cast<std::size_t>(std::popcount(b.x_e_prime));
        const auto outside = ~b.x_e_prime & full;
        const auto inside = static_cast<std::size_t>(
            std::count_if(masks.begin(), masks.end(), [outside](std::uint64_t c) { return (c & outside) == 0; }));
        num += BigInt(inside) * pow2(2 * n - d - d_prime);
      }
      if (e == 0) break;
      e = (e - 1) & x_e;
    }
  }
  return make_report("p_f_prime", ExactProb::ratio(num, pow2(3 * n)), p_f_prime(n, code.t()));
}

ExactProb oracle_intercept_resend_matched_key(const LinearCode& code) {
  check_size(code, kInterceptResendOracleMaxN, "oracle_intercept_resend");
  // x_E = x_AB = 0: Eve measures c_A exactly, D is empty, only e = 0.
  const IrBranch b = intercept_branch(code, 0, 0, DecodeFailurePolicy::Abort);
  if (!b.resend) return ExactProb(Rational(0));
  const auto masks = codeword_masks(code);
  const std::uint64_t outside = ~b.x_e_prime & ((std::uint64_t{1} << code.n()) - 1);
  const auto inside = std::count_if(masks.begin(), masks.end(), [outside](std::uint64_t c) { return (c & outside) == 0; });
  return ExactProb::ratio(BigInt(inside), pow2(static_cast<std::size_t>(std::popcount(b.x_e_prime))));
}

// ---------------------------------------------------------------------------

TrialStats clopper_pearson(std::uint64_t successes, std::uint64_t trials, double confidence) {
  if (trials == 0) throw InvalidInput("clopper_pearson: trials must be >= 1");
  if (successes > trials) throw InvalidInput("clopper_pearson: successes exceed trials");
  TrialStats s;
  s.trials = trials;
  s.successes = successes;
  s.confidence = confidence;
  const double alpha = 1.0 - confidence;
  const auto k = static_cast<double>(successes);
  const auto n = static_cast<double>(trials);
  s.estimate = k / n;
  s.ci_low = successes == 0 ? 0.0 : boost::math::ibeta_inv(k, n - k + 1.0, alpha / 2.0);
  s.ci_high = successes == trials ? 1.0 : boost::math::ibeta_inv(k + 1.0, n - k, 1.0 - alpha / 2.0);
  s.ci_low = std::min(s.ci_low, s.estimate);
  s.ci_high = std::max(s.ci_high, s.estimate);
  return s;
}

std::string_view to_string(AttackKind k) noexcept {
  switch (k) {
    case AttackKind::Honest: return "honest";
    case AttackKind::NoMessage: return "no-message";
    case AttackKind::InterceptResend: return "intercept-resend";
  }
  return "unknown";
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("QAUTH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

TrialStats monte_carlo(const AttackConfig& config, const LinearCode& code, std::uint64_t trials, std::uint64_t seed,
                       unsigned threads) {
  if (trials == 0) throw InvalidInput("monte_carlo: trials must be >= 1");
  if (config.alice_message && config.alice_message->size() != code.m()) {
    throw InvalidInput("Alice's message must have m bits");
  }
  if (config.forged_message && config.forged_message->size() != code.m()) {
    throw InvalidInput("forged message must have m bits");
  }
  if (config.kind == AttackKind::InterceptResend && code.decoder_kind() == DecoderKind::None) {
    throw UnsupportedSize("intercept-resend needs a decoder for code " + code.name());
  }
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));

  const RandomStream root(seed);
  struct Counts {
    std::uint64_t accepted = 0;
    std::uint64_t forged = 0;
    std::uint64_t recovered = 0;
  };

  auto run_range = [&](std::uint64_t begin, std::uint64_t end, Counts& out) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const RandomStream trial = root.substream(i);
      RandomStream msg_rng = trial.substream(3);
      const BitWord message = config.alice_message ? *config.alice_message : BitWord::random(code.m(), msg_rng);
      const BitWord forged = config.forged_message ? *config.forged_message : ~message;

      SessionRecord rec;
      switch (config.kind) {
        case AttackKind::Honest:
          rec = run_session(message, code, nullptr, trial);
          break;
        case AttackKind::NoMessage: {
          const NoMessageAdversary eve(NoMessageStrategy{forged});
          rec = run_session(message, code, &eve, trial);
          break;
        }
        case AttackKind::InterceptResend: {
          const InterceptResendAdversary eve(InterceptResendStrategy{forged, config.on_decode_failure});
          rec = run_session(message, code, &eve, trial);
          break;
        }
      }
      if (rec.accepted()) {
        ++out.accepted;
        if (*rec.outcome.message() == message) ++out.recovered;
      }
      if (rec.forged) ++out.forged;
    }
  };

  std::vector<Counts> partial(threads);
  if (threads == 1) {
    run_range(0, trials, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = trials * w / threads;
      const std::uint64_t end = trials * (w + 1) / threads;
      pool.emplace_back([&, begin, end, w] { run_range(begin, end, partial[w]); });
    }
  }

  Counts total;
  for (const auto& c : partial) {
    total.accepted += c.accepted;
    total.forged += c.forged;
    total.recovered += c.recovered;
  }
  TrialStats stats = clopper_pearson(total.accepted, trials, 0.99);
  stats.forged = total.forged;
  stats.message_recovered = total.recovered;
  stats.seed = seed;
  return stats;
}

}  // namespace qauth
