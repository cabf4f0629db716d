#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qauth/gf2.hpp"

namespace qauth {

/// A successful bounded-distance decode.
///
/// `corrected_positions` lists where the received word differs from
/// `codeword`. Beyond the correction radius a decoder may return a wrong
/// codeword (miscorrection); callers see that as an ordinary Decoded value.
struct Decoded {
  BitWord codeword;
  BitWord message;
  std::vector<std::size_t> corrected_positions;
};

/// Empty on decoder failure.
using DecodeResult = std::optional<Decoded>;

enum class DecoderKind { SyndromeTable, Algebraic, None };

/// Strategy that maps a received word to an error pattern of weight <= t.
class ErrorLocator {
 public:
  virtual ~ErrorLocator() = default;
  /// Error positions to flip, or nullopt when no pattern within the radius
  /// explains the received word.
  [[nodiscard]] virtual std::optional<std::vector<std::size_t>> locate(const BitWord& received) const = 0;
  [[nodiscard]] virtual DecoderKind kind() const noexcept = 0;
};

/// Parameters of the BCH construction, kept so that a code can be
/// re-serialized and decoded algebraically. Populated by build_bch.
struct FieldParams {
  int w = 0;
  std::uint32_t primitive_poly = 0;
};

/// Binary linear block code C[n, m, t] with a public systematic mapping.
///
/// A generator that already contains an identity submatrix is kept as given;
/// any other generator is normalized to reduced row-echelon form. Either way
/// the message bits appear verbatim at `info_positions()`, so message
/// recovery from a codeword is a projection. Instances are immutable and
/// safe to share across threads.
class LinearCode {
 public:
  /// Validates rank(G) = m, rank(H) = n - m and G·H^T = 0. Picks a syndrome
  /// table decoder when n - m <= kMaxTableRedundancy, or uses `locator`
  /// when one is supplied. Throws InvalidInput if two error patterns of
  /// weight <= t share a syndrome.
  LinearCode(std::string name, std::size_t t, BitMatrix generator, BitMatrix parity_check,
             std::shared_ptr<const ErrorLocator> locator = nullptr,
             std::optional<FieldParams> field = std::nullopt);

  static constexpr std::size_t kMaxTableRedundancy = 24;

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t m() const noexcept { return m_; }
  [[nodiscard]] std::size_t t() const noexcept { return t_; }
  [[nodiscard]] const BitMatrix& generator() const noexcept { return generator_; }
  [[nodiscard]] const BitMatrix& parity_check() const noexcept { return parity_check_; }
  [[nodiscard]] const std::vector<std::size_t>& info_positions() const noexcept { return info_positions_; }
  [[nodiscard]] DecoderKind decoder_kind() const noexcept;
  [[nodiscard]] const std::optional<FieldParams>& field() const noexcept { return field_; }

  /// c = message·G.
  [[nodiscard]] BitWord encode(const BitWord& message) const;
  /// word·H^T.
  [[nodiscard]] BitWord syndrome(const BitWord& word) const;
  [[nodiscard]] bool is_codeword(const BitWord& word) const;
  /// Reads the message bits off the information set. Does not check that
  /// `codeword` actually is one.
  [[nodiscard]] BitWord extract_message(const BitWord& codeword) const;

  [[nodiscard]] DecodeResult decode_bounded(const BitWord& received) const;

  /// A_0..A_n by enumerating all 2^m codewords. Throws UnsupportedSize for m > 20.
  [[nodiscard]] std::vector<std::uint64_t> weight_distribution() const;
  /// All 2^m codewords in message order. Throws UnsupportedSize for m > 20.
  [[nodiscard]] std::vector<BitWord> codewords() const;

  static constexpr std::size_t kMaxEnumerableDimension = 20;

 private:
  void check_length(const BitWord& word, std::size_t expected, const char* what) const;

  std::string name_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t t_ = 0;
  BitMatrix generator_;
  BitMatrix parity_check_;
  std::vector<std::size_t> info_positions_;
  std::shared_ptr<const ErrorLocator> locator_;
  std::optional<FieldParams> field_;
};

/// Syndrome lookup decoder: maps each syndrome of a weight <= t pattern to
/// its minimum-weight coset leader.
class SyndromeTableLocator final : public ErrorLocator {
 public:
  /// Throws InvalidInput when two patterns of weight <= t collide, and
  /// UnsupportedSize when n - m > 24.
  SyndromeTableLocator(const BitMatrix& parity_check, std::size_t t);

  [[nodiscard]] std::optional<std::vector<std::size_t>> locate(const BitWord& received) const override;
  [[nodiscard]] DecoderKind kind() const noexcept override { return DecoderKind::SyndromeTable; }
  [[nodiscard]] std::size_t size() const noexcept { return leaders_.size(); }

 private:
  std::vector<std::uint32_t> columns_;
  // Sorted by syndrome for binary search.
  std::vector<std::pair<std::uint32_t, std::vector<std::uint16_t>>> leaders_;
};

/// Systematic parity-check matrix [P^T | I] for a generator [I | P] given
/// by its information set.
[[nodiscard]] BitMatrix parity_check_from_systematic(const BitMatrix& rref_generator,
                                                     const std::vector<std::size_t>& info_positions);

/// Repetition code C[n, 1, (n-1)/2], n odd and >= 3.
[[nodiscard]] LinearCode make_repetition(std::size_t n_odd);
/// Hamming(7,4) in standard form G = [I_4 | P].
[[nodiscard]] LinearCode make_hamming_7_4();

}  // namespace qauth
