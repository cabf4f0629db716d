#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qauth/random.hpp"

namespace qauth {

/// BB84 conjugate bases: Z = {|0>, |1>}, X = {|+>, |->}.
enum class Basis : std::uint8_t { Z = 0, X = 1 };

/// Key bit 0 selects Z, key bit 1 selects X.
[[nodiscard]] constexpr Basis basis_for_key_bit(bool key_bit) noexcept { return key_bit ? Basis::X : Basis::Z; }
[[nodiscard]] std::string_view to_string(Basis b) noexcept;

/// Opaque, measure-once reference to one prepared qubit.
///
/// Only four BB84 states ever occur and nothing is entangled, so the hidden
/// record is just (basis, bit). It is readable solely by `measure`. Handles
/// are move-only: a copy would clone the qubit. A moved-from handle counts
/// as consumed.
class QubitHandle {
 public:
  QubitHandle(const QubitHandle&) = delete;
  QubitHandle& operator=(const QubitHandle&) = delete;
  QubitHandle(QubitHandle&& other) noexcept
      : basis_(other.basis_), bit_(other.bit_), consumed_(std::exchange(other.consumed_, true)) {}
  QubitHandle& operator=(QubitHandle&& other) noexcept {
    basis_ = other.basis_;
    bit_ = other.bit_;
    consumed_ = std::exchange(other.consumed_, true);
    return *this;
  }
  ~QubitHandle() = default;

  [[nodiscard]] bool consumed() const noexcept { return consumed_; }

 private:
  QubitHandle(Basis basis, bool bit) noexcept : basis_(basis), bit_(bit), consumed_(false) {}

  friend QubitHandle prepare(bool bit, Basis basis) noexcept;
  friend bool measure(QubitHandle& handle, Basis basis, RandomStream& rng);

  Basis basis_;
  bool bit_;
  bool consumed_;
};

using QubitSequence = std::vector<QubitHandle>;

/// Fresh, unconsumed qubit in state |bit> (Z) or |+>/|-> (X).
[[nodiscard]] QubitHandle prepare(bool bit, Basis basis) noexcept;

/// Projective measurement. Matched basis returns the prepared bit; the
/// conjugate basis returns a fair coin drawn from `rng`. Consumes the
/// handle; throws ProtocolViolation if it was already consumed.
bool measure(QubitHandle& handle, Basis basis, RandomStream& rng);

/// Measures every handle in order, qubit j in `bases[j]`.
[[nodiscard]] std::vector<bool> measure_all(QubitSequence& qubits, const std::vector<Basis>& bases,
                                            RandomStream& rng);

// ---------------------------------------------------------------------------
// Amplitude-level cross-check for the (basis, bit) shortcut.

struct StateVector {
  std::array<std::complex<double>, 2> amplitudes;
};

inline constexpr double kNormTolerance = 1e-12;

[[nodiscard]] StateVector statevector_of(bool bit, Basis basis);

/// (p0, p1) for measuring `s` in `basis`. Throws InvalidInput when `s` is
/// not normalized within 1e-12.
[[nodiscard]] std::pair<double, double> born_probabilities(const StateVector& s, Basis basis);

// ---------------------------------------------------------------------------

/// The quantum channel between sender and receiver.
///
/// The channel is noiseless and delivers in order. An interposed adversary
/// can `take()` everything in flight and `inject()` replacements before the
/// receiver calls `deliver()`.
class ChannelTap {
 public:
  ChannelTap() = default;
  explicit ChannelTap(QubitSequence in_flight) : in_flight_(std::move(in_flight)) {}

  [[nodiscard]] std::size_t size() const noexcept { return in_flight_.size(); }
  /// Removes and returns everything currently in flight.
  [[nodiscard]] QubitSequence take() { return std::exchange(in_flight_, {}); }
  /// Appends qubits to the in-flight sequence.
  void inject(QubitSequence qubits);
  /// Hands the in-flight sequence to the receiver.
  [[nodiscard]] QubitSequence deliver() { return take(); }

 private:
  QubitSequence in_flight_;
};

[[nodiscard]] ChannelTap channel_send(QubitSequence qubits);

}  // namespace qauth
