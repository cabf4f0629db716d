#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qauth/codes.hpp"
#include "qauth/gf2m.hpp"

namespace qauth {

/// Narrow-sense primitive binary BCH code of length n = 2^w - 1.
struct BchSpec {
  int w = 0;
  std::size_t designed_t = 0;
  /// BCH bound: half the length of the run of consecutive roots α^1, α^2, ...
  /// of the generator. Always >= designed_t.
  std::size_t t = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  GF2Poly generator_poly;
  std::shared_ptr<const GF2mField> field;
};

/// lcm of the minimal polynomials of α, α^2, ..., α^(2·designed_t).
///
/// Requires 2 <= w <= 8 and 1 <= designed_t < 2^(w-1). Throws UnsupportedSize
/// if the resulting dimension is not positive. `primitive_poly` = 0 selects
/// default_primitive_poly(w).
[[nodiscard]] BchSpec make_bch_spec(int w, std::size_t designed_t, std::uint32_t primitive_poly = 0);

/// Builds the LinearCode for `make_bch_spec(w, designed_t)`.
///
/// The generator is systematic with parity bits first: a message occupies
/// positions n-m .. n-1, and codeword polynomials are
/// c(x) = x^(n-m)·k(x) + (x^(n-m)·k(x) mod g(x)), bit j being the
/// coefficient of x^j. Codes with n - m <= 24 decode by syndrome table;
/// the rest use bch_decode.
[[nodiscard]] LinearCode build_bch(int w, std::size_t designed_t, std::uint32_t primitive_poly = 0);

/// Algebraic bounded-distance decoding: syndromes, Berlekamp–Massey, Chien search.
[[nodiscard]] DecodeResult bch_decode(const BchSpec& spec, const BitWord& received);

/// Error positions found by the algebraic decoder, or nullopt on failure.
[[nodiscard]] std::optional<std::vector<std::size_t>> bch_locate_errors(const BchSpec& spec,
                                                                        const BitWord& received);

class BchLocator final : public ErrorLocator {
 public:
  explicit BchLocator(BchSpec spec) : spec_(std::move(spec)) {}
  [[nodiscard]] std::optional<std::vector<std::size_t>> locate(const BitWord& received) const override {
    return bch_locate_errors(spec_, received);
  }
  [[nodiscard]] DecoderKind kind() const noexcept override { return DecoderKind::Algebraic; }
  [[nodiscard]] const BchSpec& spec() const noexcept { return spec_; }

 private:
  BchSpec spec_;
};

/// Message length of the narrow-sense BCH code with the given parameters,
/// without building matrices.
[[nodiscard]] std::size_t bch_dimension(int w, std::size_t designed_t, std::uint32_t primitive_poly = 0);

}  // namespace qauth
