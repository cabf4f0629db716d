#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qauth/random.hpp"

namespace qauth {

/// Largest supported word length in bits.
inline constexpr std::size_t kMaxBits = 1024;

/// Fixed-length vector over GF(2), bit-packed into 64-bit blocks.
///
/// Index 0 is the leftmost, first-transmitted bit. String and hex forms
/// follow the same order: "1000" has bit 0 set, and hex "8" with length 4
/// is the same word.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::size_t length);

  /// Parses a string of '0'/'1' characters.
  static BitWord from_string(std::string_view bits);
  /// Parses hex with bit 0 as the MSB of the first digit. Padding bits past
  /// `length` must be zero.
  static BitWord from_hex(std::string_view hex, std::size_t length);
  static BitWord ones(std::size_t length);
  static BitWord random(std::size_t length, RandomStream& rng);
  /// The low `length` bits of `value`, bit 0 taken from value's LSB.
  static BitWord from_uint(std::uint64_t value, std::size_t length);

  [[nodiscard]] std::size_t size() const noexcept { return length_; }
  [[nodiscard]] bool empty() const noexcept { return length_ == 0; }

  [[nodiscard]] bool get(std::size_t i) const;
  [[nodiscard]] bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  [[nodiscard]] std::size_t weight() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept;
  /// Positions of the 1-bits, ascending.
  [[nodiscard]] std::vector<std::size_t> support() const;
  /// Parity of the AND with `other` (the GF(2) inner product).
  [[nodiscard]] bool dot(const BitWord& other) const;
  /// Inverse of from_uint; requires size() <= 64.
  [[nodiscard]] std::uint64_t to_uint() const;

  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] std::string to_hex() const;

  [[nodiscard]] std::span<const std::uint64_t> blocks() const noexcept { return blocks_; }

  BitWord& operator^=(const BitWord& other);
  BitWord& operator&=(const BitWord& other);
  friend BitWord operator^(BitWord lhs, const BitWord& rhs) { return lhs ^= rhs; }
  friend BitWord operator&(BitWord lhs, const BitWord& rhs) { return lhs &= rhs; }
  BitWord operator~() const;

  friend bool operator==(const BitWord&, const BitWord&) = default;

 private:
  void check_index(std::size_t i) const;
  void check_same_length(const BitWord& other) const;

  std::size_t length_ = 0;
  std::vector<std::uint64_t> blocks_;
};

[[nodiscard]] std::size_t hamming_weight(const BitWord& v) noexcept;
[[nodiscard]] std::size_t hamming_distance(const BitWord& a, const BitWord& b);

/// Dense GF(2) matrix stored as packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  /// All rows must have equal length.
  explicit BitMatrix(std::vector<BitWord> rows);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  [[nodiscard]] const BitWord& row(std::size_t r) const;
  [[nodiscard]] BitWord column(std::size_t c) const;
  [[nodiscard]] const std::vector<BitWord>& row_words() const noexcept { return rows_; }

  [[nodiscard]] BitMatrix transpose() const;
  [[nodiscard]] BitMatrix operator*(const BitMatrix& rhs) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitWord> rows_;
};

enum class Orientation {
  Direct,      ///< M·v, |v| = cols, result has rows() bits (syndromes)
  Transposed,  ///< v·M, |v| = rows, result has cols() bits (encodings)
};

[[nodiscard]] BitWord mat_vec_mul(const BitMatrix& m, const BitWord& v,
                                  Orientation orientation = Orientation::Direct);

[[nodiscard]] std::size_t rank(const BitMatrix& m);

/// Reduced row-echelon form with zero rows dropped.
struct RowEchelon {
  BitMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

[[nodiscard]] RowEchelon row_echelon(const BitMatrix& m);
/// Reduced row-echelon form of `m`, same shape (zero rows kept at the bottom).
[[nodiscard]] BitMatrix row_reduce(const BitMatrix& m);

}  // namespace qauth
