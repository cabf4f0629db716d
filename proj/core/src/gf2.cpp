#include "qauth/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "qauth/error.hpp"

namespace qauth {

namespace {

constexpr std::size_t kBlockBits = 64;

constexpr std::size_t block_count(std::size_t bits) { return (bits + kBlockBits - 1) / kBlockBits; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitWord::BitWord(std::size_t length) : length_(length), blocks_(block_count(length), 0) {
  if (length > kMaxBits) {
    throw InvalidInput("BitWord length " + std::to_string(length) + " exceeds limit " +
                       std::to_string(kMaxBits));
  }
}

BitWord BitWord::from_string(std::string_view bits) {
  BitWord w(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      w.set(i, true);
    } else if (bits[i] != '0') {
      throw InvalidInput("bit string contains non-binary symbol '" + std::string(1, bits[i]) + "'");
    }
  }
  return w;
}

BitWord BitWord::from_hex(std::string_view hex, std::size_t length) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.size() != (length + 3) / 4) {
    throw InvalidInput("hex string of " + std::to_string(hex.size()) + " digits cannot encode " +
                       std::to_string(length) + " bits");
  }
  BitWord w(length);
  for (std::size_t d = 0; d < hex.size(); ++d) {
    const int v = hex_value(hex[d]);
    if (v < 0) throw InvalidInput("invalid hex digit '" + std::string(1, hex[d]) + "'");
    for (int b = 0; b < 4; ++b) {
      if (((v >> (3 - b)) & 1) == 0) continue;
      const std::size_t i = d * 4 + static_cast<std::size_t>(b);
      if (i >= length) throw InvalidInput("nonzero padding bit in hex string");
      w.set(i, true);
    }
  }
  return w;
}

BitWord BitWord::ones(std::size_t length) { return ~BitWord(length); }

BitWord BitWord::random(std::size_t length, RandomStream& rng) {
  BitWord w(length);
  for (auto& block : w.blocks_) block = rng();
  if (length % kBlockBits != 0 && !w.blocks_.empty()) {
    w.blocks_.back() &= (std::uint64_t{1} << (length % kBlockBits)) - 1;
  }
  return w;
}

BitWord BitWord::from_uint(std::uint64_t value, std::size_t length) {
  if (length > 64) throw InvalidInput("from_uint supports at most 64 bits");
  BitWord w(length);
  if (length > 0) {
    w.blocks_[0] = length == 64 ? value : value & ((std::uint64_t{1} << length) - 1);
  }
  return w;
}

void BitWord::check_index(std::size_t i) const {
  if (i >= length_) {
    throw InvalidInput("bit index " + std::to_string(i) + " out of range for length " +
                       std::to_string(length_));
  }
}

void BitWord::check_same_length(const BitWord& other) const {
  if (other.length_ != length_) {
    throw InvalidInput("length mismatch: " + std::to_string(length_) + " vs " +
                       std::to_string(other.length_));
  }
}

bool BitWord::get(std::size_t i) const {
  check_index(i);
  return ((blocks_[i / kBlockBits] >> (i % kBlockBits)) & 1U) != 0;
}

void BitWord::set(std::size_t i, bool value) {
  check_index(i);
  const std::uint64_t mask = std::uint64_t{1} << (i % kBlockBits);
  if (value) {
    blocks_[i / kBlockBits] |= mask;
  } else {
    blocks_[i / kBlockBits] &= ~mask;
  }
}

void BitWord::flip(std::size_t i) {
  check_index(i);
  blocks_[i / kBlockBits] ^= std::uint64_t{1} << (i % kBlockBits);
}

std::size_t BitWord::weight() const noexcept {
  std::size_t total = 0;
  for (auto block : blocks_) total += static_cast<std::size_t>(std::popcount(block));
  return total;
}

bool BitWord::is_zero() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(), [](std::uint64_t b) { return b == 0; });
}

std::vector<std::size_t> BitWord::support() const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    std::uint64_t block = blocks_[b];
    while (block != 0) {
      out.push_back(b * kBlockBits + static_cast<std::size_t>(std::countr_zero(block)));
      block &= block - 1;
    }
  }
  return out;
}

bool BitWord::dot(const BitWord& other) const {
  check_same_length(other);
  std::uint64_t acc = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) acc ^= blocks_[b] & other.blocks_[b];
  return (std::popcount(acc) & 1) != 0;
}

std::uint64_t BitWord::to_uint() const {
  if (length_ > 64) throw InvalidInput("to_uint requires at most 64 bits");
  return blocks_.empty() ? 0 : blocks_[0];
}

std::string BitWord::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::string BitWord::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s((length_ + 3) / 4, '0');
  for (std::size_t d = 0; d < s.size(); ++d) {
    int v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = d * 4 + b;
      v = (v << 1) | ((i < length_ && get(i)) ? 1 : 0);
    }
    s[d] = kDigits[v];
  }
  return s;
}

BitWord& BitWord::operator^=(const BitWord& other) {
  check_same_length(other);
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] ^= other.blocks_[b];
  return *this;
}

BitWord& BitWord::operator&=(const BitWord& other) {
  check_same_length(other);
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] &= other.blocks_[b];
  return *this;
}

BitWord BitWord::operator~() const {
  BitWord w = *this;
  for (auto& block : w.blocks_) block = ~block;
  if (length_ % kBlockBits != 0 && !w.blocks_.empty()) {
    w.blocks_.back() &= (std::uint64_t{1} << (length_ % kBlockBits)) - 1;
  }
  return w;
}

std::size_t hamming_weight(const BitWord& v) noexcept { return v.weight(); }

std::size_t hamming_distance(const BitWord& a, const BitWord& b) { return (a ^ b).weight(); }

// ---------------------------------------------------------------------------

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitWord(cols)) {}

BitMatrix::BitMatrix(std::vector<BitWord> rows) : rows_(std::move(rows)) {
  if (!rows_.empty()) cols_ = rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw InvalidInput("BitMatrix rows must have equal length");
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<BitWord> words;
  words.reserve(rows.size());
  for (auto r : rows) words.push_back(BitWord::from_string(r));
  return BitMatrix(std::move(words));
}

bool BitMatrix::get(std::size_t r, std::size_t c) const { return row(r).get(c); }

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_.size()) throw InvalidInput("row index out of range");
  rows_[r].set(c, value);
}

const BitWord& BitMatrix::row(std::size_t r) const {
  if (r >= rows_.size()) throw InvalidInput("row index out of range");
  return rows_[r];
}

BitWord BitMatrix::column(std::size_t c) const {
  BitWord out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].get(c)) out.set(r, true);
  }
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c : rows_[r].support()) t.set(c, r, true);
  }
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows()) throw InvalidInput("matrix product dimension mismatch");
  std::vector<BitWord> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(mat_vec_mul(rhs, r, Orientation::Transposed));
  BitMatrix result(std::move(out));
  result.cols_ = rhs.cols();
  return result;
}

BitWord mat_vec_mul(const BitMatrix& m, const BitWord& v, Orientation orientation) {
  if (orientation == Orientation::Direct) {
    if (v.size() != m.cols()) {
      throw InvalidInput("mat_vec_mul: vector length " + std::to_string(v.size()) +
                         " != column count " + std::to_string(m.cols()));
    }
    BitWord out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m.row(r).dot(v)) out.set(r, true);
    }
    return out;
  }
  if (v.size() != m.rows()) {
    throw InvalidInput("mat_vec_mul: vector length " + std::to_string(v.size()) +
                       " != row count " + std::to_string(m.rows()));
  }
  BitWord out(m.cols());
  for (std::size_t r : v.support()) out ^= m.row(r);
  return out;
}

RowEchelon row_echelon(const BitMatrix& m) {
  std::vector<BitWord> rows = m.row_words();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(next), rows.end(),
                           [c](const BitWord& r) { return r.get(c); });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(next), it);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
    }
    pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  BitMatrix reduced = rows.empty() ? BitMatrix(0, m.cols()) : BitMatrix(std::move(rows));
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) { return row_echelon(m).pivot_columns.size(); }

BitMatrix row_reduce(const BitMatrix& m) {
  auto ech = row_echelon(m);
  std::vector<BitWord> rows = ech.reduced.row_words();
  rows.resize(m.rows(), BitWord(m.cols()));
  if (rows.empty()) return BitMatrix(0, m.cols());
  return BitMatrix(std::move(rows));
}

}  // namespace qauth
