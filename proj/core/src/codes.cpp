#include "qauth/codes.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "qauth/error.hpp"

namespace qauth {

namespace {

constexpr std::uint64_t kMaxTablePatterns = std::uint64_t{1} << 22;

std::uint64_t binomial_u64(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMaxTablePatterns) return kMaxTablePatterns + 1;
  }
  return r;
}

// Finds an identity submatrix: for each row r, a column that is the unit
// vector e_r. Returns nothing if G is not already systematic.
std::optional<std::vector<std::size_t>> systematic_positions(const BitMatrix& g) {
  std::vector<std::optional<std::size_t>> found(g.rows());
  for (std::size_t c = 0; c < g.cols(); ++c) {
    const BitWord col = g.column(c);
    if (col.weight() != 1) continue;
    const std::size_t r = col.support().front();
    if (!found[r]) found[r] = c;
  }
  std::vector<std::size_t> out;
  for (const auto& f : found) {
    if (!f) return std::nullopt;
    out.push_back(*f);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

SyndromeTableLocator::SyndromeTableLocator(const BitMatrix& parity_check, std::size_t t) {
  const std::size_t n = parity_check.cols();
  const std::size_t r = parity_check.rows();
  if (r > LinearCode::kMaxTableRedundancy) {
    throw UnsupportedSize("syndrome table needs n - m <= 24, got " + std::to_string(r));
  }
  std::uint64_t patterns = 0;
  for (std::size_t w = 0; w <= t; ++w) patterns += binomial_u64(n, w);
  if (patterns > kMaxTablePatterns) {
    throw UnsupportedSize("syndrome table would hold more than 2^22 error patterns");
  }

  columns_.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    columns_[c] = static_cast<std::uint32_t>(parity_check.column(c).to_uint());
  }

  leaders_.reserve(static_cast<std::size_t>(patterns));
  std::vector<std::uint16_t> chosen;
  // Depth-first over position subsets of size <= t, ascending positions.
  auto visit = [&](auto&& self, std::size_t start, std::uint32_t syn) -> void {
    leaders_.emplace_back(syn, chosen);
    if (chosen.size() == t) return;
    for (std::size_t p = start; p < n; ++p) {
      chosen.push_back(static_cast<std::uint16_t>(p));
      self(self, p + 1, syn ^ columns_[p]);
      chosen.pop_back();
    }
  };
  visit(visit, 0, 0);

  std::sort(leaders_.begin(), leaders_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < leaders_.size(); ++i) {
    if (leaders_[i].first == leaders_[i - 1].first) {
      throw InvalidInput("two error patterns of weight <= " + std::to_string(t) +
                         " share a syndrome; the code cannot correct t errors");
    }
  }
}

std::optional<std::vector<std::size_t>> SyndromeTableLocator::locate(const BitWord& received) const {
  std::uint32_t syn = 0;
  for (std::size_t p : received.support()) syn ^= columns_[p];
  auto it = std::lower_bound(leaders_.begin(), leaders_.end(), syn,
                             [](const auto& entry, std::uint32_t key) { return entry.first < key; });
  if (it == leaders_.end() || it->first != syn) return std::nullopt;
  return std::vector<std::size_t>(it->second.begin(), it->second.end());
}

// ---------------------------------------------------------------------------

BitMatrix parity_check_from_systematic(const BitMatrix& generator, const std::vector<std::size_t>& info_positions) {
  const std::size_t n = generator.cols();
  std::vector<bool> is_info(n, false);
  for (std::size_t p : info_positions) is_info[p] = true;
  std::vector<BitWord> rows;
  for (std::size_t p = 0; p < n; ++p) {
    if (is_info[p]) continue;
    BitWord h(n);
    h.set(p, true);
    for (std::size_t r = 0; r < info_positions.size(); ++r) {
      if (generator.get(r, p)) h.set(info_positions[r], true);
    }
    rows.push_back(std::move(h));
  }
  if (rows.empty()) return BitMatrix(0, n);
  return BitMatrix(std::move(rows));
}

LinearCode::LinearCode(std::string name, std::size_t t, BitMatrix generator, BitMatrix parity_check,
                       std::shared_ptr<const ErrorLocator> locator, std::optional<FieldParams> field)
    : name_(std::move(name)),
      n_(generator.cols()),
      m_(generator.rows()),
      t_(t),
      parity_check_(std::move(parity_check)),
      locator_(std::move(locator)),
      field_(field) {
  if (m_ == 0 || n_ == 0) throw InvalidInput("code must have n >= 1 and m >= 1");
  if (m_ > n_) throw InvalidInput("code dimension m exceeds length n");
  if (n_ > kMaxBits) throw InvalidInput("code length exceeds " + std::to_string(kMaxBits));
  if (parity_check_.cols() != n_) throw InvalidInput("H and G must have the same column count");
  if (parity_check_.rows() != n_ - m_) {
    throw InvalidInput("H must have n - m = " + std::to_string(n_ - m_) + " rows, got " +
                       std::to_string(parity_check_.rows()));
  }
  if (rank(generator) != m_) throw InvalidInput("generator matrix is rank deficient");
  if (rank(parity_check_) != n_ - m_) throw InvalidInput("parity-check matrix is rank deficient");
  if (t_ >= n_) throw InvalidInput("t must be smaller than n");

  if (auto sys = systematic_positions(generator)) {
    generator_ = std::move(generator);
    info_positions_ = std::move(*sys);
  } else {
    auto ech = row_echelon(generator);
    generator_ = std::move(ech.reduced);
    info_positions_ = std::move(ech.pivot_columns);
  }

  for (const auto& g : generator_.row_words()) {
    if (!mat_vec_mul(parity_check_, g, Orientation::Direct).is_zero()) {
      throw InvalidInput("G·H^T != 0: generator rows are not codewords of H");
    }
  }

  if (!locator_ && n_ - m_ <= kMaxTableRedundancy) {
    locator_ = std::make_shared<SyndromeTableLocator>(parity_check_, t_);
  }
}

DecoderKind LinearCode::decoder_kind() const noexcept {
  return locator_ ? locator_->kind() : DecoderKind::None;
}

void LinearCode::check_length(const BitWord& word, std::size_t expected, const char* what) const {
  if (word.size() != expected) {
    throw InvalidInput(std::string(what) + " length " + std::to_string(word.size()) + " != " +
                       std::to_string(expected) + " for code " + name_);
  }
}

BitWord LinearCode::encode(const BitWord& message) const {
  check_length(message, m_, "message");
  return mat_vec_mul(generator_, message, Orientation::Transposed);
}

BitWord LinearCode::syndrome(const BitWord& word) const {
  check_length(word, n_, "word");
  return mat_vec_mul(parity_check_, word, Orientation::Direct);
}

bool LinearCode::is_codeword(const BitWord& word) const { return syndrome(word).is_zero(); }

BitWord LinearCode::extract_message(const BitWord& codeword) const {
  check_length(codeword, n_, "codeword");
  BitWord msg(m_);
  for (std::size_t r = 0; r < m_; ++r) {
    if (codeword.get(info_positions_[r])) msg.set(r, true);
  }
  return msg;
}

DecodeResult LinearCode::decode_bounded(const BitWord& received) const {
  check_length(received, n_, "received word");
  if (!locator_) throw UnsupportedSize("no bounded-distance decoder available for code " + name_);
  auto positions = locator_->locate(received);
  if (!positions) return std::nullopt;
  BitWord codeword = received;
  for (std::size_t p : *positions) codeword.flip(p);
  // Algebraic locators can report a pattern that does not land on a codeword
  // when the error weight exceeds t; treat that as failure.
  if (!is_codeword(codeword)) return std::nullopt;
  std::sort(positions->begin(), positions->end());
  BitWord message = extract_message(codeword);
  return Decoded{std::move(codeword), std::move(message), std::move(*positions)};
}

std::vector<BitWord> LinearCode::codewords() const {
  if (m_ > kMaxEnumerableDimension) {
    throw UnsupportedSize("enumerating 2^" + std::to_string(m_) + " codewords exceeds the m <= 20 bound");
  }
  const std::uint64_t count = std::uint64_t{1} << m_;
  // Gray-code walk: each step XORs in one generator row.
  BitWord c(n_);
  std::vector<BitWord> by_index(static_cast<std::size_t>(count));
  by_index[0] = c;
  for (std::uint64_t i = 1; i < count; ++i) {
    const std::uint64_t gray = i ^ (i >> 1);
    const auto row = static_cast<std::size_t>(std::countr_zero(i));
    c ^= generator_.row(row);
    by_index[gray] = c;
  }
  return by_index;
}

std::vector<std::uint64_t> LinearCode::weight_distribution() const {
  std::vector<std::uint64_t> a(n_ + 1, 0);
  for (const auto& c : codewords()) ++a[c.weight()];
  return a;
}

// ---------------------------------------------------------------------------

LinearCode make_repetition(std::size_t n_odd) {
  if (n_odd < 3 || n_odd % 2 == 0) {
    throw InvalidInput("repetition code length must be odd and >= 3, got " + std::to_string(n_odd));
  }
  BitMatrix g(std::vector<BitWord>{BitWord::ones(n_odd)});
  BitMatrix h = parity_check_from_systematic(g, {0});
  return LinearCode("rep" + std::to_string(n_odd), (n_odd - 1) / 2, std::move(g), std::move(h));
}

LinearCode make_hamming_7_4() {
  BitMatrix g = BitMatrix::from_strings({
      "1000110",
      "0100101",
      "0010011",
      "0001111",
  });
  BitMatrix h = parity_check_from_systematic(g, {0, 1, 2, 3});
  return LinearCode("hamming74", 1, std::move(g), std::move(h));
}

}  // namespace qauth
