#include "qauth/analytics.hpp"

#include <cstdio>
#include <string>

#include "qauth/error.hpp"

namespace qauth {

namespace {

BigInt pow2(std::size_t e) {
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

BigInt pow10(int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

// Rounds num/den to the nearest integer, ties to even.
BigInt round_half_even(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  const BigInt rem2 = (num % den) * 2;
  if (rem2 > den || (rem2 == den && (q & 1) != 0)) ++q;
  return q;
}

std::size_t decimal_digits(const BigInt& v) { return v.str().size(); }

std::vector<BigInt> pascal_row(std::size_t n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
  return row;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace

std::string Scientific::to_string() const {
  if (mantissa == 0) return "0." + std::string(static_cast<std::size_t>(digits - 1), '0') + "e+00";
  const std::string m = mantissa.str();
  std::string out = m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  char exp[16];
  std::snprintf(exp, sizeof exp, "e%c%02d", exponent < 0 ? '-' : '+', exponent < 0 ? -exponent : exponent);
  return out + exp;
}

Scientific to_scientific(const Rational& value, int digits) {
  require(digits >= 1, "significant digits must be >= 1");
  require(value >= 0, "scientific rendering expects a non-negative value");
  Scientific s;
  s.digits = digits;
  if (value == 0) return s;
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);

  // Initial decimal exponent guess from digit counts, then settle exactly.
  int e = static_cast<int>(decimal_digits(num)) - static_cast<int>(decimal_digits(den));
  auto scaled = [&](int exp10) -> Rational {
    const int k = digits - 1 - exp10;
    return k >= 0 ? value * Rational(pow10(k)) : value / Rational(pow10(-k));
  };
  const Rational lo(pow10(digits - 1));
  const Rational hi(pow10(digits));
  while (scaled(e) >= hi) ++e;
  while (scaled(e) < lo) --e;

  const Rational q = scaled(e);
  BigInt mant = round_half_even(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
  if (mant == pow10(digits)) {
    mant = pow10(digits - 1);
    ++e;
  }
  s.mantissa = mant;
  s.exponent = e;
  return s;
}

std::string to_fixed(const Rational& value, int decimals) {
  require(value >= 0, "fixed rendering expects a non-negative value");
  const Rational q = value * Rational(pow10(decimals));
  const std::string digits =
      round_half_even(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q)).str();
  if (decimals == 0) return digits;
  const auto d = static_cast<std::size_t>(decimals);
  const std::string padded = digits.size() <= d ? std::string(d + 1 - digits.size(), '0') + digits : digits;
  return padded.substr(0, padded.size() - d) + "." + padded.substr(padded.size() - d);
}

ExactProb::ExactProb(Rational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1) throw InvalidInput("probability outside [0, 1]: " + value_.str());
}

ExactProb ExactProb::ratio(const BigInt& numerator, const BigInt& denominator) {
  if (denominator <= 0) throw InvalidInput("probability denominator must be positive");
  return ExactProb(Rational(numerator, denominator));
}

std::string ExactProb::to_string() const { return numerator().str() + "/" + denominator().str(); }

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExactProb p_f_no_message(std::size_t n) {
  require(n >= 1, "p_f_no_message: n must be >= 1");
  BigInt num = 1;
  for (std::size_t i = 0; i < n; ++i) num *= 3;
  return ExactProb::ratio(num, pow2(2 * n));
}

ExactProb p_x(std::size_t n, std::size_t i) {
  require(i <= n, "p_x: i must be in [0, n]");
  return ExactProb::ratio(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)), pow2(n));
}

ExactProb p_weight_le_t_given_i(std::size_t n, std::size_t t, std::size_t i) {
  require(i <= n, "p_weight_le_t_given_i: i must be in [0, n]");
  if (i + t >= n) return ExactProb(Rational(1));
  const std::size_t wrong = n - i;
  BigInt num = 0;
  for (std::size_t h = 0; h <= t; ++h) num += binomial(static_cast<unsigned>(wrong), static_cast<unsigned>(h));
  return ExactProb::ratio(num, pow2(wrong));
}

ExactProb p_guess_at_least(std::size_t n, std::size_t t) {
  require(t < n, "t must be < n");
  const auto row = pascal_row(n);
  BigInt num = 0;
  for (std::size_t i = n - t; i <= n; ++i) num += row[i];
  return ExactProb::ratio(num, pow2(n));
}

ExactProb p_dec(std::size_t n, std::size_t t) {
  require(t < n, "p_dec: requires 0 <= t < n");
  const auto row = pascal_row(n);
  // Common denominator 2^(2n): the first sum's term scales by 2^i, the second by 2^n.
  BigInt num = 0;
  for (std::size_t i = 0; i + t + 1 <= n; ++i) {
    const auto inner = pascal_row(n - i);
    BigInt s = 0;
    for (std::size_t h = 0; h <= t; ++h) s += inner[n - i - h];
    num += row[i] * s * pow2(i);
  }
  for (std::size_t i = n - t; i <= n; ++i) num += row[i] * pow2(n);
  return ExactProb::ratio(num, pow2(2 * n));
}

ExactProb p_forge_given_i(std::size_t n, std::size_t t, std::size_t i) {
  require(t < n && i + t + 1 <= n, "p_forge_given_i: requires 0 <= i <= n - t - 1");
  return ExactProb::ratio(1, pow2(n - t - i));
}

ExactProb p_f_prime(std::size_t n, std::size_t t) {
  require(t < n, "p_f_prime: requires 0 <= t < n");
  const auto row = pascal_row(n);
  // Common denominator 2^(3n): first-sum terms scale by 2^(2i+t), second by 2^(2n).
  BigInt num = 0;
  for (std::size_t i = 0; i + t + 1 <= n; ++i) {
    const auto inner = pascal_row(n - i);
    BigInt s = 0;
    for (std::size_t h = 0; h <= t; ++h) s += inner[n - i - h];
    num += row[i] * s * pow2(2 * i + t);
  }
  for (std::size_t i = n - t; i <= n; ++i) num += row[i] * pow2(2 * n);
  return ExactProb::ratio(num, pow2(3 * n));
}

Rational key_overhead(const LinearCode& code) { return Rational(BigInt(code.n()), BigInt(code.m())); }

SecurityRow security_row(const LinearCode& code) {
  SecurityRow row;
  row.code = code.name();
  row.n = code.n();
  row.m = code.m();
  row.t = code.t();
  row.p_f = p_f_no_message(code.n());
  row.p_dec = p_dec(code.n(), code.t());
  row.p_f_prime = p_f_prime(code.n(), code.t());
  row.key_overhead = key_overhead(code);
  return row;
}

std::vector<SecurityRow> table1(const std::vector<LinearCode>& codes) {
  std::vector<SecurityRow> rows;
  rows.reserve(codes.size());
  for (const auto& c : codes) rows.push_back(security_row(c));
  return rows;
}

const std::vector<BchParams>& table1_bch_params() {
  static const std::vector<BchParams> params{
      {6, 1}, {6, 2}, {6, 10}, {6, 13}, {7, 1}, {7, 2}, {7, 15}, {7, 23},
  };
  return params;
}

}  // namespace qauth
