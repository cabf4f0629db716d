#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qauth/codes.hpp"

namespace qauth {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Decimal scientific rendering: value ≈ mantissa · 10^(exponent - digits + 1),
/// with mantissa holding exactly `digits` significant digits.
struct Scientific {
  BigInt mantissa;
  int exponent = 0;
  int digits = 2;

  /// "1.3e-08" style, as printf("%.1e") would print it.
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const Scientific&, const Scientific&) = default;
};

/// Rounds a positive rational to `digits` significant digits, ties to even.
[[nodiscard]] Scientific to_scientific(const Rational& value, int digits = 2);
/// Fixed-point rendering with `decimals` places, ties to even.
[[nodiscard]] std::string to_fixed(const Rational& value, int decimals);

/// Exact probability in [0, 1], stored in lowest terms.
class ExactProb {
 public:
  ExactProb() = default;
  /// Throws InvalidInput outside [0, 1].
  explicit ExactProb(Rational value);
  static ExactProb ratio(const BigInt& numerator, const BigInt& denominator);

  [[nodiscard]] const Rational& value() const noexcept { return value_; }
  [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  [[nodiscard]] double to_double() const { return value_.convert_to<double>(); }
  [[nodiscard]] Scientific to_scientific(int digits = 2) const { return qauth::to_scientific(value_, digits); }
  /// "num/den"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ExactProb& a, const ExactProb& b) { return a.value_ == b.value_; }
  friend bool operator<(const ExactProb& a, const ExactProb& b) { return a.value_ < b.value_; }
  friend bool operator<=(const ExactProb& a, const ExactProb& b) { return a.value_ <= b.value_; }
  friend bool operator>(const ExactProb& a, const ExactProb& b) { return a.value_ > b.value_; }
  friend bool operator>=(const ExactProb& a, const ExactProb& b) { return a.value_ >= b.value_; }

 private:
  Rational value_{0};
};

[[nodiscard]] BigInt binomial(unsigned n, unsigned k);

/// No-message attack: Bob's measured word equals c_E exactly, (3/4)^n.
[[nodiscard]] ExactProb p_f_no_message(std::size_t n);

/// P(X = i): Eve's random basis string agrees with x_AB in exactly i places.
[[nodiscard]] ExactProb p_x(std::size_t n, std::size_t i);

/// P(w(e) <= t | X = i). Equals 1 for i >= n - t, otherwise
/// sum_{h=0..t} C(n-i, h) · 2^-(n-i). The printed binomial C(n-i, n-i-h)
/// is the same number by symmetry.
[[nodiscard]] ExactProb p_weight_le_t_given_i(std::size_t n, std::size_t t, std::size_t i);

/// Probability that Eve's measured word lies within distance t of c_A:
///   sum_{i=0}^{n-t-1} sum_{h=0}^{t} C(n,i) C(n-i,n-i-h) 2^-(2n-i)
///   + sum_{i=n-t}^{n} C(n,i) 2^-n
[[nodiscard]] ExactProb p_dec(std::size_t n, std::size_t t);

/// Forgery success after key correction with n-t-i bases still wrong,
/// 2^-(n-t-i). Only defined for i <= n-t-1.
[[nodiscard]] ExactProb p_forge_given_i(std::size_t n, std::size_t t, std::size_t i);

/// Intercept-resend failure probability under the t-correction assumption:
///   sum_{i=0}^{n-t-1} sum_{h=0}^{t} C(n,i) C(n-i,n-i-h) 2^-(3n-2i-t)
///   + sum_{i=n-t}^{n} C(n,i) 2^-n
[[nodiscard]] ExactProb p_f_prime(std::size_t n, std::size_t t);

/// sum_{i=n-t}^{n} C(n,i) 2^-n, the all-but-t-bases-right mass shared by
/// p_dec and p_f_prime.
[[nodiscard]] ExactProb p_guess_at_least(std::size_t n, std::size_t t);

/// Key length over message length, n/m.
[[nodiscard]] Rational key_overhead(const LinearCode& code);

struct SecurityRow {
  std::string code;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t t = 0;
  ExactProb p_f;
  ExactProb p_dec;
  ExactProb p_f_prime;
  Rational key_overhead;
};

[[nodiscard]] SecurityRow security_row(const LinearCode& code);
[[nodiscard]] std::vector<SecurityRow> table1(const std::vector<LinearCode>& codes);

/// The eight (w, t) pairs of the BCH security table, in table order.
struct BchParams {
  int w;
  std::size_t t;
};
[[nodiscard]] const std::vector<BchParams>& table1_bch_params();

}  // namespace qauth
