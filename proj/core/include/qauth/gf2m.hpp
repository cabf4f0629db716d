#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qauth {

/// Polynomial over GF(2), coefficients lowest degree first.
///
/// Always normalized: no trailing zero coefficients, so the zero polynomial
/// has no coefficients and degree() == -1.
class GF2Poly {
 public:
  GF2Poly() = default;
  explicit GF2Poly(std::vector<std::uint8_t> coefficients);
  /// Bit i of `mask` is the coefficient of x^i.
  static GF2Poly from_mask(std::uint64_t mask);
  static GF2Poly monomial(int degree);
  /// x^n + 1
  static GF2Poly x_n_plus_one(int n);

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] bool coefficient(int i) const noexcept;
  [[nodiscard]] const std::vector<std::uint8_t>& coefficients() const noexcept { return coeffs_; }
  /// Human-readable form such as "x^4 + x + 1".
  [[nodiscard]] std::string to_string() const;
  /// Requires degree() < 64.
  [[nodiscard]] std::uint64_t to_mask() const;

  friend GF2Poly operator+(const GF2Poly& a, const GF2Poly& b);
  friend GF2Poly operator*(const GF2Poly& a, const GF2Poly& b);
  friend bool operator==(const GF2Poly&, const GF2Poly&) = default;

 private:
  void normalize();
  std::vector<std::uint8_t> coeffs_;
};

struct PolyDivision {
  GF2Poly quotient;
  GF2Poly remainder;
};

/// Throws InvalidInput on a zero divisor.
[[nodiscard]] PolyDivision poly_divmod(const GF2Poly& dividend, const GF2Poly& divisor);
[[nodiscard]] GF2Poly poly_mod(const GF2Poly& a, const GF2Poly& modulus);
[[nodiscard]] GF2Poly poly_mod_mul(const GF2Poly& a, const GF2Poly& b, const GF2Poly& modulus);
[[nodiscard]] GF2Poly poly_gcd(GF2Poly a, GF2Poly b);

/// Element of GF(2^w) in polynomial basis: bit i is the coefficient of α^i.
struct GF2mElement {
  std::uint32_t value = 0;
  friend bool operator==(GF2mElement, GF2mElement) = default;
};

/// Default primitive polynomial for GF(2^w), 2 <= w <= 8, as a bit mask.
/// GF(2^6) uses x^6+x+1 and GF(2^7) uses x^7+x^3+1.
[[nodiscard]] std::uint32_t default_primitive_poly(int w);

/// GF(2^w) with log/antilog tables. Immutable after construction.
class GF2mField {
 public:
  /// Throws InvalidInput unless `primitive_poly` has degree w and generates
  /// the full multiplicative group.
  GF2mField(int w, std::uint32_t primitive_poly);
  explicit GF2mField(int w) : GF2mField(w, default_primitive_poly(w)) {}

  [[nodiscard]] int w() const noexcept { return w_; }
  [[nodiscard]] std::uint32_t primitive_poly() const noexcept { return poly_; }
  /// 2^w - 1
  [[nodiscard]] std::uint32_t order() const noexcept { return order_; }

  [[nodiscard]] GF2mElement zero() const noexcept { return {0}; }
  [[nodiscard]] GF2mElement one() const noexcept { return {1}; }
  /// α^k for any k (reduced mod 2^w - 1, negative allowed).
  [[nodiscard]] GF2mElement alpha_pow(long long k) const noexcept;
  /// Discrete log base α; requires a nonzero element.
  [[nodiscard]] std::uint32_t log(GF2mElement x) const;

  [[nodiscard]] GF2mElement add(GF2mElement a, GF2mElement b) const noexcept { return {a.value ^ b.value}; }
  [[nodiscard]] GF2mElement mul(GF2mElement a, GF2mElement b) const noexcept;
  [[nodiscard]] GF2mElement inv(GF2mElement a) const;
  [[nodiscard]] GF2mElement div(GF2mElement a, GF2mElement b) const;
  [[nodiscard]] GF2mElement pow(GF2mElement a, unsigned long long e) const noexcept;

  /// Evaluates a GF(2) polynomial at x.
  [[nodiscard]] GF2mElement eval(const GF2Poly& p, GF2mElement x) const noexcept;

  /// Lowest-degree monic GF(2) polynomial with `x` as a root, computed as
  /// the product of (z - c) over the conjugacy class {x, x^2, x^4, ...}.
  [[nodiscard]] GF2Poly minimal_polynomial(GF2mElement x) const;

  /// Exponents {k, 2k, 4k, ...} mod 2^w - 1, ascending.
  [[nodiscard]] std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t k) const;

 private:
  int w_;
  std::uint32_t poly_;
  std::uint32_t order_;
  std::vector<std::uint32_t> exp_;  // size 2*order
  std::vector<std::uint32_t> log_;  // size order+1; log_[0] unused
};

/// Free-function form of GF2mField::minimal_polynomial.
[[nodiscard]] GF2Poly minimal_polynomial(const GF2mField& field, GF2mElement x);

}  // namespace qauth
