#include "qauth/gf2m.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "qauth/error.hpp"

namespace qauth {

GF2Poly::GF2Poly(std::vector<std::uint8_t> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) {
    if (c > 1) throw InvalidInput("GF(2) coefficient must be 0 or 1");
  }
  normalize();
}

GF2Poly GF2Poly::from_mask(std::uint64_t mask) {
  std::vector<std::uint8_t> c;
  for (int i = 0; i < 64 && (mask >> i) != 0; ++i) c.push_back(static_cast<std::uint8_t>((mask >> i) & 1U));
  return GF2Poly(std::move(c));
}

GF2Poly GF2Poly::monomial(int degree) {
  if (degree < 0) throw InvalidInput("negative monomial degree");
  std::vector<std::uint8_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = 1;
  return GF2Poly(std::move(c));
}

GF2Poly GF2Poly::x_n_plus_one(int n) { return monomial(n) + GF2Poly::from_mask(1); }

void GF2Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool GF2Poly::coefficient(int i) const noexcept {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<std::size_t>(i)] != 0;
}

std::string GF2Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (!coefficient(i)) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += "x";
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

std::uint64_t GF2Poly::to_mask() const {
  if (degree() >= 64) throw InvalidInput("polynomial degree too large for a 64-bit mask");
  std::uint64_t m = 0;
  for (int i = 0; i <= degree(); ++i) {
    if (coefficient(i)) m |= std::uint64_t{1} << i;
  }
  return m;
}

GF2Poly operator+(const GF2Poly& a, const GF2Poly& b) {
  std::vector<std::uint8_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] ^= a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] ^= b.coeffs_[i];
  return GF2Poly(std::move(c));
}

GF2Poly operator*(const GF2Poly& a, const GF2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint8_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] ^= b.coeffs_[j];
  }
  return GF2Poly(std::move(c));
}

PolyDivision poly_divmod(const GF2Poly& dividend, const GF2Poly& divisor) {
  if (divisor.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<std::uint8_t> rem = dividend.coefficients();
  const int dd = divisor.degree();
  const auto& dc = divisor.coefficients();
  std::vector<std::uint8_t> quot(rem.size() > dc.size() - 1 ? rem.size() - dc.size() + 1 : 0, 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[static_cast<std::size_t>(i)] == 0) continue;
    const int shift = i - dd;
    quot[static_cast<std::size_t>(shift)] = 1;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(shift + j)] ^= dc[static_cast<std::size_t>(j)];
  }
  return {GF2Poly(std::move(quot)), GF2Poly(std::move(rem))};
}

GF2Poly poly_mod(const GF2Poly& a, const GF2Poly& modulus) { return poly_divmod(a, modulus).remainder; }

GF2Poly poly_mod_mul(const GF2Poly& a, const GF2Poly& b, const GF2Poly& modulus) {
  if (modulus.is_zero()) throw InvalidInput("poly_mod_mul: zero modulus");
  return poly_mod(a * b, modulus);
}

GF2Poly poly_gcd(GF2Poly a, GF2Poly b) {
  while (!b.is_zero()) {
    GF2Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// ---------------------------------------------------------------------------

std::uint32_t default_primitive_poly(int w) {
  switch (w) {
    case 2: return 0x7;     // x^2+x+1
    case 3: return 0xB;     // x^3+x+1
    case 4: return 0x13;    // x^4+x+1
    case 5: return 0x25;    // x^5+x^2+1
    case 6: return 0x43;    // x^6+x+1
    case 7: return 0x89;    // x^7+x^3+1
    case 8: return 0x11D;   // x^8+x^4+x^3+x^2+1
    default: throw InvalidInput("no default primitive polynomial for w=" + std::to_string(w));
  }
}

GF2mField::GF2mField(int w, std::uint32_t primitive_poly) : w_(w), poly_(primitive_poly) {
  if (w < 2 || w > 16) throw InvalidInput("field exponent w must be in [2, 16]");
  if ((primitive_poly >> w) != 1U) {
    throw InvalidInput("primitive polynomial must have degree exactly w");
  }
  order_ = (1U << w) - 1;
  exp_.assign(2 * static_cast<std::size_t>(order_), 0);
  log_.assign(static_cast<std::size_t>(order_) + 1, 0);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < order_; ++k) {
    if (k > 0 && x == 1) throw InvalidInput("polynomial is not primitive (α has order " + std::to_string(k) + ")");
    exp_[k] = x;
    log_[x] = k;
    x <<= 1;
    if ((x >> w) & 1U) x ^= primitive_poly;
  }
  if (x != 1) throw InvalidInput("polynomial is reducible; α does not return to 1");
  for (std::uint32_t k = order_; k < 2 * order_; ++k) exp_[k] = exp_[k - order_];
}

GF2mElement GF2mField::alpha_pow(long long k) const noexcept {
  long long r = k % static_cast<long long>(order_);
  if (r < 0) r += order_;
  return {exp_[static_cast<std::size_t>(r)]};
}

std::uint32_t GF2mField::log(GF2mElement x) const {
  if (x.value == 0 || x.value > order_) throw InvalidInput("log of zero or out-of-field element");
  return log_[x.value];
}

GF2mElement GF2mField::mul(GF2mElement a, GF2mElement b) const noexcept {
  if (a.value == 0 || b.value == 0) return {0};
  return {exp_[log_[a.value] + log_[b.value]]};
}

GF2mElement GF2mField::inv(GF2mElement a) const {
  if (a.value == 0) throw InvalidInput("inverse of zero");
  return {exp_[(order_ - log_[a.value]) % order_]};
}

GF2mElement GF2mField::div(GF2mElement a, GF2mElement b) const { return mul(a, inv(b)); }

GF2mElement GF2mField::pow(GF2mElement a, unsigned long long e) const noexcept {
  if (e == 0) return one();
  if (a.value == 0) return zero();
  const unsigned long long k = (static_cast<unsigned long long>(log_[a.value]) * (e % order_)) % order_;
  return {exp_[k]};
}

GF2mElement GF2mField::eval(const GF2Poly& p, GF2mElement x) const noexcept {
  GF2mElement acc{0};
  for (int i = p.degree(); i >= 0; --i) {
    acc = mul(acc, x);
    if (p.coefficient(i)) acc.value ^= 1U;
  }
  return acc;
}

std::vector<std::uint32_t> GF2mField::cyclotomic_coset(std::uint32_t k) const {
  std::set<std::uint32_t> coset;
  std::uint32_t e = k % order_;
  while (coset.insert(e).second) e = static_cast<std::uint32_t>((2ULL * e) % order_);
  return {coset.begin(), coset.end()};
}

GF2Poly GF2mField::minimal_polynomial(GF2mElement x) const {
  if (x.value > order_) throw InvalidInput("element does not belong to this field");
  if (x.value == 0) return GF2Poly::monomial(1);

  // Conjugates x, x^2, x^4, ... until the orbit closes.
  std::vector<GF2mElement> conj;
  GF2mElement c = x;
  do {
    conj.push_back(c);
    c = mul(c, c);
  } while (c != x);

  // Expand the product over GF(2^w); coefficients land in GF(2).
  std::vector<GF2mElement> poly{one()};
  for (GF2mElement root : conj) {
    std::vector<GF2mElement> next(poly.size() + 1, zero());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = add(next[i + 1], poly[i]);
      next[i] = add(next[i], mul(poly[i], root));
    }
    poly = std::move(next);
  }
  std::vector<std::uint8_t> bits;
  bits.reserve(poly.size());
  for (GF2mElement e : poly) {
    if (e.value > 1) throw std::logic_error("minimal polynomial has a coefficient outside GF(2)");
    bits.push_back(static_cast<std::uint8_t>(e.value));
  }
  return GF2Poly(std::move(bits));
}

GF2Poly minimal_polynomial(const GF2mField& field, GF2mElement x) { return field.minimal_polynomial(x); }

}  // namespace qauth
