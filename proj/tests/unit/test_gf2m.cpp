#include <gtest/gtest.h>

#include "qauth/error.hpp"
#include "qauth/gf2m.hpp"

using namespace qauth;

TEST(GF2Poly, NormalizesAndPrints) {
  EXPECT_EQ(GF2Poly({1, 1, 0, 0}).degree(), 1);
  EXPECT_EQ(GF2Poly().degree(), -1);
  EXPECT_EQ(GF2Poly::from_mask(0x13).to_string(), "x^4 + x + 1");
  EXPECT_EQ(GF2Poly::from_mask(0x13).to_mask(), 0x13U);
  EXPECT_EQ(GF2Poly::x_n_plus_one(3).to_mask(), 0x9U);
}

TEST(GF2Poly, ArithmeticOverGF2) {
  const auto a = GF2Poly::from_mask(0b11);  // x + 1
  EXPECT_EQ((a * a).to_mask(), 0b101U);     // x^2 + 1
  EXPECT_TRUE((a + a).is_zero());
  const auto d = poly_divmod(GF2Poly::x_n_plus_one(7), GF2Poly::from_mask(0xB));
  EXPECT_TRUE(d.remainder.is_zero());
  EXPECT_EQ(d.quotient * GF2Poly::from_mask(0xB), GF2Poly::x_n_plus_one(7));
  EXPECT_EQ(poly_gcd(GF2Poly::from_mask(0b101), GF2Poly::from_mask(0b11)).to_mask(), 0b11U);
}

TEST(GF2Poly, ModMul) {
  const auto m = GF2Poly::from_mask(0x13);
  // x^3 * x = x^4 = x + 1 mod x^4 + x + 1
  EXPECT_EQ(poly_mod_mul(GF2Poly::monomial(3), GF2Poly::monomial(1), m).to_mask(), 0b11U);
  EXPECT_THROW((void)poly_mod_mul(m, m, GF2Poly()), InvalidInput);
}

TEST(GF2mField, DefaultPolynomials) {
  EXPECT_EQ(default_primitive_poly(4), 0x13U);
  EXPECT_EQ(default_primitive_poly(6), 0x43U);
  EXPECT_EQ(default_primitive_poly(7), 0x89U);
  EXPECT_THROW((void)default_primitive_poly(9), InvalidInput);
}

TEST(GF2mField, RejectsNonPrimitivePolynomial) {
  // x^4 + x^3 + x^2 + x + 1 is irreducible but α has order 5.
  EXPECT_THROW(GF2mField(4, 0x1F), InvalidInput);
  EXPECT_THROW(GF2mField(4, 0x15), InvalidInput);
}

TEST(GF2mField, MultiplicativeGroupOrder) {
  for (int w = 2; w <= 8; ++w) {
    const GF2mField f(w);
    for (std::uint32_t v = 1; v <= f.order(); ++v) {
      ASSERT_EQ(f.pow({v}, f.order()), f.one()) << "w=" << w << " v=" << v;
      ASSERT_EQ(f.mul({v}, f.inv({v})), f.one());
    }
  }
}

TEST(GF2mField, LogAntilogAgree) {
  const GF2mField f(6);
  for (std::uint32_t k = 0; k < f.order(); ++k) EXPECT_EQ(f.log(f.alpha_pow(k)), k);
  EXPECT_EQ(f.alpha_pow(-1), f.inv(f.alpha_pow(1)));
  EXPECT_THROW((void)f.log(f.zero()), InvalidInput);
  EXPECT_THROW((void)f.inv(f.zero()), InvalidInput);
}

TEST(MinimalPolynomial, Examples) {
  const GF2mField f(4, 0x13);
  EXPECT_EQ(minimal_polynomial(f, f.zero()).to_string(), "x");
  EXPECT_EQ(minimal_polynomial(f, f.one()).to_string(), "x + 1");
  EXPECT_EQ(minimal_polynomial(f, f.alpha_pow(1)).to_mask(), 0x13U);
  // α^3 has conjugates {3, 6, 12, 9}: x^4 + x^3 + x^2 + x + 1.
  EXPECT_EQ(minimal_polynomial(f, f.alpha_pow(3)).to_mask(), 0x1FU);
  // α^5 lies in GF(4): x^2 + x + 1.
  EXPECT_EQ(minimal_polynomial(f, f.alpha_pow(5)).to_mask(), 0x7U);
}

TEST(MinimalPolynomial, VanishesAtItsElement) {
  for (int w = 2; w <= 8; ++w) {
    const GF2mField f(w);
    for (std::uint32_t v = 0; v <= f.order(); ++v) {
      const auto p = f.minimal_polynomial({v});
      ASSERT_EQ(f.eval(p, {v}), f.zero()) << "w=" << w << " v=" << v;
      ASSERT_LE(p.degree(), w);
    }
  }
}

TEST(CyclotomicCoset, Examples) {
  const GF2mField f(6);
  EXPECT_EQ(f.cyclotomic_coset(1), (std::vector<std::uint32_t>{1, 2, 4, 8, 16, 32}));
  EXPECT_EQ(f.cyclotomic_coset(9), (std::vector<std::uint32_t>{9, 18, 36}));
  EXPECT_EQ(f.cyclotomic_coset(21), (std::vector<std::uint32_t>{21, 42}));
}
