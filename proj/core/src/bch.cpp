#include "qauth/bch.hpp"

#include <set>
#include <string>
#include <utility>

#include "qauth/error.hpp"

namespace qauth {

namespace {

struct GeneratorInfo {
  GF2Poly g;
  std::size_t bch_bound_t;
};

GeneratorInfo bch_generator(const GF2mField& field, std::size_t designed_t) {
  const std::uint32_t n = field.order();
  std::set<std::uint32_t> roots;
  GF2Poly g = GF2Poly::from_mask(1);
  for (std::uint32_t k = 1; k <= 2 * designed_t; ++k) {
    if (roots.contains(k)) continue;
    for (std::uint32_t e : field.cyclotomic_coset(k)) roots.insert(e);
    g = g * field.minimal_polynomial(field.alpha_pow(k));
  }
  std::uint32_t run = 0;
  while (run + 1 < n && roots.contains(run + 1)) ++run;
  return {std::move(g), run / 2};
}

void check_bch_params(int w, std::size_t designed_t) {
  if (w < 2 || w > 8) throw InvalidInput("BCH field exponent w must be in [2, 8], got " + std::to_string(w));
  if (designed_t < 1 || designed_t >= (std::size_t{1} << (w - 1))) {
    throw InvalidInput("BCH designed t must satisfy 1 <= t < 2^(w-1)");
  }
}

}  // namespace

BchSpec make_bch_spec(int w, std::size_t designed_t, std::uint32_t primitive_poly) {
  check_bch_params(w, designed_t);
  auto field = std::make_shared<const GF2mField>(w, primitive_poly == 0 ? default_primitive_poly(w) : primitive_poly);
  const std::size_t n = field->order();
  auto [g, t] = bch_generator(*field, designed_t);
  const auto deg = static_cast<std::size_t>(g.degree());
  if (deg >= n) {
    throw UnsupportedSize("BCH(w=" + std::to_string(w) + ", t=" + std::to_string(designed_t) +
                          ") has no information bits");
  }
  if (!poly_mod(GF2Poly::x_n_plus_one(static_cast<int>(n)), g).is_zero()) {
    throw std::logic_error("BCH generator does not divide x^n + 1");
  }
  BchSpec spec;
  spec.w = w;
  spec.designed_t = designed_t;
  spec.t = t;
  spec.n = n;
  spec.m = n - deg;
  spec.generator_poly = std::move(g);
  spec.field = std::move(field);
  return spec;
}

std::size_t bch_dimension(int w, std::size_t designed_t, std::uint32_t primitive_poly) {
  check_bch_params(w, designed_t);
  GF2mField field(w, primitive_poly == 0 ? default_primitive_poly(w) : primitive_poly);
  auto info = bch_generator(field, designed_t);
  const auto deg = static_cast<std::size_t>(info.g.degree());
  return deg >= field.order() ? 0 : field.order() - deg;
}

LinearCode build_bch(int w, std::size_t designed_t, std::uint32_t primitive_poly) {
  BchSpec spec = make_bch_spec(w, designed_t, primitive_poly);
  const std::size_t n = spec.n;
  const std::size_t m = spec.m;
  const std::size_t r = n - m;

  // Row k: x^(r+k) + (x^(r+k) mod g). Remainders advance by one shift each row.
  std::vector<BitWord> rows;
  rows.reserve(m);
  GF2Poly rem = poly_mod(GF2Poly::monomial(static_cast<int>(r)), spec.generator_poly);
  const GF2Poly x = GF2Poly::monomial(1);
  for (std::size_t k = 0; k < m; ++k) {
    BitWord row(n);
    row.set(r + k, true);
    for (int i = 0; i <= rem.degree(); ++i) {
      if (rem.coefficient(i)) row.set(static_cast<std::size_t>(i), true);
    }
    rows.push_back(std::move(row));
    rem = poly_mod_mul(rem, x, spec.generator_poly);
  }
  BitMatrix g(std::move(rows));
  std::vector<std::size_t> info(m);
  for (std::size_t k = 0; k < m; ++k) info[k] = r + k;
  BitMatrix h = parity_check_from_systematic(g, info);

  std::shared_ptr<const ErrorLocator> locator;
  if (r > LinearCode::kMaxTableRedundancy) locator = std::make_shared<BchLocator>(spec);
  const FieldParams params{spec.w, spec.field->primitive_poly()};
  const std::size_t t = spec.t;
  return LinearCode("bch-" + std::to_string(n) + "-" + std::to_string(m), t, std::move(g), std::move(h),
                    std::move(locator), params);
}

std::optional<std::vector<std::size_t>> bch_locate_errors(const BchSpec& spec, const BitWord& received) {
  if (received.size() != spec.n) {
    throw InvalidInput("bch_decode: received length " + std::to_string(received.size()) + " != n = " +
                       std::to_string(spec.n));
  }
  const GF2mField& f = *spec.field;
  const std::size_t two_t = 2 * spec.t;
  const std::vector<std::size_t> ones = received.support();

  // S_j = r(α^j), j = 1..2t
  std::vector<GF2mElement> syn(two_t);
  bool all_zero = true;
  for (std::size_t j = 1; j <= two_t; ++j) {
    GF2mElement s{0};
    for (std::size_t p : ones) s = f.add(s, f.alpha_pow(static_cast<long long>(j * p)));
    syn[j - 1] = s;
    all_zero = all_zero && s.value == 0;
  }
  if (all_zero) return std::vector<std::size_t>{};

  // Berlekamp–Massey: shortest LFSR Λ generating S_1..S_2t.
  std::vector<GF2mElement> lambda{f.one()};
  std::vector<GF2mElement> prev{f.one()};
  std::size_t len = 0;
  std::size_t shift = 1;
  GF2mElement last_disc = f.one();
  for (std::size_t k = 0; k < two_t; ++k) {
    GF2mElement d = syn[k];
    for (std::size_t i = 1; i <= len && i < lambda.size(); ++i) d = f.add(d, f.mul(lambda[i], syn[k - i]));
    if (d.value == 0) {
      ++shift;
      continue;
    }
    const GF2mElement coef = f.div(d, last_disc);
    std::vector<GF2mElement> next = lambda;
    if (next.size() < prev.size() + shift) next.resize(prev.size() + shift, f.zero());
    for (std::size_t i = 0; i < prev.size(); ++i) next[i + shift] = f.add(next[i + shift], f.mul(coef, prev[i]));
    if (2 * len <= k) {
      prev = std::move(lambda);
      len = k + 1 - len;
      last_disc = d;
      shift = 1;
    } else {
      ++shift;
    }
    lambda = std::move(next);
  }
  while (lambda.size() > 1 && lambda.back().value == 0) lambda.pop_back();
  const std::size_t degree = lambda.size() - 1;
  if (degree != len || len > spec.t) return std::nullopt;

  // Chien search: position p is in error iff Λ(α^-p) = 0.
  std::vector<std::size_t> positions;
  for (std::size_t p = 0; p < spec.n; ++p) {
    const GF2mElement x = f.alpha_pow(-static_cast<long long>(p));
    GF2mElement acc{0};
    for (std::size_t i = lambda.size(); i-- > 0;) acc = f.add(f.mul(acc, x), lambda[i]);
    if (acc.value == 0) positions.push_back(p);
  }
  if (positions.size() != degree) return std::nullopt;
  return positions;
}

DecodeResult bch_decode(const BchSpec& spec, const BitWord& received) {
  auto positions = bch_locate_errors(spec, received);
  if (!positions) return std::nullopt;
  BitWord codeword = received;
  for (std::size_t p : *positions) codeword.flip(p);
  // Reject corrections that do not land on a codeword (possible beyond t).
  for (std::size_t j = 1; j <= 2 * spec.t; ++j) {
    GF2mElement s{0};
    for (std::size_t p : codeword.support()) s = spec.field->add(s, spec.field->alpha_pow(static_cast<long long>(j * p)));
    if (s.value != 0) return std::nullopt;
  }
  BitWord message(spec.m);
  const std::size_t r = spec.n - spec.m;
  for (std::size_t k = 0; k < spec.m; ++k) {
    if (codeword.get(r + k)) message.set(k, true);
  }
  return Decoded{std::move(codeword), std::move(message), std::move(*positions)};
}

}  // namespace qauth
