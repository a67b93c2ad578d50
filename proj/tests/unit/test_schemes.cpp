#include <doctest.h>

#include "combsub/errors.hpp"
#include "combsub/schemes.hpp"
#include "oracle.hpp"

using namespace combsub;

namespace {

const AlphaPoly a = AlphaPoly::alpha();

std::vector<AlphaPoly> rats(std::initializer_list<std::pair<long, long>> v) {
  std::vector<AlphaPoly> out;
  for (auto [p, q] : v) out.emplace_back(Rational(p, q));
  return out;
}

AlphaPoly sum(const std::vector<AlphaPoly>& v) {
  AlphaPoly s;
  for (const auto& t : v) s += t;
  return s;
}

/// Lagrange weight at 1/2 for node t - n, exact.
Rational lagrange_half(int n, int t) {
  Rational w(1);
  for (int m = 0; m <= 2 * n + 1; ++m) {
    if (m != t) w *= (Rational(1, 2) - Rational(m - n)) / Rational(t - m);
  }
  return w;
}

}  // namespace

TEST_CASE("four-point interpolatory rules") {
  const MaskPair m = dd_mask(1);
  CHECK(m.odd_rule == rats({{-1, 16}, {9, 16}, {9, 16}, {-1, 16}}));
  CHECK(m.even_rule == rats({{0, 1}, {1, 1}, {0, 1}}));
  CHECK(m.first_source_offset() == -1);
}

TEST_CASE("interpolatory edge rules are Lagrange weights at the midpoint") {
  for (int n = 1; n <= 4; ++n) {
    const MaskPair m = dd_mask(n);
    REQUIRE(m.odd_rule.size() == static_cast<std::size_t>(2 * n + 2));
    REQUIRE(m.even_rule.size() == static_cast<std::size_t>(2 * n + 1));
    for (int t = 0; t <= 2 * n + 1; ++t) CHECK(m.odd_rule[static_cast<std::size_t>(t)] == AlphaPoly(lagrange_half(n, t)));
    for (int t = 0; t <= 2 * n; ++t) CHECK(m.even_rule[static_cast<std::size_t>(t)] == AlphaPoly(t == n ? 1 : 0));
  }
}

TEST_CASE("B-spline rules") {
  const MaskPair m = bspline_mask(1);
  CHECK(m.even_rule == rats({{3, 16}, {10, 16}, {3, 16}}));
  CHECK(m.odd_rule == rats({{1, 32}, {15, 32}, {15, 32}, {1, 32}}));
  for (int n = 1; n <= 4; ++n) {
    const LaurentSymbol s = symbol_of(bspline_mask(n));
    for (int e = 0; e <= 4 * n + 2; ++e) {
      const auto expected = static_cast<long double>(oracle::choose(4 * n + 2, e)) / std::ldexp(1.0L, 4 * n + 1);
      CHECK(static_cast<long double>(s.coeff(e).coeff(0).to_double()) == doctest::Approx(static_cast<double>(expected)));
    }
    CHECK(s == bspline_symbol(n));
  }
}

TEST_CASE("combined rules for the four-point member") {
  const MaskPair m = combined_mask(1);
  const Rational r16(1, 16);
  CHECK(m.even_rule[0] == a * Rational(-3, 16));
  CHECK(m.even_rule[1] == AlphaPoly(1) + a * Rational(3, 8));
  CHECK(m.even_rule[2] == a * Rational(-3, 16));
  CHECK(m.odd_rule[0] == -(AlphaPoly(r16) + a * Rational(3, 32)));
  CHECK(m.odd_rule[1] == AlphaPoly(Rational(9, 16)) + a * Rational(3, 32));
  CHECK(m.odd_rule[2] == m.odd_rule[1]);
  CHECK(m.odd_rule[3] == m.odd_rule[0]);
}

TEST_CASE("combined rules are the tapwise blend and reduce to both parents") {
  for (int n = 1; n <= 4; ++n) {
    const MaskPair r = dd_mask(n), q = bspline_mask(n), p = combined_mask(n);
    for (std::size_t t = 0; t < p.even_rule.size(); ++t) {
      CHECK(p.even_rule[t] == (AlphaPoly(1) + a) * r.even_rule[t] - a * q.even_rule[t]);
    }
    for (std::size_t t = 0; t < p.odd_rule.size(); ++t) {
      CHECK(p.odd_rule[t] == (AlphaPoly(1) + a) * r.odd_rule[t] - a * q.odd_rule[t]);
    }
    CHECK(p.specialised(Rational(0)) == r);
    CHECK(p.specialised(Rational(-1)) == q);
    CHECK(scheme_symbol({n, Rational(0)}) == symbol_of(r));
    CHECK(scheme_symbol({n, Rational(-1)}) == bspline_symbol(n));
  }
}

TEST_CASE("sum rule and symmetry of the combined rules") {
  for (int n = 1; n <= 4; ++n) {
    const MaskPair p = combined_mask(n);
    CHECK(sum(p.even_rule) == AlphaPoly(1));
    CHECK(sum(p.odd_rule) == AlphaPoly(1));
    const LaurentSymbol s = scheme_symbol({n, std::nullopt});
    CHECK(s.min_exponent() == 0);
    CHECK(s.max_exponent() == 4 * n + 2);
    for (int j = 0; j <= 4 * n + 2; ++j) CHECK(s.coeff(j) == s.coeff(4 * n + 2 - j));
    CHECK(sym_eval_z(s, 1) == AlphaPoly(2));
    CHECK(sym_eval_z(s, -1).is_zero());
  }
}

TEST_CASE("symbol of the four-point member") {
  const LaurentSymbol s = scheme_symbol({1, std::nullopt});
  CHECK(s.coeff(3) == AlphaPoly(1) + a * Rational(3, 8));
  CHECK(scheme_symbol({1, Rational(-1)}) ==
        LaurentSymbol::one_plus_z_pow(6) * AlphaPoly(Rational(1, 32)));
}

TEST_CASE("factored symbol") {
  const LaurentSymbol f = factor_symbol({1, std::nullopt});
  CHECK(f.coeff(0) == AlphaPoly(Rational(-1, 2)) + a * Rational(-3, 4));
  CHECK(f.coeff(1) == AlphaPoly(2) + a * Rational(3, 2));
  CHECK(f.coeff(2) == f.coeff(0));
  CHECK(sym_eval_z(f, 1) == AlphaPoly(1));
  const LaurentSymbol fb = factor_symbol({1, Rational(-1)});
  CHECK(fb == LaurentSymbol::one_plus_z_pow(2) * AlphaPoly(Rational(1, 4)));
  for (int n = 1; n <= 4; ++n) {
    const SchemeSpec spec{n, std::nullopt};
    const LaurentSymbol big = factor_symbol(spec);
    CHECK(big.max_exponent() == 2 * n);
    CHECK(sym_mul(LaurentSymbol::one_plus_z_pow(2 * n + 2), big) ==
          scheme_symbol(spec) * AlphaPoly(Rational::pow2(2 * n + 1)));
  }
}

TEST_CASE("invalid family index") {
  CHECK_THROWS_AS(dd_mask(0), BadIndex);
  CHECK_THROWS_AS(bspline_mask(-1), BadIndex);
  CHECK_THROWS_AS(combined_mask(0), BadIndex);
  CHECK_THROWS_AS(scheme_symbol({0, std::nullopt}), BadIndex);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(4, 5) == 0);
}
