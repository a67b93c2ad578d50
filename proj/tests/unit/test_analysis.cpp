#include <doctest.h>

#include <random>

#include "combsub/analysis.hpp"
#include "combsub/decimal.hpp"
#include "combsub/errors.hpp"
#include "oracle.hpp"

using namespace combsub;

namespace {

IntervalSet open(const Rational& lo, const Rational& hi) { return IntervalSet::single(lo, hi); }

const OpenInterval& only(const IntervalSet& s) {
  REQUIRE(s.size() == 1);
  return s.intervals().front();
}

Rational exact(const Endpoint& e) {
  REQUIRE(e.is_finite());
  REQUIRE(e.root().is_exact());
  return e.root().value();
}

// Refines the finite window of a bi-infinite sequence, keeping only outputs whose taps all
// fall inside the window.
std::vector<Rational> refine_interior(const std::vector<Rational>& in, const NumericMask<Rational>& m) {
  const long size = static_cast<long>(in.size());
  std::vector<Rational> out;
  for (long o = 0; o < 2 * size; ++o) {
    const long i = o / 2;
    const auto& taps = o % 2 == 0 ? m.even : m.odd;
    const long first = i - m.n, last = first + static_cast<long>(taps.size()) - 1;
    if (first < 0 || last >= size) continue;
    Rational s(0);
    for (std::size_t t = 0; t < taps.size(); ++t) s += taps[t] * in[static_cast<std::size_t>(first) + t];
    out.push_back(s);
  }
  return out;
}

std::vector<Rational> differences(const std::vector<Rational>& v) {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < v.size(); ++i) d.push_back(v[i] - v[i - 1]);
  return d;
}

bool nonnegative(const std::vector<Rational>& v) {
  for (const auto& x : v) {
    if (x.sign() < 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("sum rule check") {
  CHECK(check_sum_rule(SchemeSpec{1, std::nullopt}));
  CHECK(check_sum_rule(SchemeSpec{3, std::nullopt}));
  CHECK(check_sum_rule(SchemeSpec{2, Rational(7, 3)}));
  CHECK(check_sum_rule(LaurentSymbol::one_plus_z_pow(1)));
  CHECK_FALSE(check_sum_rule(LaurentSymbol::one_plus_z_pow(1) * AlphaPoly(Rational(1, 2))));
  CHECK(check_sum_rule(LaurentSymbol::one_plus_z_pow(2) * AlphaPoly(Rational(1, 2))));
  CHECK_FALSE(check_sum_rule(LaurentSymbol::one_plus_z_pow(2)));
}

TEST_CASE("difference and iterated symbols") {
  const LaurentSymbol b = bspline_symbol(1);
  // 2^j (1+z)^6/2^5 / (1+z)^{j+1}
  CHECK(difference_symbol(b, 0) == LaurentSymbol::one_plus_z_pow(5) * AlphaPoly(Rational(1, 32)));
  CHECK(difference_symbol(b, 5) == LaurentSymbol::one());
  const LaurentSymbol c = LaurentSymbol::one_plus_z_pow(1);
  CHECK(iterated_symbol(c, 2) == sym_mul(c, sym_upsample(c, 2)));
  CHECK(iterated_symbol(c, 1) == c);
  CHECK_THROWS_AS(iterated_symbol(c, 0), BadIndex);
  const auto odd = residue_class(LaurentSymbol::one_plus_z_pow(4), 2, 1);
  CHECK(odd == std::vector<AlphaPoly>{AlphaPoly(4), AlphaPoly(4)});
}

TEST_CASE("exact contractivity norm agrees with the floating-point oracle") {
  for (int n = 1; n <= 3; ++n) {
    const LaurentSymbol a = scheme_symbol({n, std::nullopt});
    for (int L = 1; L <= 2; ++L) {
      for (int j = 0; j <= 2 * n + 1; ++j) {
        for (const Rational alpha : {Rational(-1, 2), Rational(-1), Rational(1, 3), Rational(-7, 5)}) {
          const double exact_norm = contractivity_norm(a, j, L, alpha).to_double();
          const auto approx = static_cast<double>(oracle::contractivity_norm(n, j, L, alpha.to_double()));
          CHECK(exact_norm == doctest::Approx(approx).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("continuity ranges of the four-point member, one step") {
  const ContinuityReport r = continuity_intervals(1, 1);
  REQUIRE(r.rows.size() == 5);
  CHECK(r.rows[0].alpha == open(Rational(-4), Rational(4, 3)));
  CHECK(r.rows[1].alpha == open(Rational(-8, 3), Rational(0)));
  CHECK(r.rows[2].alpha == open(Rational(-8, 3), Rational(0)));
  CHECK(r.rows[3].alpha == open(Rational(-4, 3), Rational(-2, 3)));
  CHECK(r.rows[4].order == 4);
  CHECK(r.rows[4].minus_one_only);
  CHECK(r.rows[4].alpha.empty());
  CHECK(r.alpha_minus_one_order == 4);
}

TEST_CASE("order five of the six-point member is (-11/10, -9/10)") {
  const ContinuityReport r = continuity_intervals(2, 1);
  CHECK(r.rows[5].alpha == open(Rational(-11, 10), Rational(-9, 10)));
  // residue 0 of the order-5 difference symbol leaves the unit ball above -9/10
  CHECK(oracle::contractivity_norm(2, 5, 1, -0.8L) >= 1);
  CHECK(oracle::contractivity_norm(2, 5, 1, -0.95L) < 1);
}

TEST_CASE("highest order at alpha = -1 is 4n") {
  for (int n = 1; n <= 3; ++n) {
    for (int L = 1; L <= 2; ++L) {
      const ContinuityReport r = continuity_intervals(n, L);
      CHECK(r.alpha_minus_one_order == 4 * n);
      CHECK(r.rows.size() == static_cast<std::size_t>(4 * n + 1));
      for (int j = 2 * n + 2; j <= 4 * n; ++j) CHECK(r.rows[static_cast<std::size_t>(j)].minus_one_only);
      for (int j = 0; j <= 2 * n + 1; ++j) CHECK_FALSE(r.rows[static_cast<std::size_t>(j)].minus_one_only);
    }
  }
}

TEST_CASE("continuity endpoints sit on the contractivity boundary") {
  const long double eps = 1e-6L;
  for (int L = 1; L <= 2; ++L) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& row : continuity_intervals(n, L).rows) {
        for (const auto& iv : row.alpha.intervals()) {
          for (const auto* e : {&iv.lo, &iv.hi}) {
            if (!e->is_finite()) continue;
            const long double v = e->to_double();
            const long double inward = e == &iv.lo ? eps : -eps;
            CAPTURE(n);
            CAPTURE(L);
            CAPTURE(row.order);
            CAPTURE(static_cast<double>(v));
            CHECK(oracle::contractivity_norm(n, row.order, L, v + inward) < 1);
            CHECK(oracle::contractivity_norm(n, row.order, L, v - inward) >= 1);
          }
        }
      }
    }
  }
}

TEST_CASE("two steps never shrink the one-step ranges") {
  for (int n = 1; n <= 3; ++n) {
    const auto one = continuity_intervals(n, 1);
    const auto two = continuity_intervals(n, 2);
    REQUIRE(one.rows.size() == two.rows.size());
    for (std::size_t j = 0; j < one.rows.size(); ++j) CHECK(is_subset(one.rows[j].alpha, two.rows[j].alpha));
  }
}

TEST_CASE("first order range ends at zero") {
  for (int n = 1; n <= 3; ++n) {
    const auto r = continuity_intervals(n, 1);
    CHECK(exact(only(r.rows[1].alpha).hi) == Rational(0));
  }
}

TEST_CASE("serial and parallel continuity agree") {
  for (int n = 1; n <= 2; ++n) {
    const auto p = continuity_intervals(n, 2, default_root_width(), Execution::parallel);
    const auto s = continuity_intervals(n, 2, default_root_width(), Execution::serial);
    REQUIRE(p.rows.size() == s.rows.size());
    for (std::size_t j = 0; j < p.rows.size(); ++j) CHECK(p.rows[j].alpha == s.rows[j].alpha);
  }
}

TEST_CASE("continuity argument checks") {
  CHECK_THROWS_AS(continuity_intervals(0, 1), BadIndex);
  CHECK_THROWS_AS(continuity_intervals(1, 0), BadIndex);
}

TEST_CASE("generation and reproduction degrees") {
  for (int n = 1; n <= 4; ++n) {
    const DegreeReport g = generation_degree(n);
    CHECK(g.kind == DegreeKind::generation);
    CHECK(g.degree_all_alpha == 2 * n + 1);
    CHECK(g.degree_special == 4 * n + 1);
    CHECK(g.special_alpha == Rational(-1));
    const DegreeReport r = reproduction_degree(n);
    CHECK(r.kind == DegreeKind::reproduction);
    CHECK(r.degree_all_alpha == 1);
    CHECK(r.degree_special == 2 * n + 1);
    CHECK(r.special_alpha == Rational(0));
  }
}

TEST_CASE("Gibbs ranges at k = 0 are the negative half-line") {
  for (int n = 1; n <= 3; ++n) {
    const GibbsReport g = gibbs_intervals(n, 0);
    CHECK(g.interval == IntervalSet::single(Endpoint::neg_inf(), Rational(0)));
    CHECK(g.within_negative_half_line);
  }
}

TEST_CASE("Gibbs ranges of the four-point member at k = 1") {
  // tracked value -15 alpha (9 alpha + 46) / 128 away from the level
  CHECK(gibbs_intervals(1, 1).interval == open(Rational(-46, 9), Rational(0)));
}

TEST_CASE("Gibbs ranges match the floating-point refinement") {
  const char* expected[3][4] = {
      {"-inf", "-5.111111111", "-inf", "-5.618133908"},
      {"-inf", "-4.013223140", "-inf", "-5.583827202"},
      {"-inf", "-3.523131552", "-inf", "-7.642792876"},
  };
  const long double eps = 1e-6L;
  const auto ok = [](int n, int k, long double alpha) {
    const auto [lower, upper] = oracle::gibbs_margins(n, k, alpha);
    return lower > 0 && upper > 0;
  };
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= 3; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const GibbsReport g = gibbs_intervals(n, k);
      CHECK(g.within_negative_half_line);
      const OpenInterval& iv = only(g.interval);
      CHECK(to_decimal(iv.lo) == expected[n - 1][k]);
      CHECK(exact(iv.hi) == Rational(0));
      CHECK(ok(n, k, -eps));
      CHECK_FALSE(ok(n, k, eps));
      if (iv.lo.is_finite()) {
        const long double lo = iv.lo.to_double();
        CHECK(ok(n, k, lo + eps));
        CHECK_FALSE(ok(n, k, lo - eps));
      } else {
        for (long double a : {-1e3L, -40.0L, -9.5L, -3.0L, -0.5L}) CHECK(ok(n, k, a));
      }
    }
  }
  CHECK_THROWS_AS(gibbs_intervals(1, -1), BadIndex);
}

TEST_CASE("bell-shaped mask ranges") {
  struct Row {
    int n;
    Rational a1, a2, b1, b2, g1, g2;
  };
  const Row rows[] = {
      {1, Rational(-8, 3), Rational(-2, 3), Rational(-14, 9), Rational(2, 3), Rational(-14, 9), Rational(-2, 3)},
      {2, Rational(-6, 5), Rational(-10, 19), Rational(-106, 85), Rational(-10, 17), Rational(-6, 5), Rational(-10, 17)},
      {3, Rational(-1024, 595), Rational(-20, 21), Rational(-3292, 2863), Rational(-20, 33), Rational(-3292, 2863),
       Rational(-20, 21)},
  };
  for (const auto& r : rows) {
    const BellReport b = bell_intervals(r.n);
    CHECK(b.positivity == open(r.a1, r.a2));
    CHECK(b.monotone_rise == open(r.b1, r.b2));
    CHECK(b.bell == open(r.g1, r.g2));
    CHECK(is_subset(b.bell, b.positivity));
    CHECK(is_subset(b.bell, b.monotone_rise));
  }
  CHECK(to_decimal(Rational(-3292, 2863)) == "-1.149842822");
}

TEST_CASE("bell ranges against direct tap inspection") {
  for (int n = 1; n <= 3; ++n) {
    const BellReport b = bell_intervals(n);
    for (int k = -400; k <= 100; ++k) {
      const Rational alpha(k, 100);
      const auto taps = oracle::symbol(n, alpha.to_double());
      bool positive = true, rising = true;
      for (auto t : taps) positive = positive && t > 1e-15L;
      for (int j = 0; j < 2 * n + 1; ++j) rising = rising && taps[static_cast<std::size_t>(j + 1)] - taps[static_cast<std::size_t>(j)] > 1e-15L;
      CAPTURE(n);
      CAPTURE(k);
      CHECK(b.positivity.contains(alpha) == positive);
      CHECK(b.monotone_rise.contains(alpha) == rising);
    }
  }
}

TEST_CASE("shape preservation inside the bell range") {
  std::mt19937 rng(99);
  for (int n = 1; n <= 3; ++n) {
    const ShapeReport s = shape_report(n);
    CHECK(s.has_square_factor);
    const OpenInterval& iv = only(s.alpha);
    const Rational lo = exact(iv.lo), hi = exact(iv.hi);
    for (int a = 0; a < 5; ++a) {
      const Rational alpha = lo + (hi - lo) * Rational(std::uniform_int_distribution<int>(1, 99)(rng), 100);
      const NumericMask<Rational> mask = numeric_mask({n, alpha});
      for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> step(0, 6);
        std::vector<Rational> mono{Rational(0)}, convex{Rational(0)};
        std::vector<int> slopes;
        for (int i = 0; i < 40; ++i) slopes.push_back(step(rng) - 3);
        std::sort(slopes.begin(), slopes.end());
        for (int i = 0; i < 40; ++i) {
          mono.push_back(mono.back() + Rational(step(rng)));
          convex.push_back(convex.back() + Rational(slopes[static_cast<std::size_t>(i)]));
        }
        for (int level = 0; level < 4; ++level) {
          mono = refine_interior(mono, mask);
          convex = refine_interior(convex, mask);
        }
        CAPTURE(n);
        CAPTURE(alpha.str());
        CHECK(nonnegative(differences(mono)));
        CHECK(nonnegative(differences(differences(convex))));
      }
    }
  }
}

TEST_CASE("shape report") {
  const ShapeReport s = shape_report(1);
  CHECK(s.alpha == open(Rational(-14, 9), Rational(-2, 3)));
  CHECK(s.has_square_factor);
  CHECK_FALSE(s.verdict.empty());
  CHECK(shape_report(2).alpha == open(Rational(-6, 5), Rational(-10, 17)));
  CHECK(shape_report(3).alpha == open(Rational(-3292, 2863), Rational(-20, 21)));
}

TEST_CASE("support") {
  CHECK(support(1).lo == -3);
  CHECK(support(1).hi == 3);
  CHECK(support(2).hi == 5);
  CHECK(support(1).level_extent(2) == 9);
  CHECK(support(3).level_extent(0) == 0);
  CHECK(support(3).level_extent(4) == 105);
  CHECK_THROWS_AS(support(0), BadIndex);
}
