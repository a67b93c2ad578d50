#include "combsub/analysis.hpp"

#include <exception>

#include "combsub/errors.hpp"

namespace combsub {

namespace {

LaurentSymbol symbolic_symbol(int n) { return scheme_symbol(SchemeSpec{n, std::nullopt}); }

LaurentSymbol specialise(const LaurentSymbol& a, const Rational& alpha) {
  LaurentSymbol::Terms terms;
  for (const auto& [e, v] : alpha_eval(a, alpha)) terms.emplace(e, AlphaPoly(v));
  return LaurentSymbol(std::move(terms));
}

IntervalSet contractive_set(const LaurentSymbol& a, int j, int L, const Rational& width) {
  const LaurentSymbol cl = iterated_symbol(difference_symbol(a, j), L);
  const int modulus = 1 << L;
  std::vector<IntervalSet> per_residue;
  per_residue.reserve(static_cast<std::size_t>(modulus));
  for (int l = 0; l < modulus; ++l) {
    per_residue.push_back(solve_abs_sum_lt(residue_class(cl, modulus, l), Rational(1), width));
  }
  return interval_intersect_all(per_residue);
}

// Largest j such that pred(i) holds for every i <= j, scanning i = 0..limit; -1 when pred(0) fails.
template <class Pred>
int contiguous_degree(int limit, Pred pred) {
  int degree = -1;
  for (int i = 0; i <= limit && pred(i); ++i) degree = i;
  return degree;
}

std::vector<LaurentSymbol> derivatives(const LaurentSymbol& a, int count) {
  std::vector<LaurentSymbol> out{a};
  for (int i = 1; i <= count; ++i) out.push_back(sym_derivative(out.back()));
  return out;
}

}  // namespace

bool check_sum_rule(const LaurentSymbol& a) {
  return sym_eval_z(a, 1) == AlphaPoly(2) && sym_eval_z(a, -1).is_zero();
}

bool check_sum_rule(const SchemeSpec& spec) { return check_sum_rule(scheme_symbol(spec)); }

LaurentSymbol difference_symbol(const LaurentSymbol& a, int j) {
  if (j < 0) throw BadIndex("difference order must be >= 0");
  return sym_divide_linear(a * AlphaPoly(Rational::pow2(j)), j + 1);
}

LaurentSymbol iterated_symbol(const LaurentSymbol& c, int L) {
  if (L < 1) throw BadIndex("L must be >= 1");
  LaurentSymbol out = c;
  for (int r = 1; r < L; ++r) out = sym_mul(out, sym_upsample(c, 1 << r));
  return out;
}

std::vector<AlphaPoly> residue_class(const LaurentSymbol& c, int modulus, int l) {
  std::vector<AlphaPoly> out;
  for (const auto& [e, v] : c.terms()) {
    if (((e % modulus) + modulus) % modulus == l) out.push_back(v);
  }
  return out;
}

Rational contractivity_norm(const LaurentSymbol& a, int j, int L, const Rational& alpha) {
  const LaurentSymbol cl = iterated_symbol(difference_symbol(specialise(a, alpha), j), L);
  const int modulus = 1 << L;
  std::vector<Rational> sums(static_cast<std::size_t>(modulus), Rational(0));
  for (const auto& [e, v] : cl.terms()) {
    sums[static_cast<std::size_t>(((e % modulus) + modulus) % modulus)] += v.coeff(0).abs();
  }
  Rational best(0);
  for (const auto& s : sums) best = std::max(best, s);
  return best;
}

ContinuityReport continuity_intervals(int n, int L, const Rational& width, Execution execution) {
  SchemeSpec{n, std::nullopt}.validate();
  if (L < 1) throw BadIndex("L must be >= 1");

  ContinuityReport report;
  report.n = n;
  report.L = L;

  const LaurentSymbol a = symbolic_symbol(n);
  const int orders = 2 * n + 2;
  std::vector<IntervalSet> sets(static_cast<std::size_t>(orders));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (execution == Execution::parallel)
  for (int j = 0; j < orders; ++j) {
    try {
      sets[static_cast<std::size_t>(j)] = contractive_set(a, j, L, width);
    } catch (...) {
#pragma omp critical(continuity_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  const LaurentSymbol b = bspline_symbol(n);
  const int minus_one = contiguous_degree(4 * n + 1, [&](int j) {
    return contractivity_norm(b, j, L, Rational(-1)) < Rational(1);
  });
  if (minus_one >= 0) report.alpha_minus_one_order = minus_one;

  for (int j = 0; j < orders; ++j) {
    auto& set = sets[static_cast<std::size_t>(j)];
    const bool only = set.empty() && minus_one >= j;
    report.rows.push_back({j, std::move(set), only});
  }
  for (int j = orders; j <= minus_one; ++j) report.rows.push_back({j, IntervalSet(), true});
  return report;
}

DegreeReport generation_degree(int n) {
  SchemeSpec{n, std::nullopt}.validate();
  const int limit = 4 * n + 2;
  const auto da = derivatives(symbolic_symbol(n), limit);
  const auto db = derivatives(bspline_symbol(n), limit);

  DegreeReport r;
  r.kind = DegreeKind::generation;
  r.special_alpha = Rational(-1);
  r.degree_all_alpha = contiguous_degree(limit, [&](int i) { return sym_eval_z(da[static_cast<std::size_t>(i)], -1).is_zero(); });
  r.degree_special = contiguous_degree(limit, [&](int i) { return sym_eval_z(db[static_cast<std::size_t>(i)], -1).is_zero(); });
  return r;
}

DegreeReport reproduction_degree(int n) {
  SchemeSpec{n, std::nullopt}.validate();
  const int limit = 4 * n + 3;

  const auto degree_of = [limit](const LaurentSymbol& a) {
    const auto d = derivatives(a, limit);
    const AlphaPoly tau = sym_eval_z(d[1], 1) * Rational(1, 2);
    std::vector<AlphaPoly> falling{AlphaPoly(2)};
    for (int p = 0; p < limit; ++p) falling.push_back(falling.back() * (tau - AlphaPoly(p)));
    return contiguous_degree(limit, [&](int i) {
      const auto& di = d[static_cast<std::size_t>(i)];
      return sym_eval_z(di, 1) == falling[static_cast<std::size_t>(i)] && sym_eval_z(di, -1).is_zero();
    });
  };

  DegreeReport r;
  r.kind = DegreeKind::reproduction;
  r.special_alpha = Rational(0);
  r.degree_all_alpha = degree_of(symbolic_symbol(n));
  r.degree_special = degree_of(scheme_symbol(SchemeSpec{n, Rational(0)}));
  return r;
}

GibbsReport gibbs_intervals(int n, int k, const Rational& width) {
  SchemeSpec{n, std::nullopt}.validate();
  if (k < 0) throw BadIndex("k must be >= 0");
  const MaskPair mask = combined_mask(n);

  LineWindow<AlphaPoly> w;
  w.first = -1;
  w.values = {AlphaPoly(10), AlphaPoly(-10)};
  w.left_fill = AlphaPoly(10);
  w.right_fill = AlphaPoly(-10);
  for (int level = 0; level <= k; ++level) w = refine_window(w, mask.even_rule, mask.odd_rule, n);

  const AlphaPoly& minus = w.at(-(1L << (k + 1)));
  const AlphaPoly& plus = w.at(0);

  GibbsReport r;
  r.n = n;
  r.k = k;
  r.interval = intersect(solve_positive(AlphaPoly(10) - minus, width), solve_positive(plus + AlphaPoly(10), width));
  r.within_negative_half_line = is_subset(r.interval, IntervalSet::single(Endpoint::neg_inf(), Rational(0)));
  return r;
}

BellReport bell_intervals(int n) {
  SchemeSpec{n, std::nullopt}.validate();
  const LaurentSymbol a = symbolic_symbol(n);

  BellReport r;
  r.positivity = IntervalSet::full_line();
  for (int j = 0; j <= 4 * n + 2; ++j) r.positivity = intersect(r.positivity, solve_positive(a.coeff(j)));
  r.monotone_rise = IntervalSet::full_line();
  for (int j = 0; j <= 2 * n; ++j) {
    r.monotone_rise = intersect(r.monotone_rise, solve_positive(a.coeff(j + 1) - a.coeff(j)));
  }
  r.bell = intersect(r.positivity, r.monotone_rise);
  return r;
}

long SupportInfo::level_extent(int k) const {
  if (k < 0) throw BadIndex("level must be >= 0");
  return ((1L << k) - 1) * (2L * n + 1);
}

SupportInfo support(int n) {
  SchemeSpec{n, std::nullopt}.validate();
  return SupportInfo{n, -(2L * n + 1), 2L * n + 1};
}

ShapeReport shape_report(int n) {
  ShapeReport r;
  r.alpha = bell_intervals(n).bell;
  try {
    sym_divide_linear(symbolic_symbol(n), 2);
    r.has_square_factor = true;
  } catch (const NonDivisible&) {
    r.has_square_factor = false;
  }
  if (!r.has_square_factor) {
    r.verdict = "symbol lacks the (1+z)^2 factor; no shape guarantee";
  } else if (r.alpha.empty()) {
    r.verdict = "mask is never bell-shaped; no shape guarantee";
  } else {
    r.verdict = "bell-shaped mask with (1+z)^2 factor: monotonicity and convexity preserved";
  }
  return r;
}

}  // namespace combsub
