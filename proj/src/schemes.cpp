#include "combsub/schemes.hpp"

#include <string>

#include "combsub/errors.hpp"

namespace combsub {

void SchemeSpec::validate() const {
  if (n < 1) throw BadIndex("scheme index n must be >= 1 (got " + std::to_string(n) + ")");
}

namespace {

void require_index(int n) { SchemeSpec{n, std::nullopt}.validate(); }

std::vector<AlphaPoly> specialise(const std::vector<AlphaPoly>& taps, const Rational& alpha) {
  std::vector<AlphaPoly> out;
  out.reserve(taps.size());
  for (const auto& t : taps) out.emplace_back(t(alpha));
  return out;
}

}  // namespace

MaskPair MaskPair::specialised(const Rational& alpha) const {
  return MaskPair{n, specialise(even_rule, alpha), specialise(odd_rule, alpha)};
}

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  std::vector<mpz_class> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<mpz_class> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

MaskPair dd_mask(int n) {
  require_index(n);
  MaskPair m;
  m.n = n;
  m.even_rule.assign(static_cast<std::size_t>(2 * n + 1), AlphaPoly());
  m.even_rule[static_cast<std::size_t>(n)] = AlphaPoly(1);
  const Rational scale = Rational::pow2(-(4 * n + 1));
  const mpz_class central = binomial(2 * n + 1, n);
  for (int j = -n - 1; j <= n; ++j) {
    const mpz_class num = mpz_class((j % 2 == 0) ? 1 : -1) * (n + 1) * central * binomial(2 * n + 1, n + j + 1);
    const Rational w = Rational(mpq_class(num, mpz_class(2 * j + 1))) * scale;
    m.odd_rule.emplace_back(w);
  }
  return m;
}

MaskPair bspline_mask(int n) {
  require_index(n);
  MaskPair m;
  m.n = n;
  const Rational scale = Rational::pow2(-(4 * n + 1));
  for (int j = 0; j <= 2 * n; ++j) m.even_rule.emplace_back(Rational(binomial(4 * n + 2, 2 * j + 1)) * scale);
  for (int j = 0; j <= 2 * n + 1; ++j) m.odd_rule.emplace_back(Rational(binomial(4 * n + 2, 2 * j)) * scale);
  return m;
}

MaskPair combined_mask(int n) {
  const MaskPair dd = dd_mask(n);
  const MaskPair bs = bspline_mask(n);
  const AlphaPoly a = AlphaPoly::alpha();
  const AlphaPoly one_plus_a = AlphaPoly(1) + a;
  MaskPair m;
  m.n = n;
  for (std::size_t t = 0; t < dd.even_rule.size(); ++t) m.even_rule.push_back(one_plus_a * dd.even_rule[t] - a * bs.even_rule[t]);
  for (std::size_t t = 0; t < dd.odd_rule.size(); ++t) m.odd_rule.push_back(one_plus_a * dd.odd_rule[t] - a * bs.odd_rule[t]);
  return m;
}

LaurentSymbol symbol_of(const MaskPair& mask) {
  LaurentSymbol::Terms terms;
  for (std::size_t t = 0; t < mask.even_rule.size(); ++t) terms.emplace(static_cast<int>(2 * t + 1), mask.even_rule[t]);
  for (std::size_t t = 0; t < mask.odd_rule.size(); ++t) terms.emplace(static_cast<int>(2 * t), mask.odd_rule[t]);
  return LaurentSymbol(std::move(terms));
}

LaurentSymbol scheme_symbol(const SchemeSpec& spec) {
  spec.validate();
  const MaskPair m = combined_mask(spec.n);
  return symbol_of(spec.alpha ? m.specialised(*spec.alpha) : m);
}

LaurentSymbol bspline_symbol(int n) {
  require_index(n);
  return LaurentSymbol::one_plus_z_pow(4 * n + 2) * AlphaPoly(Rational::pow2(-(4 * n + 1)));
}

LaurentSymbol factor_symbol(const SchemeSpec& spec) {
  const LaurentSymbol a = scheme_symbol(spec);
  const int n = spec.n;
  LaurentSymbol big = sym_divide_linear(a * AlphaPoly(Rational::pow2(2 * n + 1)), 2 * n + 2);
  if (big.min_exponent() != 0 || big.max_exponent() != 2 * n) {
    throw NonDivisible("factored symbol has unexpected degree " + std::to_string(big.max_exponent()));
  }
  return big;
}

}  // namespace combsub
