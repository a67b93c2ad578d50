#pragma once

#include <map>
#include <string>

#include "combsub/alpha_poly.hpp"

namespace combsub {

/// Laurent polynomial a(z) = sum_e a_e z^e whose coefficients are polynomials in alpha.
/// Zero coefficients are never stored.
class LaurentSymbol {
 public:
  using Terms = std::map<int, AlphaPoly>;

  LaurentSymbol() = default;
  explicit LaurentSymbol(Terms terms);

  static LaurentSymbol monomial(int exponent, AlphaPoly coeff);
  static LaurentSymbol one() { return monomial(0, AlphaPoly(1)); }
  /// (1+z)^k with binomial coefficients.
  static LaurentSymbol one_plus_z_pow(int k);

  const Terms& terms() const { return terms_; }
  AlphaPoly coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;

  /// Largest alpha-degree over all coefficients (-1 for the zero symbol).
  int alpha_degree() const;

  std::string str() const;

  LaurentSymbol& operator+=(const LaurentSymbol& o);
  LaurentSymbol& operator-=(const LaurentSymbol& o);
  LaurentSymbol& operator*=(const AlphaPoly& s);
  friend LaurentSymbol operator+(LaurentSymbol a, const LaurentSymbol& b) { return a += b; }
  friend LaurentSymbol operator-(LaurentSymbol a, const LaurentSymbol& b) { return a -= b; }
  friend LaurentSymbol operator*(LaurentSymbol a, const AlphaPoly& s) { return a *= s; }

  friend bool operator==(const LaurentSymbol& a, const LaurentSymbol& b) = default;

 private:
  Terms terms_;
};

LaurentSymbol sym_mul(const LaurentSymbol& a, const LaurentSymbol& b);

/// z -> z^r.
LaurentSymbol sym_upsample(const LaurentSymbol& a, int r);

/// Exact quotient a / (1+z)^k. Throws NonDivisible when the factor is not present.
LaurentSymbol sym_divide_linear(const LaurentSymbol& a, int k);

LaurentSymbol sym_derivative(const LaurentSymbol& a);

/// a(z0) for z0 in {+1, -1}, as a polynomial in alpha.
AlphaPoly sym_eval_z(const LaurentSymbol& a, int z0);

/// Coefficients specialised at a numeric alpha; zero coefficients are dropped.
std::map<int, Rational> alpha_eval(const LaurentSymbol& a, const Rational& alpha);

}  // namespace combsub
