#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combsub/rational.hpp"

namespace combsub {

/// Univariate polynomial in the tension parameter alpha with exact rational coefficients.
/// Coefficient i multiplies alpha^i; trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class AlphaPoly {
 public:
  AlphaPoly() = default;
  AlphaPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  AlphaPoly(I constant) : AlphaPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit AlphaPoly(std::vector<Rational> coefficients);

  /// The monomial alpha.
  static AlphaPoly alpha();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(int power) const;
  Rational leading() const;

  Rational operator()(const Rational& alpha) const;
  AlphaPoly derivative() const;
  AlphaPoly monic() const;

  /// Same roots, each with multiplicity one.
  AlphaPoly squarefree() const;

  /// Positive rescaling to integer coefficients with gcd 1; returns the integer leading coefficient.
  mpz_class primitive_leading() const;

  std::string str(std::string_view var = "alpha") const;

  AlphaPoly& operator+=(const AlphaPoly& o);
  AlphaPoly& operator-=(const AlphaPoly& o);
  AlphaPoly& operator*=(const Rational& s);

  friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
  friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
  friend AlphaPoly operator*(AlphaPoly a, const Rational& s) { return a *= s; }
  friend AlphaPoly operator*(const Rational& s, AlphaPoly a) { return a *= s; }
  friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
  AlphaPoly operator-() const;

  friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws ZeroPolynomial when b is zero.
std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly& a, const AlphaPoly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
AlphaPoly gcd(AlphaPoly a, AlphaPoly b);

}  // namespace combsub
