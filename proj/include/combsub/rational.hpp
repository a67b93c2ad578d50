#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>

namespace combsub {

/// Exact arbitrary-precision fraction, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral I>
  Rational(I v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den);
  explicit Rational(mpz_class integer);
  explicit Rational(mpq_class q);

  /// Parses `p/q`, an integer, or a decimal with optional exponent ("-0.32", "1e-12").
  /// Decimals convert exactly as written. Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  /// 2^e for any integer e.
  static Rational pow2(int e);
  static Rational pow10(int e);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  Rational abs() const;
  Rational reciprocal() const;
  mpz_class floor() const;
  mpz_class ceil() const;
  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

/// Simplest fraction (smallest denominator, then smallest magnitude) in the closed range [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace combsub
