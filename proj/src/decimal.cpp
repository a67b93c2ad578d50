#include "combsub/decimal.hpp"

#include <cmath>
#include <stdexcept>

namespace combsub {

namespace {

// e with 10^e <= x < 10^{e+1}, for x > 0.
int decimal_exponent(const Rational& x) {
  int e = static_cast<int>(std::floor(std::log10(x.to_double())));
  while (Rational::pow10(e) > x) --e;
  while (Rational::pow10(e + 1) <= x) ++e;
  return e;
}

mpz_class round_half_even(const Rational& y) {
  mpz_class f = y.floor();
  const Rational frac = y - Rational(f);
  const Rational half(1, 2);
  if (frac > half || (frac == half && mpz_odd_p(f.get_mpz_t()))) f += 1;
  return f;
}

struct Rounded {
  int sign = 0;
  mpz_class mantissa;  // exactly `digits` digits unless sign == 0
  int exponent = 0;    // value = mantissa * 10^(exponent - digits + 1)
  bool operator==(const Rounded&) const = default;
};

Rounded round_to(const Rational& x, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  if (x.is_zero()) return {};
  const Rational ax = x.abs();
  Rounded r{x.sign(), 0, decimal_exponent(ax)};
  r.mantissa = round_half_even(ax * Rational::pow10(digits - 1 - r.exponent));
  if (r.mantissa == Rational::pow10(digits).numerator()) {
    r.mantissa /= 10;
    ++r.exponent;
  }
  return r;
}

std::string render(const Rounded& r, int digits) {
  if (r.sign == 0) return "0";
  const std::string sign = r.sign < 0 ? "-" : "";
  const std::string s = r.mantissa.get_str();
  const int e = r.exponent;
  if (e >= digits - 1) return sign + s + std::string(static_cast<std::size_t>(e - digits + 1), '0');
  if (e >= 0) {
    const auto ip = static_cast<std::size_t>(e + 1);
    return sign + s.substr(0, ip) + "." + s.substr(ip);
  }
  return sign + "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
}

}  // namespace

std::string to_decimal(const Rational& x, int digits) {
  if (x.is_integer() && digits >= 1) return x.str();
  return render(round_to(x, digits), digits);
}

std::string to_decimal(const RootEnclosure& x, int digits) {
  RootEnclosure r = x;
  for (;;) {
    if (r.is_exact()) return to_decimal(r.value(), digits);
    const Rounded lo = round_to(r.lo(), digits);
    if (lo == round_to(r.hi(), digits)) return render(lo, digits);
    r.bisect();
  }
}

std::string to_decimal(const Endpoint& x, int digits) {
  switch (x.kind()) {
    case Endpoint::Kind::neg_inf:
      return "-inf";
    case Endpoint::Kind::pos_inf:
      return "inf";
    case Endpoint::Kind::finite:
      break;
  }
  return to_decimal(x.root(), digits);
}

}  // namespace combsub
