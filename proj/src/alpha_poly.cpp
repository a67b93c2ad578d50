#include "combsub/alpha_poly.hpp"

#include <sstream>

#include "combsub/errors.hpp"

namespace combsub {

AlphaPoly::AlphaPoly(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

AlphaPoly::AlphaPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

AlphaPoly AlphaPoly::alpha() { return AlphaPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

void AlphaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational AlphaPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational AlphaPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational AlphaPoly::operator()(const Rational& alpha) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= alpha;
    acc += *it;
  }
  return acc;
}

AlphaPoly AlphaPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return AlphaPoly(std::move(d));
}

AlphaPoly AlphaPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().reciprocal();
}

AlphaPoly AlphaPoly::squarefree() const {
  if (degree() < 1) return monic();
  const AlphaPoly g = gcd(*this, derivative());
  return divmod(*this, g).first.monic();
}

mpz_class AlphaPoly::primitive_leading() const {
  if (is_zero()) return mpz_class(0);
  mpz_class l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    const mpz_class v = (c * Rational(l)).numerator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return abs(mpz_class((leading() * Rational(l)).numerator() / g));
}

std::string AlphaPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.str();
      continue;
    }
    if (mag != Rational(1)) os << mag.str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return AlphaPoly(std::move(out));
}

AlphaPoly AlphaPoly::operator-() const { return *this * Rational(-1); }

std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly& a, const AlphaPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("polynomial division by zero");
  if (a.degree() < b.degree()) return {AlphaPoly(), a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational inv_lead = b.leading().reciprocal();
  const auto& bc = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + b.degree());
    const Rational q = rem[top] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
  }
  return {AlphaPoly(std::move(quot)), AlphaPoly(std::move(rem))};
}

AlphaPoly gcd(AlphaPoly a, AlphaPoly b) {
  while (!b.is_zero()) {
    AlphaPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace combsub
