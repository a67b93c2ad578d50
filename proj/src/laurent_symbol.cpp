#include "combsub/laurent_symbol.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "combsub/errors.hpp"

namespace combsub {

LaurentSymbol::LaurentSymbol(Terms terms) {
  for (auto& [e, c] : terms) {
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
  }
}

LaurentSymbol LaurentSymbol::monomial(int exponent, AlphaPoly coeff) {
  Terms t;
  t.emplace(exponent, std::move(coeff));
  return LaurentSymbol(std::move(t));
}

LaurentSymbol LaurentSymbol::one_plus_z_pow(int k) {
  if (k < 0) throw std::invalid_argument("one_plus_z_pow: negative power");
  std::vector<mpz_class> row{1};
  for (int i = 0; i < k; ++i) {
    std::vector<mpz_class> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  Terms t;
  for (std::size_t j = 0; j < row.size(); ++j) t.emplace(static_cast<int>(j), AlphaPoly(Rational(row[j])));
  return LaurentSymbol(std::move(t));
}

AlphaPoly LaurentSymbol::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? AlphaPoly() : it->second;
}

int LaurentSymbol::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentSymbol::max_exponent() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

int LaurentSymbol::alpha_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, c.degree());
  return d;
}

std::string LaurentSymbol::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ')';
    if (e != 0) os << "*z^" << e;
  }
  return os.str();
}

LaurentSymbol& LaurentSymbol::operator+=(const LaurentSymbol& o) {
  for (const auto& [e, c] : o.terms_) {
    AlphaPoly sum = coeff(e) + c;
    if (sum.is_zero()) {
      terms_.erase(e);
    } else {
      terms_[e] = std::move(sum);
    }
  }
  return *this;
}

LaurentSymbol& LaurentSymbol::operator-=(const LaurentSymbol& o) {
  for (const auto& [e, c] : o.terms_) {
    AlphaPoly diff = coeff(e) - c;
    if (diff.is_zero()) {
      terms_.erase(e);
    } else {
      terms_[e] = std::move(diff);
    }
  }
  return *this;
}

LaurentSymbol& LaurentSymbol::operator*=(const AlphaPoly& s) {
  Terms out;
  for (auto& [e, c] : terms_) out.emplace(e, c * s);
  *this = LaurentSymbol(std::move(out));
  return *this;
}

LaurentSymbol sym_mul(const LaurentSymbol& a, const LaurentSymbol& b) {
  LaurentSymbol::Terms out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) out[ea + eb] += ca * cb;
  }
  return LaurentSymbol(std::move(out));
}

LaurentSymbol sym_upsample(const LaurentSymbol& a, int r) {
  if (r < 1) throw std::invalid_argument("sym_upsample: r must be >= 1");
  LaurentSymbol::Terms out;
  for (const auto& [e, c] : a.terms()) out.emplace(e * r, c);
  return LaurentSymbol(std::move(out));
}

LaurentSymbol sym_divide_linear(const LaurentSymbol& a, int k) {
  if (k < 0) throw std::invalid_argument("sym_divide_linear: negative power");
  LaurentSymbol current = a;
  for (int step = 0; step < k; ++step) {
    if (current.is_zero()) return current;
    // Synthetic division by (1+z) from the lowest exponent upwards.
    const int lo = current.min_exponent();
    const int hi = current.max_exponent();
    LaurentSymbol::Terms quot;
    AlphaPoly carry;
    for (int e = lo; e < hi; ++e) {
      carry = current.coeff(e) - carry;
      if (!carry.is_zero()) quot.emplace(e, carry);
    }
    if (current.coeff(hi) != carry) {
      throw NonDivisible("(1+z)^" + std::to_string(k) + " does not divide the symbol");
    }
    current = LaurentSymbol(std::move(quot));
  }
  return current;
}

LaurentSymbol sym_derivative(const LaurentSymbol& a) {
  LaurentSymbol::Terms out;
  for (const auto& [e, c] : a.terms()) {
    if (e != 0) out.emplace(e - 1, c * Rational(e));
  }
  return LaurentSymbol(std::move(out));
}

AlphaPoly sym_eval_z(const LaurentSymbol& a, int z0) {
  if (z0 != 1 && z0 != -1) throw std::invalid_argument("sym_eval_z: z0 must be +1 or -1");
  AlphaPoly sum;
  for (const auto& [e, c] : a.terms()) {
    if (z0 == -1 && (e % 2 != 0)) {
      sum -= c;
    } else {
      sum += c;
    }
  }
  return sum;
}

std::map<int, Rational> alpha_eval(const LaurentSymbol& a, const Rational& alpha) {
  std::map<int, Rational> out;
  for (const auto& [e, c] : a.terms()) {
    Rational v = c(alpha);
    if (!v.is_zero()) out.emplace(e, std::move(v));
  }
  return out;
}

}  // namespace combsub
