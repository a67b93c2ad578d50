#pragma once

#include <compare>
#include <vector>

#include "combsub/alpha_poly.hpp"

namespace combsub {

/// Default enclosure width for irrational roots.
Rational default_root_width();

/// Sturm chain p, p', -rem(p, p'), ... of a squarefree polynomial.
std::vector<AlphaPoly> sturm_sequence(const AlphaPoly& p);

/// Number of sign changes of the chain at x (zeros skipped).
int sign_variations(const std::vector<AlphaPoly>& chain, const Rational& x);

/// Number of distinct real roots of p in the half-open range (lo, hi].
int count_roots(const AlphaPoly& p, const Rational& lo, const Rational& hi);

/// A real algebraic number: either an exact rational, or the unique root of a squarefree
/// polynomial inside an open rational interval (lo, hi) whose endpoints are not roots.
class RootEnclosure {
 public:
  explicit RootEnclosure(const Rational& exact);
  /// Caller guarantees exactly one root of `poly` in (lo, hi) and none at the endpoints.
  RootEnclosure(AlphaPoly squarefree_poly, Rational lo, Rational hi, Rational width_bound);

  bool is_exact() const { return lo_ == hi_; }
  const AlphaPoly& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  const Rational& width_bound() const { return width_; }
  /// Only meaningful when is_exact().
  const Rational& value() const { return lo_; }
  double to_double() const;

  /// Halves the enclosure; may turn it exact when the midpoint is the root.
  void bisect();
  /// Bisects until hi - lo <= width.
  void refine_to(const Rational& width);
  RootEnclosure refined(const Rational& width) const;

  RootEnclosure operator-() const;

 private:
  AlphaPoly poly_;
  Rational lo_;
  Rational hi_;
  Rational width_;
};

/// One enclosure per distinct real root, sorted ascending, each no wider than `width`.
/// Rational roots come back exact. Throws ZeroPolynomial for p == 0.
std::vector<RootEnclosure> isolate_real_roots(const AlphaPoly& p, const Rational& width);

/// Exact ordering of two real algebraic numbers.
std::strong_ordering compare(const RootEnclosure& a, const RootEnclosure& b);
inline bool operator==(const RootEnclosure& a, const RootEnclosure& b) { return compare(a, b) == 0; }

/// Sign of q at the algebraic number x (exact).
int sign_at(const AlphaPoly& q, const RootEnclosure& x);

/// A rational strictly between a and b; requires a < b.
Rational rational_between(const RootEnclosure& a, const RootEnclosure& b);

/// Rationals r with r > x (resp. r < x).
Rational rational_above(const RootEnclosure& x);
Rational rational_below(const RootEnclosure& x);

}  // namespace combsub
