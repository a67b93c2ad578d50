#include "combsub/roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "combsub/errors.hpp"

namespace combsub {

Rational default_root_width() { return Rational::pow10(-12); }

std::vector<AlphaPoly> sturm_sequence(const AlphaPoly& p) {
  std::vector<AlphaPoly> chain{p};
  if (p.degree() < 1) return chain;
  chain.push_back(p.derivative());
  while (chain.back().degree() > 0) {
    AlphaPoly r = -divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations(const std::vector<AlphaPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = q(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_roots(const AlphaPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw ZeroPolynomial("count_roots of the zero polynomial");
  const auto chain = sturm_sequence(p.squarefree());
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

RootEnclosure::RootEnclosure(const Rational& exact)
    : poly_(AlphaPoly(std::vector<Rational>{-exact, Rational(1)})), lo_(exact), hi_(exact), width_(0) {}

RootEnclosure::RootEnclosure(AlphaPoly squarefree_poly, Rational lo, Rational hi, Rational width_bound)
    : poly_(std::move(squarefree_poly)), lo_(std::move(lo)), hi_(std::move(hi)), width_(std::move(width_bound)) {
  if (poly_.degree() == 1) {
    // Linear: the root is known exactly.
    *this = RootEnclosure(-poly_.coeff(0) / poly_.coeff(1));
  }
}

double RootEnclosure::to_double() const {
  if (is_exact()) return lo_.to_double();
  return ((lo_ + hi_) / Rational(2)).to_double();
}

void RootEnclosure::bisect() {
  if (is_exact()) return;
  const Rational mid = (lo_ + hi_) / Rational(2);
  const int sm = poly_(mid).sign();
  if (sm == 0) {
    *this = RootEnclosure(mid);
    return;
  }
  if (sm == poly_(lo_).sign()) {
    lo_ = mid;
  } else {
    hi_ = mid;
  }
}

void RootEnclosure::refine_to(const Rational& width) {
  while (!is_exact() && hi_ - lo_ > width) bisect();
  if (!is_exact() && width < width_) width_ = width;
}

RootEnclosure RootEnclosure::refined(const Rational& width) const {
  RootEnclosure copy = *this;
  copy.refine_to(width);
  return copy;
}

RootEnclosure RootEnclosure::operator-() const {
  if (is_exact()) return RootEnclosure(-lo_);
  std::vector<Rational> c = poly_.coefficients();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  RootEnclosure out(AlphaPoly(std::move(c)).monic(), -hi_, -lo_, width_);
  return out;
}

namespace {

// Cauchy bound: every root satisfies |x| < bound.
Rational root_bound(const AlphaPoly& p) {
  Rational m(0);
  const Rational lead = p.leading().abs();
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, p.coeff(i).abs() / lead);
  return m + Rational(1);
}

// Tries to recognise a rational root inside the enclosure. A rational root u/v of the
// primitive integer form has v | lead, so once the width drops below 1/lead^2 the
// simplest fraction in the range is the only candidate.
void snap_rational(RootEnclosure& r, const mpz_class& lead) {
  if (r.is_exact()) return;
  const Rational limit(mpq_class(mpz_class(1), mpz_class(lead * lead)));
  r.refine_to(limit / Rational(2));
  if (r.is_exact()) return;
  const Rational candidate = simplest_between(r.lo(), r.hi());
  if (r.poly()(candidate).is_zero()) r = RootEnclosure(candidate);
}

}  // namespace

std::vector<RootEnclosure> isolate_real_roots(const AlphaPoly& p, const Rational& width) {
  if (p.is_zero()) throw ZeroPolynomial("isolate_real_roots: zero polynomial has no isolatable roots");
  std::vector<RootEnclosure> out;
  if (p.degree() < 1) return out;
  const AlphaPoly sq = p.squarefree();
  if (sq.degree() == 1) {
    out.emplace_back(-sq.coeff(0) / sq.coeff(1));
    return out;
  }
  const auto chain = sturm_sequence(sq);
  const mpz_class lead = sq.primitive_leading();
  const Rational bound = root_bound(sq);

  // Cells are open intervals whose endpoints are never roots, so the Sturm count
  // V(lo) - V(hi) is exactly the number of roots inside.
  struct Cell {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Cell> stack{{-bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound)}};
  while (!stack.empty()) {
    Cell c = std::move(stack.back());
    stack.pop_back();
    const int count = c.vlo - c.vhi;
    if (count == 0) continue;
    if (count == 1) {
      RootEnclosure r(sq, c.lo, c.hi, width);
      snap_rational(r, lead);
      r.refine_to(width);
      out.push_back(std::move(r));
      continue;
    }
    const Rational mid = (c.lo + c.hi) / Rational(2);
    if (!sq(mid).is_zero()) {
      const int vmid = sign_variations(chain, mid);
      stack.push_back({c.lo, mid, c.vlo, vmid});
      stack.push_back({mid, c.hi, vmid, c.vhi});
      continue;
    }
    // The midpoint is a root: record it and carve out a root-free neighbourhood.
    out.emplace_back(mid);
    Rational delta = (c.hi - c.lo) / Rational(4);
    for (;;) {
      const Rational left = mid - delta;
      const Rational right = mid + delta;
      if (!sq(left).is_zero() && !sq(right).is_zero()) {
        const int vl = sign_variations(chain, left);
        const int vr = sign_variations(chain, right);
        if (vl - vr == 1) {
          stack.push_back({c.lo, left, c.vlo, vl});
          stack.push_back({right, c.hi, vr, c.vhi});
          break;
        }
      }
      delta /= Rational(2);
    }
  }
  std::sort(out.begin(), out.end(), [](const RootEnclosure& a, const RootEnclosure& b) { return compare(a, b) < 0; });
  return out;
}

std::strong_ordering compare(const RootEnclosure& a, const RootEnclosure& b) {
  if (a.is_exact() && b.is_exact()) return a.value() <=> b.value();
  if (a.is_exact()) {
    if (a.value() <= b.lo()) return std::strong_ordering::less;
    if (a.value() >= b.hi()) return std::strong_ordering::greater;
    if (b.poly()(a.value()).is_zero()) return std::strong_ordering::equal;
    RootEnclosure bb = b;
    for (;;) {
      bb.bisect();
      if (bb.is_exact()) return a.value() <=> bb.value();
      if (a.value() <= bb.lo()) return std::strong_ordering::less;
      if (a.value() >= bb.hi()) return std::strong_ordering::greater;
    }
  }
  if (b.is_exact()) return 0 <=> compare(b, a);

  RootEnclosure aa = a;
  RootEnclosure bb = b;
  bool equality_checked = false;
  for (;;) {
    if (aa.is_exact() || bb.is_exact()) return compare(aa, bb);
    if (aa.hi() <= bb.lo()) return std::strong_ordering::less;
    if (bb.hi() <= aa.lo()) return std::strong_ordering::greater;
    if (!equality_checked) {
      // A common root inside the overlap is the unique root of both enclosures.
      equality_checked = true;
      const AlphaPoly g = gcd(aa.poly(), bb.poly());
      if (g.degree() >= 1) {
        const Rational olo = std::max(aa.lo(), bb.lo());
        const Rational ohi = std::min(aa.hi(), bb.hi());
        if (g(ohi).is_zero() || count_roots(g, olo, ohi) > 0) return std::strong_ordering::equal;
      } else {
        // Distinct roots: bisection will separate them.
      }
    }
    aa.bisect();
    bb.bisect();
  }
}

int sign_at(const AlphaPoly& q, const RootEnclosure& x) {
  if (x.is_exact()) return q(x.value()).sign();
  if (q.is_zero()) return 0;
  if (q.degree() == 0) return q.leading().sign();
  const AlphaPoly g = gcd(q, x.poly());
  if (g.degree() >= 1 && count_roots(g, x.lo(), x.hi()) > 0) return 0;
  // q has no root at x; shrink until q has no root in the enclosure either.
  const AlphaPoly qs = q.squarefree();
  const auto chain = sturm_sequence(qs);
  RootEnclosure xx = x;
  for (;;) {
    if (xx.is_exact()) return q(xx.value()).sign();
    if (!qs(xx.lo()).is_zero() && !qs(xx.hi()).is_zero() &&
        sign_variations(chain, xx.lo()) == sign_variations(chain, xx.hi())) {
      return q(xx.lo()).sign();
    }
    xx.bisect();
  }
}

Rational rational_between(const RootEnclosure& a, const RootEnclosure& b) {
  if (compare(a, b) >= 0) throw std::invalid_argument("rational_between: a >= b");
  RootEnclosure aa = a;
  RootEnclosure bb = b;
  for (;;) {
    const Rational ahi = aa.is_exact() ? aa.value() : aa.hi();
    const Rational blo = bb.is_exact() ? bb.value() : bb.lo();
    if (ahi < blo) return simplest_between(ahi + (blo - ahi) / Rational(4), blo - (blo - ahi) / Rational(4));
    aa.bisect();
    bb.bisect();
  }
}

Rational rational_above(const RootEnclosure& x) {
  return x.is_exact() ? x.value() + Rational(1) : x.hi();
}

Rational rational_below(const RootEnclosure& x) {
  return x.is_exact() ? x.value() - Rational(1) : x.lo();
}

}  // namespace combsub
