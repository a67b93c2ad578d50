#include "combsub/interval_set.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace combsub {

Endpoint::Endpoint(RootEnclosure root) : kind_(Kind::finite), root_(std::move(root)) {}
Endpoint::Endpoint(const Rational& value) : kind_(Kind::finite), root_(RootEnclosure(value)) {}

const RootEnclosure& Endpoint::root() const {
  if (!root_) throw std::logic_error("Endpoint: infinite endpoint has no value");
  return *root_;
}

double Endpoint::to_double() const {
  switch (kind_) {
    case Kind::neg_inf:
      return -std::numeric_limits<double>::infinity();
    case Kind::pos_inf:
      return std::numeric_limits<double>::infinity();
    case Kind::finite:
      break;
  }
  return root_->to_double();
}

std::strong_ordering compare(const Endpoint& a, const Endpoint& b) {
  const auto rank = [](Endpoint::Kind k) { return static_cast<int>(k); };
  if (a.kind() != b.kind() || !a.is_finite()) return rank(a.kind()) <=> rank(b.kind());
  return compare(a.root(), b.root());
}

bool OpenInterval::contains(const Rational& x) const {
  const Endpoint e(x);
  return compare(lo, e) < 0 && compare(e, hi) < 0;
}

IntervalSet IntervalSet::full_line() { return single(Endpoint::neg_inf(), Endpoint::pos_inf()); }

IntervalSet IntervalSet::single(Endpoint lo, Endpoint hi) {
  std::vector<OpenInterval> v;
  v.push_back({std::move(lo), std::move(hi)});
  return from_intervals(std::move(v));
}

IntervalSet IntervalSet::from_intervals(std::vector<OpenInterval> intervals) {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (compare(intervals[i].lo, intervals[i].hi) >= 0) throw std::invalid_argument("IntervalSet: empty interval");
    if (i > 0 && compare(intervals[i - 1].hi, intervals[i].lo) > 0) {
      throw std::invalid_argument("IntervalSet: intervals overlap or are unsorted");
    }
  }
  IntervalSet s;
  s.intervals_ = std::move(intervals);
  return s;
}

bool IntervalSet::contains(const Rational& x) const {
  return std::any_of(intervals_.begin(), intervals_.end(), [&](const OpenInterval& i) { return i.contains(x); });
}

bool operator==(const IntervalSet& a, const IntervalSet& b) {
  if (a.intervals_.size() != b.intervals_.size()) return false;
  for (std::size_t i = 0; i < a.intervals_.size(); ++i) {
    if (!(a.intervals_[i].lo == b.intervals_[i].lo) || !(a.intervals_[i].hi == b.intervals_[i].hi)) return false;
  }
  return true;
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<OpenInterval> out;
  const auto& ia = a.intervals();
  const auto& ib = b.intervals();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ia.size() && j < ib.size()) {
    const Endpoint& lo = compare(ia[i].lo, ib[j].lo) >= 0 ? ia[i].lo : ib[j].lo;
    const auto hc = compare(ia[i].hi, ib[j].hi);
    const Endpoint& hi = hc <= 0 ? ia[i].hi : ib[j].hi;
    if (compare(lo, hi) < 0) out.push_back({lo, hi});
    if (hc <= 0) ++i;
    if (hc >= 0) ++j;
  }
  return IntervalSet::from_intervals(std::move(out));
}

IntervalSet interval_intersect_all(std::span<const IntervalSet> sets) {
  IntervalSet acc = IntervalSet::full_line();
  for (const auto& s : sets) acc = intersect(acc, s);
  return acc;
}

bool is_subset(const IntervalSet& inner, const IntervalSet& outer) { return intersect(inner, outer) == inner; }

namespace {

Rational sample_between(const Endpoint& lo, const Endpoint& hi) {
  if (!lo.is_finite() && !hi.is_finite()) return Rational(0);
  if (!lo.is_finite()) return rational_below(hi.root()) - Rational(1);
  if (!hi.is_finite()) return rational_above(lo.root()) + Rational(1);
  return rational_between(lo.root(), hi.root());
}

std::vector<RootEnclosure> sorted_unique(std::vector<RootEnclosure> roots) {
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return compare(x, y) < 0; });
  std::vector<RootEnclosure> out;
  for (auto& r : roots) {
    if (out.empty() || compare(out.back(), r) != 0) out.push_back(std::move(r));
  }
  return out;
}

// Alternating open pieces and points; membership decided by a callback, maximal runs of
// members are emitted as open intervals.
IntervalSet assemble(const std::vector<RootEnclosure>& breaks, const std::vector<bool>& piece_in,
                     const std::vector<bool>& point_in) {
  std::vector<OpenInterval> out;
  std::optional<Endpoint> start;
  const std::size_t pieces = breaks.size() + 1;
  for (std::size_t k = 0; k < pieces; ++k) {
    const Endpoint lo = k == 0 ? Endpoint::neg_inf() : Endpoint(breaks[k - 1]);
    const Endpoint hi = k + 1 == pieces ? Endpoint::pos_inf() : Endpoint(breaks[k]);
    if (piece_in[k]) {
      if (!start) start = lo;
      const bool continues = k + 1 < pieces && point_in[k] && piece_in[k + 1];
      if (!continues) {
        out.push_back({*start, hi});
        start.reset();
      }
    }
  }
  return IntervalSet::from_intervals(std::move(out));
}

}  // namespace

IntervalSet solve_positive(const AlphaPoly& p, const Rational& width) {
  if (p.is_zero()) return {};
  if (p.degree() == 0) return p.leading().sign() > 0 ? IntervalSet::full_line() : IntervalSet();
  const auto roots = isolate_real_roots(p, width);
  std::vector<bool> piece_in;
  for (std::size_t k = 0; k <= roots.size(); ++k) {
    const Endpoint lo = k == 0 ? Endpoint::neg_inf() : Endpoint(roots[k - 1]);
    const Endpoint hi = k == roots.size() ? Endpoint::pos_inf() : Endpoint(roots[k]);
    piece_in.push_back(p(sample_between(lo, hi)).sign() > 0);
  }
  return assemble(roots, piece_in, std::vector<bool>(roots.size(), false));
}

IntervalSet solve_abs_sum_lt(std::span<const AlphaPoly> polys, const Rational& bound, const Rational& width) {
  std::vector<AlphaPoly> live;
  for (const auto& p : polys) {
    if (!p.is_zero()) live.push_back(p);
  }
  const auto excess_at = [&](const Rational& x) {
    Rational sum(0);
    for (const auto& p : live) sum += p(x).abs();
    return sum - bound;
  };

  // Sign pattern of every p_i is constant between consecutive roots.
  std::vector<RootEnclosure> cell_breaks;
  for (const auto& p : live) {
    if (p.degree() >= 1) {
      auto r = isolate_real_roots(p, width);
      cell_breaks.insert(cell_breaks.end(), r.begin(), r.end());
    }
  }
  cell_breaks = sorted_unique(std::move(cell_breaks));

  std::vector<RootEnclosure> breaks;
  std::vector<bool> point_is_cell_break;
  for (std::size_t k = 0; k <= cell_breaks.size(); ++k) {
    const Endpoint lo = k == 0 ? Endpoint::neg_inf() : Endpoint(cell_breaks[k - 1]);
    const Endpoint hi = k == cell_breaks.size() ? Endpoint::pos_inf() : Endpoint(cell_breaks[k]);
    const Rational t = sample_between(lo, hi);
    AlphaPoly s = -AlphaPoly(bound);
    for (const auto& p : live) {
      if (p(t).sign() < 0) {
        s -= p;
      } else {
        s += p;
      }
    }
    if (s.degree() >= 1) {
      for (auto& r : isolate_real_roots(s, width)) {
        const Endpoint e(r);
        if (compare(lo, e) < 0 && compare(e, hi) < 0) {
          breaks.push_back(std::move(r));
          point_is_cell_break.push_back(false);
        }
      }
    }
    if (k < cell_breaks.size()) {
      breaks.push_back(cell_breaks[k]);
      point_is_cell_break.push_back(true);
    }
  }

  std::vector<bool> piece_in;
  for (std::size_t k = 0; k <= breaks.size(); ++k) {
    const Endpoint lo = k == 0 ? Endpoint::neg_inf() : Endpoint(breaks[k - 1]);
    const Endpoint hi = k == breaks.size() ? Endpoint::pos_inf() : Endpoint(breaks[k]);
    piece_in.push_back(excess_at(sample_between(lo, hi)).sign() < 0);
  }
  std::vector<bool> point_in;
  for (std::size_t k = 0; k < breaks.size(); ++k) {
    if (!point_is_cell_break[k]) {
      point_in.push_back(false);  // the sum equals the bound there
      continue;
    }
    const RootEnclosure& x = breaks[k];
    AlphaPoly s = -AlphaPoly(bound);
    for (const auto& p : live) {
      const int sg = sign_at(p, x);
      if (sg < 0) {
        s -= p;
      } else if (sg > 0) {
        s += p;
      }
    }
    point_in.push_back(sign_at(s, x) < 0);
  }
  return assemble(breaks, piece_in, point_in);
}

}  // namespace combsub
