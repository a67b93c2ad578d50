#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "combsub/roots.hpp"

namespace combsub {

/// Interval endpoint: -inf, +inf, or a real algebraic number.
class Endpoint {
 public:
  enum class Kind { neg_inf, finite, pos_inf };

  static Endpoint neg_inf() { return Endpoint(Kind::neg_inf); }
  static Endpoint pos_inf() { return Endpoint(Kind::pos_inf); }
  Endpoint(RootEnclosure root);   // NOLINT(google-explicit-constructor)
  Endpoint(const Rational& value);  // NOLINT(google-explicit-constructor)

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  const RootEnclosure& root() const;
  double to_double() const;

 private:
  explicit Endpoint(Kind k) : kind_(k) {}

  Kind kind_;
  std::optional<RootEnclosure> root_;
};

std::strong_ordering compare(const Endpoint& a, const Endpoint& b);
inline bool operator==(const Endpoint& a, const Endpoint& b) { return compare(a, b) == 0; }

struct OpenInterval {
  Endpoint lo;
  Endpoint hi;

  bool contains(const Rational& x) const;
};

/// Finite union of pairwise disjoint open intervals, sorted ascending. Two intervals may
/// share an endpoint (the endpoint itself is excluded from the set), they are never merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  static IntervalSet full_line();
  /// Validates ordering and disjointness; throws std::invalid_argument otherwise.
  static IntervalSet from_intervals(std::vector<OpenInterval> intervals);
  static IntervalSet single(Endpoint lo, Endpoint hi);

  const std::vector<OpenInterval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }
  bool contains(const Rational& x) const;

  friend bool operator==(const IntervalSet& a, const IntervalSet& b);

 private:
  std::vector<OpenInterval> intervals_;
};

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet interval_intersect_all(std::span<const IntervalSet> sets);
bool is_subset(const IntervalSet& inner, const IntervalSet& outer);

/// {alpha : p(alpha) > 0}.
IntervalSet solve_positive(const AlphaPoly& p, const Rational& width = default_root_width());

/// {alpha : sum_i |p_i(alpha)| < bound}, exact; zero polynomials are skipped.
IntervalSet solve_abs_sum_lt(std::span<const AlphaPoly> polys, const Rational& bound,
                             const Rational& width = default_root_width());

}  // namespace combsub
