#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "combsub/schemes.hpp"

namespace combsub {

enum class Topology { closed, open };
enum class Execution { serial, parallel };

/// Mask taps specialised to a scalar type. Tap t of either rule reads source i + t - n.
template <class T>
struct NumericMask {
  int n = 1;
  std::vector<T> even;
  std::vector<T> odd;
};

/// Combined mask at spec.alpha; throws NonNumericAlpha when alpha is symbolic.
NumericMask<Rational> numeric_mask(const SchemeSpec& spec);
NumericMask<double> to_double(const NumericMask<Rational>& mask);

/// Ordered points of dimension 1..3, stored interleaved.
template <class T>
class Polygon {
 public:
  Polygon() = default;
  Polygon(std::size_t dim, std::vector<T> coords, Topology topology);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  Topology topology() const { return topology_; }
  const std::vector<T>& coords() const { return coords_; }
  std::span<const T> point(std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::size_t dim_ = 2;
  std::vector<T> coords_;
  Topology topology_ = Topology::closed;
};

/// rows x cols control net, row-major. `u` is the direction along a row (column index),
/// `v` the direction along a column (row index).
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, std::size_t dim, std::vector<T> coords, Topology u, Topology v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return dim_; }
  Topology u_topology() const { return u_; }
  Topology v_topology() const { return v_; }
  const std::vector<T>& coords() const { return coords_; }
  std::span<const T> point(std::size_t r, std::size_t c) const { return {coords_.data() + (r * cols_ + c) * dim_, dim_}; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t dim_ = 3;
  std::vector<T> coords_;
  Topology u_ = Topology::closed;
  Topology v_ = Topology::closed;
};

struct RefineOptions {
  int levels = 1;
  Execution execution = Execution::parallel;
};

/// Minimum control points per direction for the (2n+2)-point rules.
std::size_t min_points(int n);

/// Points after one level: 2m for closed data, 2m-1 for open data.
std::size_t refined_count(std::size_t m, Topology topology);

template <class T>
Polygon<T> refine_curve(const Polygon<T>& p, const SchemeSpec& spec, const RefineOptions& opts = {});

template <class T>
Grid<T> refine_surface(const Grid<T>& g, const SchemeSpec& spec, const RefineOptions& opts = {});

/// One level along the u direction only (each row refined as a curve).
template <class T>
Grid<T> refine_rows(const Grid<T>& g, const NumericMask<T>& mask, Execution execution = Execution::parallel);

/// One level along the v direction only (each column refined as a curve).
template <class T>
Grid<T> refine_columns(const Grid<T>& g, const NumericMask<T>& mask, Execution execution = Execution::parallel);

/// Values on a window of the integer line, extended by constants on both sides.
template <class V>
struct LineWindow {
  long first = 0;
  std::vector<V> values;
  V left_fill{};
  V right_fill{};

  long last() const { return first + static_cast<long>(values.size()) - 1; }
  const V& at(long i) const {
    if (i < first) return left_fill;
    if (i > last()) return right_fill;
    return values[static_cast<std::size_t>(i - first)];
  }
};

/// One refinement level of bi-infinite data. The output window covers every index whose
/// value can differ from the (unchanged) fills, which requires taps summing to one.
template <class V, class W>
LineWindow<V> refine_window(const LineWindow<V>& in, const std::vector<W>& even, const std::vector<W>& odd, int n) {
  LineWindow<V> out;
  out.first = 2 * in.first - 2 * n - 1;
  const long out_last = 2 * in.last() + 2 * n + 1;
  out.left_fill = in.left_fill;
  out.right_fill = in.right_fill;
  out.values.reserve(static_cast<std::size_t>(out_last - out.first + 1));
  for (long o = out.first; o <= out_last; ++o) {
    const bool is_even = (o % 2 == 0);
    const long i = is_even ? o / 2 : (o - 1) / 2;
    const auto& taps = is_even ? even : odd;
    V acc{};
    for (std::size_t t = 0; t < taps.size(); ++t) acc += taps[t] * in.at(i + static_cast<long>(t) - n);
    out.values.push_back(std::move(acc));
  }
  return out;
}

/// Samples phi(i / 2^levels) of the basic limit function, nonzero entries only.
std::map<long, Rational> basic_limit_samples(int n, const Rational& alpha, int levels);

namespace reference {

/// Straightforward single-threaded refinement with modular indexing; the parallel kernels
/// must agree with it bit for bit.
template <class T>
Polygon<T> refine_once(const Polygon<T>& p, const NumericMask<T>& mask);

template <class T>
Grid<T> refine_rows(const Grid<T>& g, const NumericMask<T>& mask);

template <class T>
Grid<T> refine_columns(const Grid<T>& g, const NumericMask<T>& mask);

}  // namespace reference

}  // namespace combsub
