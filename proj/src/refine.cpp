#include "combsub/refine.hpp"

#include <stdexcept>
#include <string>

#include "combsub/errors.hpp"
#include "refine_kernels.hpp"

namespace combsub {

NumericMask<Rational> numeric_mask(const SchemeSpec& spec) {
  spec.validate();
  if (!spec.alpha) throw NonNumericAlpha("refinement needs a numeric alpha");
  const MaskPair m = combined_mask(spec.n).specialised(*spec.alpha);
  NumericMask<Rational> out;
  out.n = spec.n;
  for (const auto& t : m.even_rule) out.even.push_back(t.coeff(0));
  for (const auto& t : m.odd_rule) out.odd.push_back(t.coeff(0));
  return out;
}

NumericMask<double> to_double(const NumericMask<Rational>& mask) {
  NumericMask<double> out;
  out.n = mask.n;
  for (const auto& t : mask.even) out.even.push_back(t.to_double());
  for (const auto& t : mask.odd) out.odd.push_back(t.to_double());
  return out;
}

template <class T>
Polygon<T>::Polygon(std::size_t dim, std::vector<T> coords, Topology topology)
    : dim_(dim), coords_(std::move(coords)), topology_(topology) {
  if (dim_ < 1 || dim_ > 3) throw std::invalid_argument("Polygon: dimension must be 1, 2 or 3");
  if (coords_.size() % dim_ != 0) throw std::invalid_argument("Polygon: coordinate count not a multiple of dim");
}

template <class T>
Grid<T>::Grid(std::size_t rows, std::size_t cols, std::size_t dim, std::vector<T> coords, Topology u, Topology v)
    : rows_(rows), cols_(cols), dim_(dim), coords_(std::move(coords)), u_(u), v_(v) {
  if (dim_ < 1 || dim_ > 3) throw std::invalid_argument("Grid: dimension must be 1, 2 or 3");
  if (coords_.size() != rows_ * cols_ * dim_) throw std::invalid_argument("Grid: coordinate count != rows*cols*dim");
}

std::size_t min_points(int n) { return static_cast<std::size_t>(2 * n + 2); }

std::size_t refined_count(std::size_t m, Topology topology) {
  return topology == Topology::closed ? 2 * m : 2 * m - 1;
}

namespace {

template <class T>
NumericMask<T> mask_for(const SchemeSpec& spec);

template <>
NumericMask<Rational> mask_for<Rational>(const SchemeSpec& spec) {
  return numeric_mask(spec);
}

template <>
NumericMask<double> mask_for<double>(const SchemeSpec& spec) {
  return to_double(numeric_mask(spec));
}

void require_points(std::size_t have, int n, const char* what) {
  if (have < min_points(n)) {
    throw TooFewPoints(std::string(what) + " has " + std::to_string(have) + " points, the " +
                       std::to_string(min_points(n)) + "-point scheme needs at least " + std::to_string(min_points(n)));
  }
}

}  // namespace

template <class T>
Polygon<T> refine_curve(const Polygon<T>& p, const SchemeSpec& spec, const RefineOptions& opts) {
  const NumericMask<T> mask = mask_for<T>(spec);
  if (opts.levels < 0) throw std::invalid_argument("levels must be >= 0");
  require_points(p.size(), spec.n, "polygon");
  Polygon<T> cur = p;
  for (int level = 0; level < opts.levels; ++level) {
    cur = opts.execution == Execution::serial ? reference::refine_once(cur, mask) : kernels::refine_curve_parallel(cur, mask);
  }
  return cur;
}

template <class T>
Grid<T> refine_rows(const Grid<T>& g, const NumericMask<T>& mask, Execution execution) {
  return execution == Execution::serial ? reference::refine_rows(g, mask) : kernels::refine_rows_parallel(g, mask);
}

template <class T>
Grid<T> refine_columns(const Grid<T>& g, const NumericMask<T>& mask, Execution execution) {
  return execution == Execution::serial ? reference::refine_columns(g, mask) : kernels::refine_columns_parallel(g, mask);
}

template <class T>
Grid<T> refine_surface(const Grid<T>& g, const SchemeSpec& spec, const RefineOptions& opts) {
  const NumericMask<T> mask = mask_for<T>(spec);
  if (opts.levels < 0) throw std::invalid_argument("levels must be >= 0");
  require_points(g.rows(), spec.n, "grid column");
  require_points(g.cols(), spec.n, "grid row");
  Grid<T> cur = g;
  for (int level = 0; level < opts.levels; ++level) {
    cur = refine_columns(refine_rows(cur, mask, opts.execution), mask, opts.execution);
  }
  return cur;
}

std::map<long, Rational> basic_limit_samples(int n, const Rational& alpha, int levels) {
  if (levels < 0) throw std::invalid_argument("levels must be >= 0");
  const NumericMask<Rational> mask = numeric_mask(SchemeSpec{n, alpha});
  LineWindow<Rational> w;
  w.first = 0;
  w.values = {Rational(1)};
  for (int level = 0; level < levels; ++level) w = refine_window(w, mask.even, mask.odd, n);
  std::map<long, Rational> out;
  for (long i = w.first; i <= w.last(); ++i) {
    if (!w.at(i).is_zero()) out.emplace(i, w.at(i));
  }
  return out;
}

template class Polygon<Rational>;
template class Polygon<double>;
template class Grid<Rational>;
template class Grid<double>;
template Polygon<Rational> refine_curve(const Polygon<Rational>&, const SchemeSpec&, const RefineOptions&);
template Polygon<double> refine_curve(const Polygon<double>&, const SchemeSpec&, const RefineOptions&);
template Grid<Rational> refine_surface(const Grid<Rational>&, const SchemeSpec&, const RefineOptions&);
template Grid<double> refine_surface(const Grid<double>&, const SchemeSpec&, const RefineOptions&);
template Grid<Rational> refine_rows(const Grid<Rational>&, const NumericMask<Rational>&, Execution);
template Grid<double> refine_rows(const Grid<double>&, const NumericMask<double>&, Execution);
template Grid<Rational> refine_columns(const Grid<Rational>&, const NumericMask<Rational>&, Execution);
template Grid<double> refine_columns(const Grid<double>&, const NumericMask<double>&, Execution);

}  // namespace combsub
