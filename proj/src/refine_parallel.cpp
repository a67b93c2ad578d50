#include <omp.h>

#include "refine_kernels.hpp"

namespace combsub::kernels {

namespace {

// Copies one line into `ext` with n+1 ghost points on each side so the tap loops never branch.
template <class T>
void extend_line(const T* src, std::size_t stride, std::size_t m, std::size_t dim, Topology topo, long pad,
                 std::vector<T>& ext) {
  const long mm = static_cast<long>(m);
  ext.resize((m + 2 * static_cast<std::size_t>(pad)) * dim);
  const auto at = [&](long k, std::size_t c) { return src[static_cast<std::size_t>(k) * stride + c]; };
  for (long j = -pad; j < mm + pad; ++j) {
    for (std::size_t c = 0; c < dim; ++c) {
      T v;
      if (topo == Topology::closed) {
        v = at(((j % mm) + mm) % mm, c);
      } else if (j < 0) {
        v = T(2) * at(0, c) - at(-j, c);
      } else if (j >= mm) {
        v = T(2) * at(mm - 1, c) - at(2 * (mm - 1) - j, c);
      } else {
        v = at(j, c);
      }
      ext[static_cast<std::size_t>(j + pad) * dim + c] = std::move(v);
    }
  }
}

template <class T>
void emit(const NumericMask<T>& mask, const std::vector<T>& ext, long pad, std::size_t dim, std::size_t o, T* dst,
          std::size_t dst_stride) {
  const long i = static_cast<long>(o / 2);
  const auto& taps = (o % 2 == 0) ? mask.even : mask.odd;
  const std::size_t base = static_cast<std::size_t>(i - mask.n + pad);
  for (std::size_t c = 0; c < dim; ++c) {
    T acc(0);
    for (std::size_t t = 0; t < taps.size(); ++t) acc += taps[t] * ext[(base + t) * dim + c];
    dst[o * dst_stride + c] = acc;
  }
}

template <class T>
void refine_lines(const NumericMask<T>& mask, Topology topo, const T* src, std::size_t line_step, std::size_t stride,
                  std::size_t lines, std::size_t m, std::size_t dim, T* dst, std::size_t dst_line_step,
                  std::size_t dst_stride) {
  const long pad = mask.n + 1;
  const std::size_t out_count = refined_count(m, topo);
  const auto nlines = static_cast<long>(lines);
#pragma omp parallel
  {
    std::vector<T> ext;
#pragma omp for schedule(static)
    for (long l = 0; l < nlines; ++l) {
      const auto line = static_cast<std::size_t>(l);
      extend_line(src + line * line_step, stride, m, dim, topo, pad, ext);
      for (std::size_t o = 0; o < out_count; ++o) emit(mask, ext, pad, dim, o, dst + line * dst_line_step, dst_stride);
    }
  }
}

}  // namespace

template <class T>
Polygon<T> refine_curve_parallel(const Polygon<T>& p, const NumericMask<T>& mask) {
  const std::size_t m = p.size();
  const std::size_t dim = p.dim();
  const long pad = mask.n + 1;
  const std::size_t out_count = refined_count(m, p.topology());
  std::vector<T> out(out_count * dim);
  std::vector<T> ext;
  extend_line(p.coords().data(), dim, m, dim, p.topology(), pad, ext);
  const auto total = static_cast<long>(out_count);
#pragma omp parallel for schedule(static)
  for (long o = 0; o < total; ++o) emit(mask, ext, pad, dim, static_cast<std::size_t>(o), out.data(), dim);
  return Polygon<T>(dim, std::move(out), p.topology());
}

template <class T>
Grid<T> refine_rows_parallel(const Grid<T>& g, const NumericMask<T>& mask) {
  const std::size_t dim = g.dim();
  const std::size_t cols = refined_count(g.cols(), g.u_topology());
  std::vector<T> out(g.rows() * cols * dim);
  refine_lines(mask, g.u_topology(), g.coords().data(), g.cols() * dim, dim, g.rows(), g.cols(), dim, out.data(),
               cols * dim, dim);
  return Grid<T>(g.rows(), cols, dim, std::move(out), g.u_topology(), g.v_topology());
}

template <class T>
Grid<T> refine_columns_parallel(const Grid<T>& g, const NumericMask<T>& mask) {
  const std::size_t dim = g.dim();
  const std::size_t rows = refined_count(g.rows(), g.v_topology());
  std::vector<T> out(rows * g.cols() * dim);
  refine_lines(mask, g.v_topology(), g.coords().data(), dim, g.cols() * dim, g.cols(), g.rows(), dim, out.data(), dim,
               g.cols() * dim);
  return Grid<T>(rows, g.cols(), dim, std::move(out), g.u_topology(), g.v_topology());
}

template Polygon<Rational> refine_curve_parallel(const Polygon<Rational>&, const NumericMask<Rational>&);
template Polygon<double> refine_curve_parallel(const Polygon<double>&, const NumericMask<double>&);
template Grid<Rational> refine_rows_parallel(const Grid<Rational>&, const NumericMask<Rational>&);
template Grid<double> refine_rows_parallel(const Grid<double>&, const NumericMask<double>&);
template Grid<Rational> refine_columns_parallel(const Grid<Rational>&, const NumericMask<Rational>&);
template Grid<double> refine_columns_parallel(const Grid<double>&, const NumericMask<double>&);

}  // namespace combsub::kernels
