#include "combsub/refine.hpp"

namespace combsub::reference {

namespace {

// Point j of a line, wrapped for closed data or reflected through the end points for open data.
template <class T>
T fetch(const T* base, std::size_t stride, std::size_t m, long j, std::size_t comp, Topology topo) {
  const long mm = static_cast<long>(m);
  const auto at = [&](long k) { return base[static_cast<std::size_t>(k) * stride + comp]; };
  if (topo == Topology::closed) return at(((j % mm) + mm) % mm);
  if (j < 0) return T(2) * at(0) - at(-j);
  if (j >= mm) return T(2) * at(mm - 1) - at(2 * (mm - 1) - j);
  return at(j);
}

template <class T>
void refine_line(const NumericMask<T>& mask, Topology topo, const T* src, std::size_t src_stride, std::size_t m,
                 std::size_t dim, T* dst, std::size_t dst_stride) {
  const std::size_t out_count = refined_count(m, topo);
  for (std::size_t o = 0; o < out_count; ++o) {
    const long i = static_cast<long>(o / 2);
    const auto& taps = (o % 2 == 0) ? mask.even : mask.odd;
    for (std::size_t c = 0; c < dim; ++c) {
      T acc(0);
      for (std::size_t t = 0; t < taps.size(); ++t) {
        acc += taps[t] * fetch(src, src_stride, m, i + static_cast<long>(t) - mask.n, c, topo);
      }
      dst[o * dst_stride + c] = acc;
    }
  }
}

}  // namespace

template <class T>
Polygon<T> refine_once(const Polygon<T>& p, const NumericMask<T>& mask) {
  const std::size_t m = p.size();
  const std::size_t dim = p.dim();
  std::vector<T> out(refined_count(m, p.topology()) * dim);
  refine_line(mask, p.topology(), p.coords().data(), dim, m, dim, out.data(), dim);
  return Polygon<T>(dim, std::move(out), p.topology());
}

template <class T>
Grid<T> refine_rows(const Grid<T>& g, const NumericMask<T>& mask) {
  const std::size_t dim = g.dim();
  const std::size_t cols = refined_count(g.cols(), g.u_topology());
  std::vector<T> out(g.rows() * cols * dim);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    refine_line(mask, g.u_topology(), g.coords().data() + r * g.cols() * dim, dim, g.cols(), dim,
                out.data() + r * cols * dim, dim);
  }
  return Grid<T>(g.rows(), cols, dim, std::move(out), g.u_topology(), g.v_topology());
}

template <class T>
Grid<T> refine_columns(const Grid<T>& g, const NumericMask<T>& mask) {
  const std::size_t dim = g.dim();
  const std::size_t rows = refined_count(g.rows(), g.v_topology());
  std::vector<T> out(rows * g.cols() * dim);
  for (std::size_t c = 0; c < g.cols(); ++c) {
    refine_line(mask, g.v_topology(), g.coords().data() + c * dim, g.cols() * dim, g.rows(), dim,
                out.data() + c * dim, g.cols() * dim);
  }
  return Grid<T>(rows, g.cols(), dim, std::move(out), g.u_topology(), g.v_topology());
}

template Polygon<Rational> refine_once(const Polygon<Rational>&, const NumericMask<Rational>&);
template Polygon<double> refine_once(const Polygon<double>&, const NumericMask<double>&);
template Grid<Rational> refine_rows(const Grid<Rational>&, const NumericMask<Rational>&);
template Grid<double> refine_rows(const Grid<double>&, const NumericMask<double>&);
template Grid<Rational> refine_columns(const Grid<Rational>&, const NumericMask<Rational>&);
template Grid<double> refine_columns(const Grid<double>&, const NumericMask<double>&);

}  // namespace combsub::reference
