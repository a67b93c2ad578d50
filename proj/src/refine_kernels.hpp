#pragma once

// Internal: parallel refinement kernels shared by refine.cpp and refine_parallel.cpp.

#include "combsub/refine.hpp"

namespace combsub::kernels {

template <class T>
Polygon<T> refine_curve_parallel(const Polygon<T>& p, const NumericMask<T>& mask);

template <class T>
Grid<T> refine_rows_parallel(const Grid<T>& g, const NumericMask<T>& mask);

template <class T>
Grid<T> refine_columns_parallel(const Grid<T>& g, const NumericMask<T>& mask);

}  // namespace combsub::kernels
