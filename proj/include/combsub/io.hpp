#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "combsub/refine.hpp"

namespace combsub {

using PointSet = std::variant<Polygon<Rational>, Grid<Rational>>;

/// Points file: `x,y[,z]` header, one point per row, integer, decimal or p/q literals.
/// `# topology: closed|open` (or `u,v` for grids) and `# grid: RxC` comments are metadata,
/// other `#` lines are ignored. Throws ParseError with the offending line number.
PointSet parse_points_csv(std::string_view text);

enum class FileFormat { csv, svg, obj, json };

/// From the extension of `path`; throws UnsupportedFormat for anything else.
FileFormat format_from_path(std::string_view path);

template <class T>
std::string write_csv(const Polygon<T>& p);
template <class T>
std::string write_csv(const Grid<T>& g);

/// SVG 1.1 polyline through the points (closed curves return to the start), y axis up,
/// viewBox fit to the bounding box plus 5% margin. Needs 2-D or 3-D points (z is dropped).
template <class T>
std::string write_svg(const Polygon<T>& p);

/// `v` lines row-major, then 1-based quads; closed directions wrap around.
template <class T>
std::string write_obj(const Grid<T>& g);

/// Dispatch on format; throws UnsupportedFormat for curve/obj, surface/svg and json geometry.
template <class T>
std::string write_geometry(const Polygon<T>& p, FileFormat format);
template <class T>
std::string write_geometry(const Grid<T>& g, FileFormat format);

}  // namespace combsub
