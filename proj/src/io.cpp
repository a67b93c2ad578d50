#include "combsub/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <optional>
#include <vector>

#include "combsub/errors.hpp"

namespace combsub {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto p = s.find(sep);
    out.push_back(trim(s.substr(0, p)));
    if (p == std::string_view::npos) return out;
    s.remove_prefix(p + 1);
  }
}

Topology parse_topology(std::string_view s, int line) {
  if (s == "closed") return Topology::closed;
  if (s == "open") return Topology::open;
  throw ParseError("unknown topology '" + std::string(s) + "'", line);
}

std::size_t parse_count(std::string_view s, int line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
    throw ParseError("bad grid size '" + std::string(s) + "'", line);
  }
  return v;
}

std::string scalar_str(const Rational& x) { return x.str(); }

std::string scalar_str(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

double as_double(const Rational& x) { return x.to_double(); }
double as_double(double x) { return x; }

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

const char* topology_name(Topology t) { return t == Topology::closed ? "closed" : "open"; }

template <class T>
void append_row(std::string& out, std::span<const T> pt) {
  for (std::size_t c = 0; c < pt.size(); ++c) {
    if (c) out += ',';
    out += scalar_str(pt[c]);
  }
  out += '\n';
}

std::string header(std::size_t dim) {
  static const char* names[] = {"x", "y", "z"};
  std::string h;
  for (std::size_t c = 0; c < dim; ++c) {
    if (c) h += ',';
    h += names[c];
  }
  return h + "\n";
}

}  // namespace

PointSet parse_points_csv(std::string_view text) {
  std::optional<std::size_t> dim;
  std::optional<std::pair<std::size_t, std::size_t>> grid;
  Topology u = Topology::closed;
  Topology v = Topology::closed;
  std::vector<Rational> coords;
  int line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      const auto colon = body.find(':');
      if (colon == std::string_view::npos) continue;
      const std::string_view key = trim(body.substr(0, colon));
      const std::string_view value = trim(body.substr(colon + 1));
      if (key == "topology") {
        const auto parts = split(value, ',');
        if (parts.size() > 2) throw ParseError("topology takes one or two values", line_no);
        u = parse_topology(parts[0], line_no);
        v = parts.size() == 2 ? parse_topology(parts[1], line_no) : u;
      } else if (key == "grid") {
        const auto x = value.find_first_of("xX");
        if (x == std::string_view::npos) throw ParseError("grid must be RxC", line_no);
        grid = {parse_count(trim(value.substr(0, x)), line_no), parse_count(trim(value.substr(x + 1)), line_no)};
      }
      continue;
    }

    const auto fields = split(line, ',');
    if (!dim) {
      static const std::string_view names[] = {"x", "y", "z"};
      if (fields.size() > 3) throw ParseError("header must be x,y[,z]", line_no);
      for (std::size_t c = 0; c < fields.size(); ++c) {
        if (fields[c] != names[c]) throw ParseError("header must be x,y[,z]", line_no);
      }
      dim = fields.size();
      continue;
    }
    if (fields.size() != *dim) {
      throw ParseError("expected " + std::to_string(*dim) + " fields, got " + std::to_string(fields.size()), line_no);
    }
    for (const auto f : fields) {
      try {
        coords.push_back(Rational::parse(f));
      } catch (const std::invalid_argument&) {
        throw ParseError("bad number '" + std::string(f) + "'", line_no);
      }
    }
  }

  if (!dim) throw ParseError("missing x,y[,z] header", line_no);
  if (coords.empty()) throw ParseError("no points", line_no);
  const std::size_t count = coords.size() / *dim;
  if (grid) {
    if (grid->first * grid->second != count) {
      throw ParseError("grid " + std::to_string(grid->first) + "x" + std::to_string(grid->second) + " needs " +
                           std::to_string(grid->first * grid->second) + " points, got " + std::to_string(count),
                       line_no);
    }
    return Grid<Rational>(grid->first, grid->second, *dim, std::move(coords), u, v);
  }
  return Polygon<Rational>(*dim, std::move(coords), u);
}

FileFormat format_from_path(std::string_view path) {
  const auto dot = path.rfind('.');
  const std::string_view ext = dot == std::string_view::npos ? std::string_view{} : path.substr(dot + 1);
  if (ext == "csv") return FileFormat::csv;
  if (ext == "svg") return FileFormat::svg;
  if (ext == "obj") return FileFormat::obj;
  if (ext == "json") return FileFormat::json;
  throw UnsupportedFormat("cannot infer output format from '" + std::string(path) + "'");
}

template <class T>
std::string write_csv(const Polygon<T>& p) {
  std::string out = std::string("# topology: ") + topology_name(p.topology()) + "\n" + header(p.dim());
  for (std::size_t i = 0; i < p.size(); ++i) append_row(out, p.point(i));
  return out;
}

template <class T>
std::string write_csv(const Grid<T>& g) {
  std::string out = "# grid: " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + "\n";
  out += std::string("# topology: ") + topology_name(g.u_topology());
  if (g.v_topology() != g.u_topology()) out += std::string(",") + topology_name(g.v_topology());
  out += "\n" + header(g.dim());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) append_row(out, g.point(r, c));
  }
  return out;
}

template <class T>
std::string write_svg(const Polygon<T>& p) {
  if (p.dim() < 2) throw UnsupportedFormat("svg needs 2-D or 3-D points");
  if (p.size() == 0) throw UnsupportedFormat("svg needs at least one point");
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < p.size(); ++i) pts.emplace_back(as_double(p.point(i)[0]), -as_double(p.point(i)[1]));
  if (p.topology() == Topology::closed) pts.push_back(pts.front());

  auto [xmin, xmax] = std::minmax_element(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.first < b.first; });
  auto [ymin, ymax] = std::minmax_element(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.second < b.second; });
  const double x0 = xmin->first, y0 = ymin->second;
  double w = xmax->first - x0, h = ymax->second - y0;
  const double extent = std::max({w, h, 1e-9});
  const double mx = 0.05 * (w > 0 ? w : extent), my = 0.05 * (h > 0 ? h : extent);

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fixed6(x0 - mx) + " " +
         fixed6(y0 - my) + " " + fixed6(w + 2 * mx) + " " + fixed6(h + 2 * my) + "\">\n";
  out += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"" + fixed6(0.003 * extent) + "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += fixed6(pts[i].first) + "," + fixed6(pts[i].second);
  }
  out += "\"/>\n</svg>\n";
  return out;
}

template <class T>
std::string write_obj(const Grid<T>& g) {
  std::string out;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      const auto pt = g.point(r, c);
      out += 'v';
      for (std::size_t k = 0; k < 3; ++k) out += ' ' + (k < pt.size() ? scalar_str(pt[k]) : std::string("0"));
      out += '\n';
    }
  }
  const std::size_t rows = g.rows(), cols = g.cols();
  const std::size_t face_rows = g.v_topology() == Topology::closed ? rows : rows - 1;
  const std::size_t face_cols = g.u_topology() == Topology::closed ? cols : cols - 1;
  const auto idx = [&](std::size_t r, std::size_t c) { return std::to_string((r % rows) * cols + (c % cols) + 1); };
  for (std::size_t r = 0; r < face_rows; ++r) {
    for (std::size_t c = 0; c < face_cols; ++c) {
      out += "f " + idx(r, c) + " " + idx(r, c + 1) + " " + idx(r + 1, c + 1) + " " + idx(r + 1, c) + "\n";
    }
  }
  return out;
}

template <class T>
std::string write_geometry(const Polygon<T>& p, FileFormat format) {
  switch (format) {
    case FileFormat::csv:
      return write_csv(p);
    case FileFormat::svg:
      return write_svg(p);
    case FileFormat::obj:
      throw UnsupportedFormat("obj output needs a surface");
    case FileFormat::json:
      break;
  }
  throw UnsupportedFormat("json output is for reports");
}

template <class T>
std::string write_geometry(const Grid<T>& g, FileFormat format) {
  switch (format) {
    case FileFormat::csv:
      return write_csv(g);
    case FileFormat::obj:
      return write_obj(g);
    case FileFormat::svg:
      throw UnsupportedFormat("svg output needs a curve");
    case FileFormat::json:
      break;
  }
  throw UnsupportedFormat("json output is for reports");
}

#define COMBSUB_IO_INSTANTIATE(T)                                        \
  template std::string write_csv(const Polygon<T>&);                    \
  template std::string write_csv(const Grid<T>&);                       \
  template std::string write_svg(const Polygon<T>&);                    \
  template std::string write_obj(const Grid<T>&);                       \
  template std::string write_geometry(const Polygon<T>&, FileFormat);   \
  template std::string write_geometry(const Grid<T>&, FileFormat);

COMBSUB_IO_INSTANTIATE(Rational)
COMBSUB_IO_INSTANTIATE(double)

#undef COMBSUB_IO_INSTANTIATE

}  // namespace combsub
