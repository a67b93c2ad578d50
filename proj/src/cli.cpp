#include "combsub/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "combsub/errors.hpp"
#include "combsub/io.hpp"
#include "combsub/report.hpp"

namespace combsub {

namespace {

// Bad values inside otherwise well-formed arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::string tolerance;
};

Rational parse_rational(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("invalid ") + what + " '" + text + "'");
  }
}

Rational width_of(const Globals& g) {
  if (g.tolerance.empty()) return default_root_width();
  const Rational w = parse_rational(g.tolerance, "--tolerance");
  if (w.sign() <= 0) throw UsageError("--tolerance must be positive");
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << bytes)) throw std::runtime_error("cannot write '" + path + "'");
}

void emit(std::ostream& out, const Globals& g, const AnalysisReportDocument& d) {
  out << (g.format == "json" ? render_json(d) : render_text(d));
}

void emit_summary(std::ostream& out, const Globals& g, const std::string& command, const std::string& kind,
                  std::size_t points, const std::string& output) {
  if (g.format == "json") {
    const nlohmann::json j = {{"command", command}, {"kind", kind}, {"points", points}, {"output", output}};
    out << j.dump(2) << "\n";
  } else {
    out << command << " " << kind << ": " << points << " points written to " << output << "\n";
  }
}

struct RefineArgs {
  int n = 1;
  std::string alpha;
  int levels = 1;
  std::string input;
  std::string output;
  std::string numeric = "exact";
};

template <class T>
Polygon<T> convert(const Polygon<Rational>& p);
template <>
Polygon<Rational> convert(const Polygon<Rational>& p) {
  return p;
}
template <>
Polygon<double> convert(const Polygon<Rational>& p) {
  std::vector<double> c;
  for (const auto& x : p.coords()) c.push_back(x.to_double());
  return Polygon<double>(p.dim(), std::move(c), p.topology());
}

template <class T>
Grid<T> convert(const Grid<Rational>& g);
template <>
Grid<Rational> convert(const Grid<Rational>& g) {
  return g;
}
template <>
Grid<double> convert(const Grid<Rational>& g) {
  std::vector<double> c;
  for (const auto& x : g.coords()) c.push_back(x.to_double());
  return Grid<double>(g.rows(), g.cols(), g.dim(), std::move(c), g.u_topology(), g.v_topology());
}

template <class T>
std::pair<std::string, std::size_t> refine_as(const PointSet& data, bool surface, const SchemeSpec& spec,
                                              const RefineOptions& opts, FileFormat format) {
  if (surface) {
    const auto* g = std::get_if<Grid<Rational>>(&data);
    if (!g) throw UnsupportedFormat("refine surface needs a '# grid: RxC' input");
    const Grid<T> r = refine_surface(convert<T>(*g), spec, opts);
    return {write_geometry(r, format), r.rows() * r.cols()};
  }
  const auto* p = std::get_if<Polygon<Rational>>(&data);
  if (!p) throw UnsupportedFormat("refine curve needs a points file without grid metadata");
  const Polygon<T> r = refine_curve(convert<T>(*p), spec, opts);
  return {write_geometry(r, format), r.size()};
}

void add_n(CLI::App* cmd, int& n) { cmd->add_option("--n", n, "family index (2n+2 points)")->required(); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analysis and refinement for the (2n+2)-point combined subdivision family", "combsub"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tolerance", g.tolerance, "enclosure width for irrational endpoints (default 1e-12)");
  app.set_version_flag("--version", std::string(tool_name) + " " + tool_version);

  std::function<void()> action;

  int n = 1;
  std::string alpha;

  auto* mask = app.add_subcommand("mask", "print the mask symbol coefficients")->fallthrough();
  add_n(mask, n);
  mask->add_option("--alpha", alpha, "tension parameter (p/q or decimal); symbolic when omitted");
  mask->callback([&] {
    SchemeSpec spec{n, std::nullopt};
    if (!alpha.empty()) spec.alpha = parse_rational(alpha, "--alpha");
    spec.validate();
    action = [&, spec] { emit(out, g, mask_document(spec)); };
  });

  auto* analyze = app.add_subcommand("analyze", "analyse the family")->fallthrough()->require_subcommand(1);

  int L = 1;
  auto* cont = analyze->add_subcommand("continuity", "alpha ranges per continuity order")->fallthrough();
  add_n(cont, n);
  cont->add_option("--L", L, "number of iterated difference steps")->required();
  cont->add_option("--alpha", alpha, "only -1: report the B-spline branch alone");
  cont->callback([&] {
    if (!alpha.empty() && parse_rational(alpha, "--alpha") != Rational(-1)) {
      throw UsageError("continuity --alpha accepts only -1");
    }
    action = [&] {
      const auto r = continuity_intervals(n, L, width_of(g));
      emit(out, g, alpha.empty() ? report_document(r) : minus_one_document(r));
    };
  });

  auto* gen = analyze->add_subcommand("generation", "polynomial generation degree")->fallthrough();
  add_n(gen, n);
  gen->callback([&] { action = [&] { emit(out, g, report_document(generation_degree(n), n)); }; });

  auto* rep = analyze->add_subcommand("reproduction", "polynomial reproduction degree")->fallthrough();
  add_n(rep, n);
  rep->callback([&] { action = [&] { emit(out, g, report_document(reproduction_degree(n), n)); }; });

  int k = 0;
  auto* gibbs = analyze->add_subcommand("gibbs", "alpha range without Gibbs overshoot at a step")->fallthrough();
  add_n(gibbs, n);
  gibbs->add_option("--k", k, "refinement level")->required();
  gibbs->callback([&] { action = [&] { emit(out, g, report_document(gibbs_intervals(n, k, width_of(g)))); }; });

  auto* bell = analyze->add_subcommand("bell", "alpha ranges for a bell-shaped mask")->fallthrough();
  add_n(bell, n);
  bell->callback([&] { action = [&] { emit(out, g, report_document(bell_intervals(n), n)); }; });

  auto* shape = analyze->add_subcommand("shape", "monotonicity and convexity preservation")->fallthrough();
  add_n(shape, n);
  shape->callback([&] { action = [&] { emit(out, g, report_document(shape_report(n), n)); }; });

  RefineArgs ra;
  auto* refine = app.add_subcommand("refine", "refine a curve or surface")->fallthrough()->require_subcommand(1);
  for (const char* kind : {"curve", "surface"}) {
    auto* cmd = refine->add_subcommand(kind, std::string("refine a ") + kind)->fallthrough();
    add_n(cmd, ra.n);
    cmd->add_option("--alpha", ra.alpha, "tension parameter")->required();
    cmd->add_option("--levels", ra.levels, "refinement levels")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--input", ra.input, "points file")->required();
    cmd->add_option("--output", ra.output, "output file (.csv, .svg, .obj)")->required();
    cmd->add_option("--numeric", ra.numeric, "arithmetic")->check(CLI::IsMember({"exact", "double"}));
    const bool surface = std::string(kind) == "surface";
    cmd->callback([&, surface] {
      const SchemeSpec spec{ra.n, parse_rational(ra.alpha, "--alpha")};
      spec.validate();
      action = [&, spec, surface] {
        const FileFormat format = format_from_path(ra.output);
        const PointSet data = parse_points_csv(read_file(ra.input));
        const RefineOptions opts{ra.levels, Execution::parallel};
        const auto [bytes, count] = ra.numeric == "double" ? refine_as<double>(data, surface, spec, opts, format)
                                                           : refine_as<Rational>(data, surface, spec, opts, format);
        write_file(ra.output, bytes);
        emit_summary(out, g, "refine", surface ? "surface" : "curve", count, ra.output);
      };
    });
  }

  int levels = 0;
  std::string output;
  auto* basis = app.add_subcommand("basis", "sample the basic limit function")->fallthrough();
  add_n(basis, n);
  basis->add_option("--alpha", alpha, "tension parameter")->required();
  basis->add_option("--levels", levels, "refinement levels")->required()->check(CLI::NonNegativeNumber);
  basis->add_option("--output", output, "output file (.csv, .svg)")->required();
  basis->callback([&] {
    const SchemeSpec spec{n, parse_rational(alpha, "--alpha")};
    spec.validate();
    action = [&, spec] {
      const FileFormat format = format_from_path(output);
      const auto samples = basic_limit_samples(n, *spec.alpha, levels);
      const long extent = support(n).level_extent(levels) + 1;
      const Rational step = Rational::pow2(-levels);
      std::vector<Rational> coords;
      for (long i = -extent; i <= extent; ++i) {
        coords.push_back(Rational(i) * step);
        const auto it = samples.find(i);
        coords.push_back(it == samples.end() ? Rational(0) : it->second);
      }
      const Polygon<Rational> curve(2, std::move(coords), Topology::open);
      write_file(output, write_geometry(curve, format));
      emit_summary(out, g, "basis", "samples", curve.size(), output);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (action) action();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const UnsupportedFormat& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_domain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
}

}  // namespace combsub
