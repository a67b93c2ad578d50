#include "combsub/report.hpp"

#include <stdexcept>

#include "combsub/decimal.hpp"

namespace combsub {

using nlohmann::json;

namespace {

std::string scheme_line(const AnalysisReportDocument& d) {
  std::string s = d.analysis + ", n=" + std::to_string(d.n) + " (" + std::to_string(d.points) + "-point)";
  for (const auto& [k, v] : d.parameters) s += ", " + k + "=" + v;
  return s;
}

AnalysisReportDocument base_document(int n, std::string analysis) {
  AnalysisReportDocument d;
  d.n = n;
  d.points = 2 * n + 2;
  d.analysis = std::move(analysis);
  return d;
}

std::string interval_text(const IntervalDoc& iv) {
  return std::string(iv.lo_open ? "(" : "[") + iv.lo.decimal + ", " + iv.hi.decimal + (iv.hi_open ? ")" : "]");
}

json endpoint_json(const EndpointDoc& e) {
  json j = {{"kind", e.kind}, {"decimal", e.decimal}};
  if (e.exact) j["exact"] = *e.exact;
  if (e.enclosure) j["enclosure"] = {{"poly", e.enclosure->poly}, {"lo", e.enclosure->lo}, {"hi", e.enclosure->hi}};
  return j;
}

EndpointDoc endpoint_from_json(const json& j) {
  EndpointDoc e;
  e.kind = j.at("kind").get<std::string>();
  e.decimal = j.at("decimal").get<std::string>();
  if (j.contains("exact")) e.exact = j.at("exact").get<std::string>();
  if (j.contains("enclosure")) {
    const json& q = j.at("enclosure");
    e.enclosure = EnclosureDoc{q.at("poly").get<std::vector<std::string>>(), q.at("lo").get<std::string>(),
                               q.at("hi").get<std::string>()};
  }
  return e;
}

}  // namespace

EndpointDoc endpoint_doc(const Endpoint& e) {
  EndpointDoc d;
  d.decimal = to_decimal(e);
  switch (e.kind()) {
    case Endpoint::Kind::neg_inf:
      d.kind = "neg_inf";
      return d;
    case Endpoint::Kind::pos_inf:
      d.kind = "pos_inf";
      return d;
    case Endpoint::Kind::finite:
      break;
  }
  const RootEnclosure& r = e.root();
  if (r.is_exact()) {
    d.exact = r.value().str();
  } else {
    EnclosureDoc enc;
    for (const auto& c : r.poly().coefficients()) enc.poly.push_back(c.str());
    enc.lo = r.lo().str();
    enc.hi = r.hi().str();
    d.enclosure = std::move(enc);
  }
  return d;
}

std::vector<IntervalDoc> interval_docs(const IntervalSet& s) {
  std::vector<IntervalDoc> out;
  for (const auto& iv : s.intervals()) out.push_back({endpoint_doc(iv.lo), endpoint_doc(iv.hi), true, true});
  return out;
}

Endpoint endpoint_from_doc(const EndpointDoc& d) {
  if (d.kind == "neg_inf") return Endpoint::neg_inf();
  if (d.kind == "pos_inf") return Endpoint::pos_inf();
  if (d.kind != "finite") throw std::invalid_argument("unknown endpoint kind '" + d.kind + "'");
  if (d.exact) return Endpoint(Rational::parse(*d.exact));
  if (!d.enclosure) throw std::invalid_argument("finite endpoint without exact value or enclosure");
  std::vector<Rational> coeffs;
  for (const auto& c : d.enclosure->poly) coeffs.push_back(Rational::parse(c));
  const Rational lo = Rational::parse(d.enclosure->lo);
  const Rational hi = Rational::parse(d.enclosure->hi);
  if (!(lo < hi)) throw std::invalid_argument("empty enclosure");
  AlphaPoly p(std::move(coeffs));
  if (count_roots(p, lo, hi) != 1 || p(lo).is_zero() || p(hi).is_zero()) {
    throw std::invalid_argument("enclosure does not isolate a single root");
  }
  return Endpoint(RootEnclosure(p.squarefree(), lo, hi, hi - lo));
}

AnalysisReportDocument mask_document(const SchemeSpec& spec) {
  auto d = base_document(spec.n, "mask");
  d.parameters["alpha"] = spec.alpha ? spec.alpha->str() : "symbolic";
  const LaurentSymbol a = scheme_symbol(spec);
  for (int j = 0; j <= 4 * spec.n + 2; ++j) {
    const AlphaPoly c = a.coeff(j);
    RowDoc row{"a_" + std::to_string(j), {}, ValueDoc{}, std::nullopt};
    if (c.is_constant()) {
      row.value->exact = c.coeff(0).str();
      row.value->decimal = to_decimal(c.coeff(0));
    } else {
      row.value->exact = c.str();
    }
    d.rows.push_back(std::move(row));
  }
  return d;
}

AnalysisReportDocument report_document(const ContinuityReport& r) {
  auto d = base_document(r.n, "continuity");
  d.parameters["L"] = std::to_string(r.L);
  for (const auto& row : r.rows) {
    RowDoc out{"C" + std::to_string(row.order), interval_docs(row.alpha), std::nullopt, std::nullopt};
    if (row.minus_one_only) out.note = "alpha=-1";
    d.rows.push_back(std::move(out));
  }
  return d;
}

AnalysisReportDocument minus_one_document(const ContinuityReport& r) {
  auto d = base_document(r.n, "continuity");
  d.parameters["L"] = std::to_string(r.L);
  d.parameters["alpha"] = "-1";
  RowDoc row{"alpha=-1", {}, std::nullopt, std::nullopt};
  if (r.alpha_minus_one_order) {
    row.value = ValueDoc{std::to_string(*r.alpha_minus_one_order), std::nullopt};
    row.note = "C" + std::to_string(*r.alpha_minus_one_order);
  } else {
    row.note = "not contractive";
  }
  d.rows.push_back(std::move(row));
  return d;
}

AnalysisReportDocument report_document(const DegreeReport& r, int n) {
  auto d = base_document(n, r.kind == DegreeKind::generation ? "generation" : "reproduction");
  d.rows.push_back({"all alpha", {}, ValueDoc{std::to_string(r.degree_all_alpha), std::nullopt}, std::nullopt});
  d.rows.push_back(
      {"alpha=" + r.special_alpha.str(), {}, ValueDoc{std::to_string(r.degree_special), std::nullopt}, std::nullopt});
  return d;
}

AnalysisReportDocument report_document(const GibbsReport& r) {
  auto d = base_document(r.n, "gibbs");
  d.parameters["k"] = std::to_string(r.k);
  d.rows.push_back({"k=" + std::to_string(r.k), interval_docs(r.interval), std::nullopt,
                    r.within_negative_half_line ? "within alpha<0" : "leaves alpha<0"});
  return d;
}

AnalysisReportDocument report_document(const BellReport& r, int n) {
  auto d = base_document(n, "bell");
  d.rows.push_back({"positivity", interval_docs(r.positivity), std::nullopt, std::nullopt});
  d.rows.push_back({"monotone_rise", interval_docs(r.monotone_rise), std::nullopt, std::nullopt});
  d.rows.push_back({"bell", interval_docs(r.bell), std::nullopt, std::nullopt});
  return d;
}

AnalysisReportDocument report_document(const ShapeReport& r, int n) {
  auto d = base_document(n, "shape");
  d.parameters["square_factor"] = r.has_square_factor ? "true" : "false";
  d.rows.push_back({"monotone+convex", interval_docs(r.alpha), std::nullopt, r.verdict});
  return d;
}

void to_json(json& j, const AnalysisReportDocument& d) {
  json rows = json::array();
  for (const auto& row : d.rows) {
    json jr = {{"label", row.label}, {"intervals", json::array()}};
    for (const auto& iv : row.intervals) {
      jr["intervals"].push_back({{"lo", endpoint_json(iv.lo)},
                                 {"hi", endpoint_json(iv.hi)},
                                 {"lo_open", iv.lo_open},
                                 {"hi_open", iv.hi_open}});
    }
    if (row.value) {
      jr["value"] = {{"exact", row.value->exact}};
      if (row.value->decimal) jr["value"]["decimal"] = *row.value->decimal;
    }
    if (row.note) jr["note"] = *row.note;
    rows.push_back(std::move(jr));
  }
  j = {{"tool", {{"name", d.tool}, {"version", d.version}}},
       {"scheme", {{"n", d.n}, {"points", d.points}, {"arity", d.arity}}},
       {"analysis", d.analysis},
       {"parameters", d.parameters},
       {"rows", std::move(rows)}};
}

void from_json(const json& j, AnalysisReportDocument& d) {
  d.tool = j.at("tool").at("name").get<std::string>();
  d.version = j.at("tool").at("version").get<std::string>();
  d.n = j.at("scheme").at("n").get<int>();
  d.points = j.at("scheme").at("points").get<int>();
  d.arity = j.at("scheme").at("arity").get<int>();
  d.analysis = j.at("analysis").get<std::string>();
  d.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  d.rows.clear();
  for (const auto& jr : j.at("rows")) {
    RowDoc row;
    row.label = jr.at("label").get<std::string>();
    for (const auto& ji : jr.at("intervals")) {
      row.intervals.push_back({endpoint_from_json(ji.at("lo")), endpoint_from_json(ji.at("hi")),
                               ji.at("lo_open").get<bool>(), ji.at("hi_open").get<bool>()});
    }
    if (jr.contains("value")) {
      const json& v = jr.at("value");
      row.value = ValueDoc{v.at("exact").get<std::string>(), std::nullopt};
      if (v.contains("decimal")) row.value->decimal = v.at("decimal").get<std::string>();
    }
    if (jr.contains("note")) row.note = jr.at("note").get<std::string>();
    d.rows.push_back(std::move(row));
  }
}

std::string render_json(const AnalysisReportDocument& d) { return json(d).dump(2) + "\n"; }

std::string render_text(const AnalysisReportDocument& d) {
  std::string out = scheme_line(d) + "\n";
  std::size_t width = 0;
  for (const auto& row : d.rows) width = std::max(width, row.label.size());
  for (const auto& row : d.rows) {
    std::string line = row.label + std::string(width - row.label.size() + 2, ' ');
    std::vector<std::string> parts;
    if (!row.intervals.empty()) {
      std::string ivs;
      for (const auto& iv : row.intervals) ivs += (ivs.empty() ? "" : " U ") + interval_text(iv);
      parts.push_back(ivs);
    }
    if (row.value) {
      std::string v = row.value->exact;
      if (row.value->decimal && *row.value->decimal != v) v += " = " + *row.value->decimal;
      parts.push_back(v);
    }
    if (row.note) parts.push_back(row.intervals.empty() && !row.value ? *row.note : "[" + *row.note + "]");
    if (parts.empty()) parts.push_back("empty");
    for (std::size_t i = 0; i < parts.size(); ++i) line += (i ? "  " : "") + parts[i];
    out += line + "\n";
  }
  return out;
}

}  // namespace combsub
