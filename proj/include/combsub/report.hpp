#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "combsub/analysis.hpp"

namespace combsub {

inline constexpr const char* tool_name = "combsub";
inline constexpr const char* tool_version = "1.0.0";

struct EnclosureDoc {
  /// Squarefree polynomial, ascending coefficients as p/q strings.
  std::vector<std::string> poly;
  std::string lo;
  std::string hi;

  friend bool operator==(const EnclosureDoc&, const EnclosureDoc&) = default;
};

struct EndpointDoc {
  std::string kind = "finite";  // neg_inf | finite | pos_inf
  std::string decimal;
  std::optional<std::string> exact;
  std::optional<EnclosureDoc> enclosure;

  friend bool operator==(const EndpointDoc&, const EndpointDoc&) = default;
};

struct IntervalDoc {
  EndpointDoc lo;
  EndpointDoc hi;
  bool lo_open = true;
  bool hi_open = true;

  friend bool operator==(const IntervalDoc&, const IntervalDoc&) = default;
};

struct ValueDoc {
  std::string exact;
  std::optional<std::string> decimal;

  friend bool operator==(const ValueDoc&, const ValueDoc&) = default;
};

struct RowDoc {
  std::string label;
  std::vector<IntervalDoc> intervals;
  std::optional<ValueDoc> value;
  std::optional<std::string> note;

  friend bool operator==(const RowDoc&, const RowDoc&) = default;
};

struct AnalysisReportDocument {
  std::string tool = tool_name;
  std::string version = tool_version;
  int n = 1;
  int points = 4;
  int arity = 2;
  std::string analysis;
  std::map<std::string, std::string> parameters;
  std::vector<RowDoc> rows;

  friend bool operator==(const AnalysisReportDocument&, const AnalysisReportDocument&) = default;
};

EndpointDoc endpoint_doc(const Endpoint& e);
std::vector<IntervalDoc> interval_docs(const IntervalSet& s);
/// Rebuilds the exact endpoint; throws std::invalid_argument on malformed data.
Endpoint endpoint_from_doc(const EndpointDoc& d);

AnalysisReportDocument mask_document(const SchemeSpec& spec);
AnalysisReportDocument report_document(const ContinuityReport& r);
/// Only the alpha = -1 branch of the continuity test.
AnalysisReportDocument minus_one_document(const ContinuityReport& r);
AnalysisReportDocument report_document(const DegreeReport& r, int n);
AnalysisReportDocument report_document(const GibbsReport& r);
AnalysisReportDocument report_document(const BellReport& r, int n);
AnalysisReportDocument report_document(const ShapeReport& r, int n);

void to_json(nlohmann::json& j, const AnalysisReportDocument& d);
void from_json(const nlohmann::json& j, AnalysisReportDocument& d);

std::string render_json(const AnalysisReportDocument& d);
std::string render_text(const AnalysisReportDocument& d);

}  // namespace combsub
