#pragma once

#include "hsq/cone_analysis.hpp"
#include "hsq/moment_map.hpp"
#include "hsq/toric_config.hpp"

#include <map>
#include "json.hpp"
#include <stdexcept>
#include <string>

namespace hsq {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::json;

/// Malformed input: JSON syntax, wrong field types, unparsable rationals.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConfigDocument {
  ToricConfig config;
  AnalysisOptions options;
};

/// Throws InputError for syntax and type problems, ConfigError for violated invariants.
ConfigDocument parse_config(const std::string& text);
ConfigDocument load_config(const std::string& path);
Json config_to_json(const ConfigDocument& doc);

Json to_json(const Rational& r);
Json to_json(const ComplexRational& c);
Json to_json(const ConePoint& p);
Rational rational_from_json(const Json& j, const std::string& field);
ConePoint cone_point_from_json(const Json& j);

/// "a_1;...;a_n,b_1;...;b_n" where each b entry is "re" or "re:im".
ConePoint parse_point(const std::string& text, std::size_t n);

struct VerdictEntry {
  std::string status;
  std::string method;
  bool exact = true;
  Json witness;     // null when there is nothing to show
  Json resolution;  // parameters limiting a non-exact verdict; null when exact
};

struct ReportDocument {
  std::string tool_version = kToolVersion;
  Json input;
  std::map<std::string, VerdictEntry> verdicts;
  Json strata = Json::array();

  bool has_unknown() const;
};

/// Runs every decision procedure; failures inside one procedure become an "error" entry.
ReportDocument analyze(const ConfigDocument& doc);

Json to_json(const ReportDocument& r);
ReportDocument report_from_json(const Json& j);

enum class ReportFormat { Json, Text };

std::string emit_report(const ReportDocument& r, ReportFormat format);

/// Fiber over a point of K: incidence, orbits with exact moduli and the round-trip check.
Json fiber_report(const ToricConfig& cfg, const ConePoint& p);

std::string to_string(const QuadraticSurd& s);

}  // namespace hsq
