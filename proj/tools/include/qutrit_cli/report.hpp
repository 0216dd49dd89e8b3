#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace qutrit::cli {

using Json = nlohmann::json;

/// One verification line: what was checked, on how many items, worst residual.
struct Check {
  std::string name;
  bool passed = false;
  long long count = 0;
  double worst = 0.0;
  std::string detail;
};

/// Output of every command. Serializes to
/// {"command", "seed", "parameters", "results", "passed"}.
struct ReportDocument {
  std::string command;
  std::uint64_t seed = 0;
  Json parameters = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;
  /// Human-readable body printed before the check lines.
  std::vector<std::string> text;
  /// Optional tabular export for --csv; first row is the header.
  std::vector<std::vector<std::string>> table;

  Check& add_check(std::string name, bool passed, long long count = 0, double worst = 0.0,
                   std::string detail = {});
  bool passed() const;

  Json to_json() const;
  std::string to_text() const;
  std::string to_csv() const;
};

/// Deterministic JSON text: sorted keys, doubles with 17 significant digits,
/// non-finite doubles as null. Ends with a newline.
std::string serialize(const Json& value, int indent = 2);

/// "%.17g".
std::string format_double(double v);

}  // namespace qutrit::cli
