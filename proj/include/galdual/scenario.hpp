#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galdual/report.hpp"

namespace galdual {

/// Scenario file:
///   {"schema": 1, "name": str, "description": str, "command": str, "seed": uint,
///    "params": {...}, "output": {"report": path, "csv": path}}
/// Only name and command are required. Paths are relative to the output directory.
struct Scenario {
  std::string name;
  std::string description;
  std::string command;
  std::uint64_t seed = 0;
  nlohmann::json params = nlohmann::json::object();
  std::string report_path;
  std::string csv_path;
  std::string origin;  // file it came from, empty for built-in defaults
};

/// Check subcommands, in listing order.
const std::vector<std::string>& scenario_commands();
/// Module a command belongs to: groups, contraction, algebra, reps or em.
std::string module_of(const std::string& command);

/// Throws InputError on schema violations.
Scenario parse_scenario(const nlohmann::json& j, const std::string& origin = "");
/// Throws IoError if the file cannot be read, InputError if it is malformed.
Scenario load_scenario(const std::string& path);
/// Parameters left empty, so every command runs with its defaults.
Scenario default_scenario(const std::string& command);

struct ScenarioInfo {
  std::string file;
  std::string name;
  std::string command;
  std::string module;
  std::string description;
};

/// Bundled scenarios in `dir` sorted by file name; `module` filters when non-empty.
/// A missing or empty directory gives an empty list.
std::vector<ScenarioInfo> list_scenarios(const std::string& dir, const std::string& module = "");

std::string default_scenario_dir();

struct RunContext {
  std::string out_dir = ".";
  /// Directory relative input paths are resolved against.
  std::string input_dir = ".";
  std::optional<std::uint64_t> seed;
};

/// Runs the scenario and writes its CSV and container outputs. The report is
/// returned for the caller to write.
Report run_scenario(const Scenario& s, const RunContext& ctx = {});

/// Writes rows with a header line, 17 significant digits, '.' decimal.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace galdual
