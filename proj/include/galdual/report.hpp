#pragma once

#include <json.hpp>

#include "galdual/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace galdual {

/// One check: pass is measured <= tolerance (a NaN measurement fails).
/// `value` optionally carries the quantity the measurement was derived from,
/// e.g. a fitted order when `measured` is its shortfall.
struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::optional<double> value;
};

class Report {
 public:
  static constexpr int kSchema = 1;

  explicit Report(nlohmann::json scenario = nlohmann::json::object());

  const Check& add(std::string name, double measured, double tolerance,
                   std::optional<double> value = std::nullopt);
  /// Records the shortfall max(0, floor - value) against tolerance 0.
  const Check& add_at_least(std::string name, double value, double floor);

  bool all_pass() const;
  const std::vector<Check>& checks() const { return checks_; }
  nlohmann::json& results() { return results_; }
  const nlohmann::json& results() const { return results_; }

  /// Full report; the environment block is omitted when `with_environment` is false.
  nlohmann::json to_json(bool with_environment = true) const;
  void write(const std::string& path) const;

 private:
  nlohmann::json scenario_;
  std::vector<Check> checks_;
  nlohmann::json results_ = nlohmann::json::object();
};

/// Library version, floating-point precision, compiler, OpenMP threads.
nlohmann::json environment_block();

/// Writes to path.tmp then renames over path.
void write_text_atomic(const std::string& path, const std::string& text);

std::string library_version();

}  // namespace galdual
