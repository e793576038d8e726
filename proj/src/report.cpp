#include "galdual/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "galdual/kernels.hpp"

namespace galdual {

std::string library_version() { return "1.0.0"; }

Report::Report(nlohmann::json scenario) : scenario_(std::move(scenario)) {}

const Check& Report::add(std::string name, double measured, double tolerance,
                         std::optional<double> value) {
  Check c{std::move(name), measured, tolerance, std::isfinite(measured) && measured <= tolerance, value};
  checks_.push_back(std::move(c));
  return checks_.back();
}

const Check& Report::add_at_least(std::string name, double value, double floor) {
  const double shortfall = std::isfinite(value) ? std::max(0.0, floor - value)
                                                : std::numeric_limits<double>::quiet_NaN();
  return add(std::move(name), shortfall, 0.0, value);
}

bool Report::all_pass() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

namespace {

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

}  // namespace

nlohmann::json Report::to_json(bool with_environment) const {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["scenario"] = scenario_;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json r{{"name", c.name},
                     {"measured", number(c.measured)},
                     {"tolerance", number(c.tolerance)},
                     {"pass", c.pass}};
    if (c.value) r["value"] = number(*c.value);
    checks.push_back(std::move(r));
  }
  j["checks"] = std::move(checks);
  j["pass"] = all_pass();
  j["results"] = results_;
  if (with_environment) j["environment"] = environment_block();
  return j;
}

void Report::write(const std::string& path) const { write_text_atomic(path, to_json().dump(2) + "\n"); }

nlohmann::json environment_block() {
  nlohmann::json e;
  e["version"] = library_version();
  e["precision"] = "binary64";
  e["epsilon"] = std::numeric_limits<double>::epsilon();
#if defined(__clang__)
  e["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
  e["compiler"] = std::string("gcc ") + __VERSION__;
#else
  e["compiler"] = "unknown";
#endif
  e["openmp_threads"] = kernels::max_threads();
  e["exec"] = kernels::default_exec() == kernels::Exec::serial ? "serial" : "parallel";
  return e;
}

void write_text_atomic(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path() && !std::filesystem::exists(p.parent_path()))
    throw IoError("directory does not exist: " + p.parent_path().string());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) throw IoError("cannot open " + tmp + " for writing");
    os << text;
    os.flush();
    if (!os) throw IoError("write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp + " to " + path + ": " + ec.message());
}

}  // namespace galdual
