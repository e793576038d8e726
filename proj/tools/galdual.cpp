#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "galdual/kernels.hpp"
#include "galdual/scenario.hpp"

namespace {

using namespace galdual;
namespace fs = std::filesystem;

enum Exit { kPass = 0, kFail = 1, kInput = 2, kIo = 3 };

struct CheckArgs {
  std::vector<std::string> files;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  std::string out_dir = ".";
  std::string report;
  std::string params;
  bool quiet = false;
};

struct Outcome {
  int code = kPass;
  std::string text;
};

Outcome run_one(const std::string& command, const std::string& file, const CheckArgs& a, bool single) {
  Outcome o;
  std::ostringstream os;
  try {
    Scenario s = file.empty() ? default_scenario(command) : load_scenario(file);
    if (s.command != command)
      throw InputError(file + " is a '" + s.command + "' scenario, not '" + command + "'");
    if (!a.params.empty()) {
      nlohmann::json patch;
      try {
        patch = nlohmann::json::parse(a.params);
      } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("--params: ") + e.what());
      }
      if (!patch.is_object()) throw InputError("--params must be a JSON object");
      s.params.merge_patch(patch);
    }
    RunContext ctx;
    ctx.out_dir = a.out_dir;
    ctx.input_dir = file.empty() ? "." : fs::path(file).parent_path().string();
    if (ctx.input_dir.empty()) ctx.input_dir = ".";
    ctx.seed = a.seed;
    const Report rep = run_scenario(s, ctx);
    std::string path = single && !a.report.empty() ? a.report
                       : !s.report_path.empty() ? (fs::path(a.out_dir) / s.report_path).string()
                                                : (fs::path(a.out_dir) / (s.name + ".report.json")).string();
    rep.write(path);
    for (const auto& c : rep.checks())
      if (!a.quiet || !c.pass)
        os << (c.pass ? "PASS " : "FAIL ") << s.name << ": " << c.name << "  measured=" << c.measured
           << " tolerance=" << c.tolerance << "\n";
    os << s.name << ": " << (rep.all_pass() ? "pass" : "FAIL") << " (report " << path << ")\n";
    o.code = rep.all_pass() ? kPass : kFail;
  } catch (const IoError& e) {
    os << "I/O error: " << e.what() << "\n";
    o.code = kIo;
  } catch (const InputError& e) {
    os << "input error: " << e.what() << "\n";
    o.code = kInput;
  } catch (const std::exception& e) {
    os << "input error: " << e.what() << "\n";
    o.code = kInput;
  }
  o.text = os.str();
  return o;
}

int run_checks(const std::string& command, const CheckArgs& a) {
  std::vector<std::string> files = a.files;
  if (files.empty()) files.push_back("");
  if (!a.report.empty() && files.size() > 1) {
    std::cerr << "input error: --report needs a single scenario\n";
    return kInput;
  }
  std::error_code ec;
  fs::create_directories(a.out_dir, ec);
  if (!fs::is_directory(a.out_dir, ec)) {
    std::cerr << "I/O error: cannot create output directory " << a.out_dir << "\n";
    return kIo;
  }
  std::vector<Outcome> out(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) out[i] = run_one(command, files[i], a, files.size() == 1);
  };
  const int jobs = std::clamp(a.jobs, 1, int(files.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  int code = kPass;
  for (const auto& o : out) {
    std::cout << o.text;
    code = std::max(code, o.code);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galilei and dual Galilei group verification"};
  app.require_subcommand(1);
  std::string exec = "parallel";
  app.add_option("--exec", exec, "Kernel build to use: serial or parallel")
      ->check(CLI::IsMember({"serial", "parallel"}));

  struct Cmd {
    const char* name;
    const char* help;
  };
  const Cmd cmds[] = {
      {"verify-groups", "Group axioms, affine homomorphism and D/C pairing on random elements"},
      {"contract", "Contraction of the 1+1 Poincare family; CSV alpha,distance and JSON summary"},
      {"verify-algebra", "Commutator tables from matrix and differential realizations"},
      {"rep-transform", "Apply a group element to a stored or generated wavefunction"},
      {"maxwell-covariance", "Electric-limit Maxwell residuals under random dual frame changes"},
      {"solve-electrostatics", "Poisson solve of an electrostatic charge distribution"},
  };
  std::vector<CheckArgs> args(std::size(cmds));
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(cmds); ++i) {
    CLI::App* sub = app.add_subcommand(cmds[i].name, cmds[i].help);
    CheckArgs& a = args[i];
    sub->add_option("scenarios", a.files, "Scenario files; none runs the built-in defaults");
    sub->add_option("--seed", a.seed, "Overrides the scenario seed");
    sub->add_option("--jobs,-j", a.jobs, "Scenarios run concurrently")->check(CLI::PositiveNumber);
    sub->add_option("--out-dir,-o", a.out_dir, "Directory for reports, CSV and containers");
    sub->add_option("--report", a.report, "Report path for a single scenario");
    sub->add_option("--params", a.params, "JSON object merged into the scenario params");
    sub->add_flag("--quiet,-q", a.quiet, "Print only failing checks");
    subs.push_back(sub);
  }

  std::string dir = default_scenario_dir();
  std::string module;
  CLI::App* list = app.add_subcommand("list", "Enumerate bundled scenarios");
  list->add_option("--dir", dir, "Scenario directory");
  list->add_option("--module", module, "Filter by module (groups, contraction, algebra, reps, em) or command");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInput;
  }
  kernels::set_default_exec(exec == "serial" ? kernels::Exec::serial : kernels::Exec::parallel);

  if (list->parsed()) {
    try {
      const auto rows = list_scenarios(dir, module);
      for (const auto& r : rows)
        std::printf("%-34s %-22s %s\n", r.file.c_str(), r.command.c_str(), r.description.c_str());
      return kPass;
    } catch (const IoError& e) {
      std::cerr << "I/O error: " << e.what() << "\n";
      return kIo;
    } catch (const std::exception& e) {
      std::cerr << "input error: " << e.what() << "\n";
      return kInput;
    }
  }
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i]->parsed()) return run_checks(cmds[i].name, args[i]);
  return kInput;
}
