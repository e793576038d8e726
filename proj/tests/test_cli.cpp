#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include <doctest.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(GALDUAL_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), p)) out += buf.data();
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("galdual_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("cli: verify-groups with a seed passes and writes a report") {
  const fs::path dir = scratch("groups");
  const Run r = cli("verify-groups --seed 7 --quiet -o " + dir.string());
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(std::ifstream(dir / "verify-groups.report.json"));
  CHECK(j.at("pass") == true);
  CHECK(j.at("checks").size() >= 8);
}

TEST_CASE("cli: malformed scenario gives exit 2 and no report") {
  const fs::path dir = scratch("bad");
  std::ofstream(dir / "bad.json") << "{\"name\": ";
  const Run r = cli("verify-groups " + (dir / "bad.json").string() + " -o " + (dir / "out").string());
  CHECK(r.code == 2);
  CHECK((!fs::exists(dir / "out") || fs::is_empty(dir / "out")));

  std::ofstream(dir / "wrong.json") << R"({"schema": 1, "name": "w", "command": "contract"})";
  CHECK(cli("verify-groups " + (dir / "wrong.json").string() + " -o " + (dir / "out").string()).code == 2);
}

TEST_CASE("cli: missing scenario file gives exit 3") {
  const fs::path dir = scratch("missing");
  CHECK(cli("contract " + (dir / "nope.json").string() + " -o " + dir.string()).code == 3);
}

TEST_CASE("cli: failing tolerance gives exit 1") {
  const fs::path dir = scratch("fail");
  std::ofstream(dir / "tight.json") << R"({"schema": 1, "name": "tight", "command": "contract",
    "params": {"mode": "temporal", "order_tolerance": 0.0}})";
  const Run r = cli("contract " + (dir / "tight.json").string() + " --quiet -o " + dir.string());
  CHECK(r.code == 1);
  CHECK(fs::exists(dir / "tight.report.json"));
}

TEST_CASE("cli: list") {
  const Run r = cli("list");
  CHECK(r.code == 0);
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines >= 8);
  const fs::path dir = scratch("empty");
  const Run e = cli("list --dir " + dir.string());
  CHECK(e.code == 0);
}

TEST_CASE("cli: seeds make runs reproducible") {
  const fs::path dir = scratch("seed");
  auto checks = [&](const std::string& seed, const std::string& sub) {
    CHECK(cli("verify-algebra --seed " + seed + " --quiet -o " + (dir / sub).string()).code == 0);
    return nlohmann::json::parse(std::ifstream(dir / sub / "verify-algebra.report.json")).at("checks");
  };
  CHECK(checks("11", "a") == checks("11", "b"));
}
