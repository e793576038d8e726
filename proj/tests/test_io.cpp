#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "galdual/container.hpp"
#include "galdual/random.hpp"
#include "galdual/report.hpp"
#include "galdual/scenario.hpp"
#include "test_util.hpp"

using namespace galdual;
namespace fs = std::filesystem;

namespace {
fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("galdual_unit_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}
}  // namespace

TEST_CASE("SplitMix64 counter stream") {
  // Reference SplitMix64 outputs for seed 0.
  CounterRng r(0);
  CHECK(r.next() == 0xE220A8397B1DCDAFull);
  CHECK(r.next() == 0x6E789E6AA1B965F4ull);
  CHECK(r.next() == 0x06C45D188009454Full);
  CHECK(mix64(0) == 0);

  CounterRng a(42, 3), b(42, 3), c(42, 4);
  for (int i = 0; i < 10; ++i) {
    const std::uint64_t x = a.next();
    CHECK(x == b.at(i));
    CHECK(x != c.at(i));
  }
  CHECK(a.counter() == 10);

  CounterRng u(7);
  double lo = 1, hi = 0, sum = 0;
  for (int i = 0; i < 20000; ++i) {
    const double x = u.uniform();
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    sum += x;
  }
  CHECK(lo >= 0);
  CHECK(hi < 1);
  CHECK(sum / 20000 == doctest::Approx(0.5).epsilon(0.02));
  for (int i = 0; i < 100; ++i) {
    CHECK(u.unit_vector().norm() == doctest::Approx(1.0));
    CHECK(u.in_ball(2.0).norm() <= 2.0);
    CHECK(u.rotation().orthonormality_defect() < 1e-13);
  }
  ElementRanges r2;
  r2.v = 0.3;
  const GroupElement g = random_element(u, Flavor::dual, 2.0, r2);
  CHECK(g.v.norm() <= 0.3);
  CHECK(g.c == 2.0);
}

TEST_CASE("container round trip and corruption") {
  const fs::path dir = scratch("container");
  const Grid3 g = Grid3::centered({4, 5, 6}, Vec3(2, 3, 4));
  WaveFunction w = make_position_state(RepKind::galilei, 1.3, g, gaussian_samples(g, Vec3::Zero(), 0.7, Vec3(0.2, 0, 0)), 2.0, 0.25);
  const std::string path = (dir / "psi.gdg").string();
  write_wavefunction(path, w);
  const WaveFunction r = read_wavefunction(path);
  CHECK(r.grid == g);
  CHECK(r.samples == w.samples);
  CHECK(r.invariant == 1.3);
  CHECK(r.c == 2.0);
  CHECK(r.t == 0.25);
  CHECK(r.rep == RepKind::galilei);
  CHECK(r.basis == Basis::position);
  CHECK(fs::file_size(path) == 8 + 4 * 3 + 8 * 3 + 4 * 3 + 8 * 6 + 4 + g.size() * 16);

  const RealField a = sample_real(g, [](const Vec3& x) { return x[0]; });
  const Container c = pack_real_fields(g, {&a, &a});
  write_container(path, c);
  const Container back = read_container(path);
  CHECK(back.header.field_count == 2);
  CHECK(back.fields[1][7] == cplx(a[7], 0));

  {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    os << "NOTGRID!";
  }
  CHECK_THROWS_AS(read_container(path), InputError);
  write_container(path, c);
  fs::resize_file(path, fs::file_size(path) - 9);
  CHECK_THROWS_AS(read_container(path), InputError);
  CHECK_THROWS_AS(read_container((dir / "missing.gdg").string()), IoError);
  CHECK_THROWS_AS(read_wavefunction(path), InputError);
}

TEST_CASE("report records") {
  Report r(nlohmann::json{{"name", "x"}});
  CHECK(r.add("a", 1e-12, 1e-10).pass);
  CHECK_FALSE(r.add("b", 2.0, 1.0).pass);
  CHECK_FALSE(r.add("nan", std::nan(""), 1.0).pass);
  const Check& at = r.add_at_least("order", 1.95, 1.9);
  CHECK(at.pass);
  CHECK(at.measured == 0);
  CHECK(*at.value == 1.95);
  const Check& low = r.add_at_least("low", 1.5, 1.9);
  CHECK_FALSE(low.pass);
  CHECK(low.measured == doctest::Approx(0.4));
  CHECK_FALSE(r.all_pass());

  const nlohmann::json j = r.to_json();
  CHECK(j.at("schema") == 1);
  CHECK(j.at("checks").size() == 5);
  CHECK(j.at("environment").at("precision") == "binary64");
  CHECK(j.at("environment").at("version") == library_version());
  for (const auto& c : j.at("checks"))
    if (c.at("measured").is_number()) CHECK(c.at("pass") == (c.at("measured").get<double>() <= c.at("tolerance").get<double>()));
  CHECK_FALSE(r.to_json(false).contains("environment"));

  const fs::path dir = scratch("report");
  r.write((dir / "r.json").string());
  CHECK(nlohmann::json::parse(std::ifstream(dir / "r.json")).at("pass") == false);
  CHECK_FALSE(fs::exists(dir / "r.json.tmp"));
}

TEST_CASE("scenario parsing") {
  const Scenario s = parse_scenario({{"schema", 1}, {"name", "n1"}, {"command", "verify-groups"}, {"seed", 5}, {"params", {{"triples", 10}}}});
  CHECK(s.seed == 5);
  CHECK(s.params.at("triples") == 10);
  CHECK_THROWS_AS(parse_scenario({{"name", "n1"}}), InputError);
  CHECK_THROWS_AS(parse_scenario({{"name", "n1"}, {"command", "nope"}}), InputError);
  CHECK_THROWS_AS(parse_scenario({{"name", "n1"}, {"command", "contract"}, {"seed", -1}}), InputError);
  CHECK_THROWS_AS(parse_scenario({{"schema", 9}, {"name", "n1"}, {"command", "contract"}}), InputError);
  CHECK_THROWS_AS(parse_scenario(nlohmann::json::array()), InputError);
  CHECK(module_of("maxwell-covariance") == "em");
  CHECK(module_of("rep-transform") == "reps");

  const fs::path dir = scratch("scenario");
  {
    std::ofstream os(dir / "bad.json");
    os << "{ not json";
  }
  CHECK_THROWS_AS(load_scenario((dir / "bad.json").string()), InputError);
  CHECK_THROWS_AS(load_scenario((dir / "none.json").string()), IoError);
  CHECK(list_scenarios((dir / "empty").string()).empty());

  const auto bundled = list_scenarios(default_scenario_dir());
  CHECK(bundled.size() >= 8);
  for (const auto& b : bundled) {
    CHECK_FALSE(b.description.empty());
    CHECK_NOTHROW(load_scenario((fs::path(default_scenario_dir()) / b.file).string()));
  }
  CHECK(list_scenarios(default_scenario_dir(), "em").size() >= 3);
}

TEST_CASE("scenario runs are deterministic in the seed") {
  Scenario s = default_scenario("verify-groups");
  s.params = {{"triples", 50}};
  const fs::path dir = scratch("runs");
  RunContext ctx;
  ctx.out_dir = dir.string();
  ctx.seed = 7;
  const Report a = run_scenario(s, ctx), b = run_scenario(s, ctx);
  CHECK(a.all_pass());
  CHECK(a.to_json(false) == b.to_json(false));
  ctx.seed = 8;
  CHECK(run_scenario(s, ctx).to_json(false) != a.to_json(false));
}

TEST_CASE("csv output") {
  const fs::path dir = scratch("csv");
  write_csv((dir / "t.csv").string(), {"alpha", "distance"}, {{10, 0.1}, {100, 1.0 / 3}});
  std::ifstream is(dir / "t.csv", std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(is)), {});
  CHECK(text == "alpha,distance\r\n10,0.10000000000000001\r\n100,0.33333333333333331\r\n");
}
