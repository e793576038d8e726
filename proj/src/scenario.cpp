#include "galdual/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <locale>
#include <map>
#include <sstream>

#include "galdual/algebra.hpp"
#include "galdual/container.hpp"
#include "galdual/contraction.hpp"
#include "galdual/em.hpp"
#include "galdual/poisson.hpp"
#include "galdual/random.hpp"
#include "galdual/reps.hpp"

namespace galdual {

using nlohmann::json;
namespace fs = std::filesystem;

const std::vector<std::string>& scenario_commands() {
  static const std::vector<std::string> c{"verify-groups", "contract", "verify-algebra",
                                          "rep-transform", "maxwell-covariance",
                                          "solve-electrostatics"};
  return c;
}

std::string module_of(const std::string& command) {
  if (command == "verify-groups") return "groups";
  if (command == "contract") return "contraction";
  if (command == "verify-algebra") return "algebra";
  if (command == "rep-transform") return "reps";
  if (command == "maxwell-covariance" || command == "solve-electrostatics") return "em";
  throw InputError("unknown command '" + command + "'");
}

Scenario parse_scenario(const json& j, const std::string& origin) {
  const std::string where = origin.empty() ? "scenario" : origin;
  if (!j.is_object()) throw InputError(where + ": top level must be an object");
  if (j.contains("schema") && (!j["schema"].is_number_integer() || j["schema"].get<int>() != 1))
    throw InputError(where + ": unsupported schema");
  auto str = [&](const char* k, bool required) -> std::string {
    if (!j.contains(k)) {
      if (required) throw InputError(where + ": missing '" + k + "'");
      return "";
    }
    if (!j[k].is_string()) throw InputError(where + ": '" + k + "' must be a string");
    return j[k].get<std::string>();
  };
  Scenario s;
  s.origin = origin;
  s.name = str("name", true);
  s.description = str("description", false);
  s.command = str("command", true);
  module_of(s.command);
  if (s.name.empty() || s.name.find('/') != std::string::npos)
    throw InputError(where + ": name must be a non-empty file-name-safe string");
  if (j.contains("seed")) {
    const auto& sd = j["seed"];
    if (!sd.is_number_integer() || (!sd.is_number_unsigned() && sd.get<std::int64_t>() < 0)) throw InputError(where + ": 'seed' must be a non-negative integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw InputError(where + ": 'params' must be an object");
    s.params = j["params"];
  }
  if (j.contains("output")) {
    const json& o = j["output"];
    if (!o.is_object()) throw InputError(where + ": 'output' must be an object");
    for (const auto& [k, v] : o.items()) {
      if (!v.is_string()) throw InputError(where + ": output '" + k + "' must be a string");
      if (k == "report")
        s.report_path = v.get<std::string>();
      else if (k == "csv")
        s.csv_path = v.get<std::string>();
      else
        throw InputError(where + ": unknown output '" + k + "'");
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path);
  json j;
  try {
    j = json::parse(is);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return parse_scenario(j, path);
}

Scenario default_scenario(const std::string& command) {
  Scenario s;
  s.command = command;
  s.name = command;
  module_of(command);
  return s;
}

std::string default_scenario_dir() {
  if (const char* env = std::getenv("GALDUAL_SCENARIOS")) return env;
#ifdef GALDUAL_SCENARIO_DIR
  return GALDUAL_SCENARIO_DIR;
#else
  return "scenarios";
#endif
}

std::vector<ScenarioInfo> list_scenarios(const std::string& dir, const std::string& module) {
  std::vector<ScenarioInfo> out;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return out;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir, ec))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    const Scenario s = load_scenario(f.string());
    ScenarioInfo info{f.filename().string(), s.name, s.command, module_of(s.command), s.description};
    if (module.empty() || info.module == module || info.command == module) out.push_back(std::move(info));
  }
  return out;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17);
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\r\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << "\r\n";
  }
  write_text_atomic(path, os.str());
}

// ---------------------------------------------------------------------------

namespace {

template <class T>
T param(const json& p, const char* key, T def) {
  if (!p.contains(key)) return def;
  try {
    return p.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("parameter '") + key + "': " + e.what());
  }
}

Vec3 vec_param(const json& p, const char* key, const Vec3& def) {
  if (!p.contains(key)) return def;
  const auto v = param<std::vector<double>>(p, key, {});
  if (v.size() != 3) throw InputError(std::string("parameter '") + key + "' needs three numbers");
  return Vec3(v[0], v[1], v[2]);
}

json matrix_json(const MatX& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

json echo(const Scenario& s, std::uint64_t seed) {
  return json{{"name", s.name}, {"command", s.command}, {"description", s.description},
              {"seed", seed},   {"params", s.params}};
}

std::string resolve(const std::string& dir, const std::string& path) {
  if (path.empty() || fs::path(path).is_absolute()) return path;
  return (fs::path(dir) / path).string();
}

std::string csv_path(const Scenario& s, const RunContext& ctx, const std::string& suffix = "") {
  std::string p = s.csv_path.empty() ? s.name + ".csv" : s.csv_path;
  if (!suffix.empty()) {
    const fs::path fp(p);
    p = (fp.parent_path() / (fp.stem().string() + "-" + suffix + fp.extension().string())).string();
  }
  return resolve(ctx.out_dir, p);
}

Grid3 grid_param(const json& p, int n_def, double extent_def) {
  const json g = p.contains("grid") ? p["grid"] : json::object();
  const int n = param(g, "n", n_def);
  const double extent = param(g, "extent", extent_def);
  if (n < 4 || n > 1024 || !(extent > 0)) throw InputError("grid needs 4 <= n <= 1024 and extent > 0");
  return Grid3::centered(n, extent);
}

std::vector<std::string> string_list(const json& p, const char* key, std::vector<std::string> def) {
  if (!p.contains(key)) return def;
  if (p[key].is_string()) return {p[key].get<std::string>()};
  return param<std::vector<std::string>>(p, key, def);
}

// ---------------------------------------------------------------------------

Report run_verify_groups(const Scenario& s, std::uint64_t seed) {
  Report rep(echo(s, seed));
  const json& p = s.params;
  const int trials = param(p, "trials", 1000);
  const double c = param(p, "c", 1.0);
  const double tol = param(p, "tolerance", 1e-10);
  ElementRanges r;
  r.b = param(p, "b_range", 1.0);
  r.a = param(p, "a_range", 1.0);
  r.v = param(p, "v_range", 0.5);
  const auto flavors = string_list(p, "flavors", {"galilei", "dual"});
  std::uint64_t stream = 0;
  for (const auto& name : flavors) {
    const Flavor f = flavor_from_string(name);
    CounterRng rng(seed, ++stream);
    double assoc = 0, ident = 0, inv = 0, hom = 0, pair = 0;
    const GroupElement e = GroupElement::identity(f, c);
    for (int t = 0; t < trials; ++t) {
      const GroupElement g1 = random_element(rng, f, c, r);
      const GroupElement g2 = random_element(rng, f, c, r);
      const GroupElement g3 = random_element(rng, f, c, r);
      assoc = std::max(assoc, distance(compose(compose(g3, g2), g1), compose(g3, compose(g2, g1))));
      ident = std::max({ident, distance(compose(e, g1), g1), distance(compose(g1, e), g1)});
      inv = std::max({inv, distance(compose(g1, inverse(g1)), e), distance(compose(inverse(g1), g1), e)});
      hom = std::max(hom, (to_affine(compose(g2, g1)) - to_affine(g2) * to_affine(g1)).cwiseAbs().maxCoeff());
      Vec4 x, y;
      for (int k = 0; k < 4; ++k) {
        x[k] = rng.uniform(-1, 1);
        y[k] = rng.uniform(-1, 1);
      }
      pair = std::max(pair, pairing_invariance(g1, x, y));
    }
    rep.add(name + " associativity", assoc, tol);
    rep.add(name + " identity", ident, tol);
    rep.add(name + " inverse", inv, tol);
    rep.add(name + " affine homomorphism", hom, tol);
    rep.add(name + " D/C pairing invariance", pair, tol);
  }
  rep.results()["trials"] = trials;
  return rep;
}

Report run_contract(const Scenario& s, const RunContext& ctx, std::uint64_t seed) {
  Report rep(echo(s, seed));
  const json& p = s.params;
  const double beta = param(p, "beta", 0.6);
  const double a = param(p, "a", 0.7);
  const double b = param(p, "b", -0.4);
  const double c = param(p, "c", 1.0);
  const double target = param(p, "expected_order", 2.0);
  const double tol = param(p, "order_tolerance", 0.1);
  const auto alphas = param<std::vector<double>>(p, "alphas", default_alpha_schedule());
  const auto discard = param<std::size_t>(p, "discard", 2);
  const auto modes = string_list(p, "modes", {"temporal", "spatial"});
  json summaries = json::array();
  for (const auto& m : modes) {
    const ContractionMode mode = contraction_mode_from_string(m);
    const ConvergenceReport cr = convergence_report(mode, beta, a, b, alphas, c, discard);
    std::vector<std::vector<double>> rows;
    for (const auto& row : cr.rows) rows.push_back({row.alpha, row.distance});
    write_csv(csv_path(s, ctx, modes.size() > 1 ? m : ""), {"alpha", "distance"}, rows);
    const double order = cr.rate ? -*cr.rate : std::nan("");
    rep.add(m + " convergence order |order - " + std::to_string(target).substr(0, 3) + "|",
            std::abs(order - target), tol, order);
    json sum{{"mode", m}, {"limit_matrix", matrix_json(cr.limit)}};
    if (cr.rate)
      sum["rate"] = order;
    else
      sum["rate"] = nullptr;
    summaries.push_back(sum);
  }
  rep.results()["contractions"] = summaries;
  return rep;
}

Report run_verify_algebra(const Scenario& s, std::uint64_t seed) {
  Report rep(echo(s, seed));
  const json& p = s.params;
  const double c = param(p, "c", 1.0);
  const double tol = param(p, "tolerance", 1e-8);
  const double jtol = param(p, "jacobi_tolerance", 1e-10);
  const int samples = param(p, "random_jacobi_samples", 200);
  const auto flavors = string_list(p, "flavors", {"galilei", "dual", "extended"});
  CounterRng rng(seed, 7);
  json tables = json::object();
  for (const auto& name : flavors) {
    const AlgebraFlavor f = algebra_flavor_from_string(name);
    const auto table = hardcoded_table(f, c);
    const auto ext = extract_structure_constants(generators_from_realization(f, c), f, c);
    const int n = algebra_dim(f);
    rep.add(name + " structure constants vs closed form", ext.table.max_difference(table), tol);
    rep.add(name + " commutator fit residual", ext.fit_residual, tol);
    double jac = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          jac = std::max(jac, jacobi_residual(AlgebraVector::unit(f, i, c), AlgebraVector::unit(f, j, c),
                                              AlgebraVector::unit(f, k, c)));
    for (int t = 0; t < samples; ++t) {
      AlgebraVector x = AlgebraVector::unit(f, 0, c) * 0.0, y = x, z = x;
      for (int k = 0; k < n; ++k) {
        x.coeffs[k] = rng.uniform(-1, 1);
        y.coeffs[k] = rng.uniform(-1, 1);
        z.coeffs[k] = rng.uniform(-1, 1);
      }
      jac = std::max(jac, jacobi_residual(x, y, z));
    }
    rep.add(name + " Jacobi residual", jac, jtol);
    const int nvars = f == AlgebraFlavor::extended ? 5 : 4;
    rep.add(name + " differential realization", differential_realization_check(f, test_polynomials(nvars, 3), c),
            jtol);
    if (f == AlgebraFlavor::dual) {
      double central = 0;
      for (int j = 0; j < n; ++j) {
        if (!table.at(basis::b, j).empty()) central = std::max(central, 1.0);
        for (int k = 0; k < n; ++k) central = std::max(central, std::abs(ext.table.coefficient(basis::b, j, k)));
      }
      rep.add("dual time translation is central", central, tol);
    }
    json entries = json::array();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const auto& terms = table.at(i, j);
        if (terms.empty()) continue;
        json t = json::array();
        for (const auto& term : terms) t.push_back({{"basis", basis_name(term.k)}, {"coef", term.coef}});
        entries.push_back({{"left", basis_name(i)}, {"right", basis_name(j)}, {"terms", t}});
      }
    tables[name] = entries;
  }
  rep.results()["tables"] = tables;
  return rep;
}

WaveFunction state_from_params(const json& st) {
  const RepKind rep = rep_from_string(param<std::string>(st, "rep", "dual"));
  const Basis basis = basis_from_string(param<std::string>(st, "basis", "position"));
  const double inv = param(st, "invariant", 1.0);
  const double c = param(st, "c", 1.0);
  const int n = param(st, "n", 32);
  const double extent = param(st, "extent", 20.0);
  const double sigma = param(st, "sigma", 1.5);
  const Vec3 x0 = vec_param(st, "center", Vec3::Zero());
  const Vec3 k0 = vec_param(st, "k0", Vec3::Zero());
  const Grid3 G = Grid3::centered(n, extent);
  if (basis == Basis::position) return make_position_state(rep, inv, G, gaussian_samples(G, x0, sigma, k0), c);
  // Momentum-space Gaussian of width 1/(2 sigma) about k0.
  return make_momentum_state(rep, inv, G, gaussian_samples(G, k0, 1.0 / (2 * sigma), Vec3::Zero()), c);
}

Report run_rep_transform(const Scenario& s, const RunContext& ctx, std::uint64_t seed) {
  Report rep(echo(s, seed));
  const json& p = s.params;
  WaveFunction psi;
  const bool from_file = p.contains("input");
  if (from_file)
    psi = read_wavefunction(resolve(ctx.input_dir, param<std::string>(p, "input", "")));
  else
    psi = state_from_params(p.contains("state") ? p["state"] : json::object());
  GroupElement g;
  try {
    g = p.contains("element") ? p["element"].get<GroupElement>()
                              : GroupElement::make(psi.rep == RepKind::galilei ? Flavor::galilei : Flavor::dual,
                                                   0.3, Vec3(0.5, -0.2, 0.1), Vec3(0.2, 0.1, 0.0),
                                                   Rotation::about_axis(2, 0.4), psi.c);
  } catch (const json::exception& e) {
    throw InputError(std::string("element: ") + e.what());
  }
  ActionOptions opt;
  opt.interp_order = param(p, "interp_order", 4);
  const double tol = param(p, "norm_tolerance", 1e-3);
  const double n0 = psi.norm2();
  const WaveFunction out = apply_action(g, psi, opt);
  const double n1 = out.norm2();
  rep.add("norm change beyond leakage", std::max(0.0, std::abs(n1 - n0) / n0 - out.leakage), tol);
  rep.results()["norm_before"] = n0;
  rep.results()["norm_after"] = n1;
  rep.results()["leakage"] = out.leakage;
  rep.results()["element"] = g;
  if (!from_file && psi.basis == Basis::position) {
    const json st = p.contains("state") ? p["state"] : json::object();
    const double sigma = param(st, "sigma", 1.5);
    const Vec3 x0 = vec_param(st, "center", Vec3::Zero());
    const Vec3 k0 = vec_param(st, "k0", Vec3::Zero());
    const double inv = psi.invariant;
    PositionFn exact;
    if (psi.rep == RepKind::galilei) {
      exact = galilei_position_action(g, inv, free_gaussian_packet(inv, x0, sigma, k0));
    } else {
      const double norm = std::pow(2 * kPi * sigma * sigma, -0.75);
      PositionFn base = [=](const Vec3& x, double t) {
        return norm * std::exp(-(x - x0).squaredNorm() / (4 * sigma * sigma)) * std::polar(1.0, k0.dot(x) - inv * t);
      };
      exact = dual_position_action(g, inv, base);
    }
    double err = 0;
    const Grid3& G = out.grid;
    for (int i = 0; i < G.n[0]; ++i)
      for (int j = 0; j < G.n[1]; ++j)
        for (int k = 0; k < G.n[2]; ++k) {
          const std::size_t q = G.index(i, j, k);
          err = std::max(err, std::abs(out.full_sample(q) - exact(G.point(i, j, k), out.t)));
        }
    const double peak = std::pow(2 * kPi * sigma * sigma, -0.75);
    rep.add("max deviation from exact action (relative to peak)", err / peak,
            param(p, "exact_tolerance", 5e-2));
  }
  if (p.contains("output")) write_wavefunction(resolve(ctx.out_dir, param<std::string>(p, "output", "")), out);
  return rep;
}

struct ChargeCase {
  Grid3 grid;
  SourceState source;
  double sigma = 1.0;
  double charge = 0.0;
  std::string kind;
  Vec3 axis = Vec3::UnitZ();
  double separation = 0.0;
};

ChargeCase charge_case(const json& p) {
  ChargeCase cc;
  cc.grid = grid_param(p, 64, 32.0);
  const json src = p.contains("source") ? p["source"] : json::object();
  cc.kind = param<std::string>(src, "kind", "dual_gaussian");
  cc.sigma = param(src, "sigma", 2 * cc.grid.h[0]);
  const double g = param(p, "g", 1.0);
  const Grid3& G = cc.grid;
  if (cc.kind == "dual_gaussian") {
    const double E = param(src, "energy", 1.0);
    const WaveFunction psi = make_position_state(RepKind::dual, E, G, gaussian_samples(G, Vec3::Zero(), cc.sigma, Vec3::Zero()),
                                                 param(p, "c", 1.0));
    cc.source = charge_density_dual(psi, g);
    cc.charge = -g;
  } else if (cc.kind == "gaussian" || cc.kind == "dipole") {
    cc.charge = param(src, "charge", 1.0);
    cc.separation = cc.kind == "dipole" ? param(src, "separation", 2 * G.h[0]) : 0.0;
    const double s2 = cc.sigma * cc.sigma;
    const double norm = cc.charge * std::pow(2 * kPi * s2, -1.5);
    const Vec3 d = cc.axis * (cc.separation / 2);
    RealField rho = sample_real(G, [&](const Vec3& x) {
      if (cc.kind == "gaussian") return norm * std::exp(-x.squaredNorm() / (2 * s2));
      return norm * (std::exp(-(x - d).squaredNorm() / (2 * s2)) - std::exp(-(x + d).squaredNorm() / (2 * s2)));
    });
    cc.source.grid = G;
    cc.source.times = {0.0};
    cc.source.rho = {std::move(rho)};
    cc.source.j = {VectorField(G.size())};
  } else {
    throw InputError("unknown source kind '" + cc.kind + "'");
  }
  return cc;
}

PoissonOptions poisson_options(const json& p, Boundary def) {
  PoissonOptions o;
  o.bc = boundary_from_string(param<std::string>(p, "bc", to_string(def)));
  o.neutralize = param(p, "neutralize", true);
  o.c = param(p, "c", 1.0);
  o.g = param(p, "g", 1.0);
  o.cg_tolerance = param(p, "cg_tolerance", 1e-10);
  return o;
}

/// Max relative error of E against the free-space Gaussian field on sigma <= r <= 3 sigma.
double radial_profile_error(const Grid3& G, const VectorField& E, double sigma, double Q, double c, double g,
                            std::vector<std::vector<double>>* rows) {
  double worst = 0;
  for (int i = 0; i < G.n[0]; ++i)
    for (int j = 0; j < G.n[1]; ++j)
      for (int k = 0; k < G.n[2]; ++k) {
        const Vec3 x = G.point(i, j, k);
        const double r = x.norm();
        if (r < sigma || r > 3 * sigma) continue;
        const double an = gaussian_charge_field(r, sigma, Q, c, g);
        const Vec3 e = E.at(G.index(i, j, k));
        worst = std::max(worst, (e - an * x / r).norm() / std::abs(an));
        if (rows && x[0] == 0 && x[1] == 0 && x[2] > 0) rows->push_back({r, e.dot(x / r), an});
      }
  return worst;
}

/// Log-log slope of |E . axis| along the positive axis over [r_lo, 2 r_lo].
double dipole_slope(const Grid3& G, const VectorField& E, double r_lo, std::vector<std::vector<double>>* rows) {
  std::vector<double> rs, es;
  const int i0 = G.n[0] / 2, j0 = G.n[1] / 2;
  for (int k = 0; k < G.n[2]; ++k) {
    const Vec3 x = G.point(i0, j0, k);
    if (x[2] < r_lo - 1e-9 || x[2] > 2 * r_lo + 1e-9) continue;
    rs.push_back(x[2]);
    es.push_back(std::abs(E[2][G.index(i0, j0, k)]));
    if (rows) rows->push_back({x[2], es.back()});
  }
  if (rs.size() < 2) throw InputError("dipole check range holds fewer than two grid points");
  return loglog_slope(rs, es);
}

Report run_solve_electrostatics(const Scenario& s, const RunContext& ctx, std::uint64_t seed) {
  Report rep(echo(s, seed));
  const json& p = s.params;
  const ChargeCase cc = charge_case(p);
  const PoissonOptions opt = poisson_options(p, Boundary::periodic);
  const ElectrostaticSolution sol = solve_electrostatics(cc.source, opt);
  const double gtol = param(p, "gauss_tolerance", opt.bc == Boundary::periodic ? 1e-8 : 1e-6);
  rep.add("Gauss residual", sol.gauss_residual, gtol);
  double bmax = 0;
  for (int a = 0; a < 3; ++a)
    for (double v : sol.fields.B[0][a]) bmax = std::max(bmax, std::abs(v));
  rep.add("magnetic field", bmax, 0.0);
  rep.results()["iterations"] = sol.iterations;
  rep.results()["background"] = sol.background;
  std::vector<std::vector<double>> rows;
  if (cc.kind == "dipole") {
    const double r_lo = param(p, "dipole_r", cc.grid.extent()[0] / 8);
    const double slope = dipole_slope(cc.grid, sol.fields.E[0], r_lo, &rows);
    rep.add("dipole far-field scaling |slope/-3 - 1|", std::abs(slope / -3.0 - 1.0), param(p, "dipole_tolerance", 0.05),
            slope);
    write_csv(csv_path(s, ctx), {"r", "E_axis"}, rows);
  } else {
    const double err = radial_profile_error(cc.grid, sol.fields.E[0], cc.sigma, cc.charge, opt.c, opt.g, &rows);
    rep.add("radial field vs error-function profile", err, param(p, "radial_tolerance", 0.01));
    write_csv(csv_path(s, ctx), {"r", "E_r", "E_r_exact"}, rows);
  }
  if (cc.kind == "dual_gaussian") {
    // Trivial time evolution: rho and the solved fields at later time labels.
    const double dt = param(p, "dt", 0.25);
    const WaveFunction psi = make_position_state(RepKind::dual, param(p.value("source", json::object()), "energy", 1.0),
                                                 cc.grid, gaussian_samples(cc.grid, Vec3::Zero(), cc.sigma, Vec3::Zero()));
    const SourceState slices = charge_density_dual(psi, opt.g, {0.0, dt, 2 * dt});
    double dE = 0, dB = 0;
    const ElectrostaticSolution s0 = solve_electrostatics({slices.grid, {0.0}, {slices.rho[0]}, {slices.j[0]}}, opt);
    for (std::size_t k = 1; k < slices.slices(); ++k) {
      const ElectrostaticSolution sk = solve_electrostatics({slices.grid, {slices.times[k]}, {slices.rho[k]}, {slices.j[k]}}, opt);
      for (int a = 0; a < 3; ++a)
        for (std::size_t q = 0; q < cc.grid.size(); ++q) {
          dE = std::max(dE, std::abs(sk.fields.E[0][a][q] - s0.fields.E[0][a][q]) / dt);
          dB = std::max(dB, std::abs(sk.fields.B[0][a][q] - s0.fields.B[0][a][q]) / dt);
        }
    }
    rep.add("dE/dt across time slices", dE, 0.0);
    rep.add("dB/dt across time slices", dB, 0.0);
  }
  if (p.contains("fields_output")) {
    const VectorField& E = sol.fields.E[0];
    Container c = pack_real_fields(cc.grid, {&sol.potentials.A0[0], &E[0], &E[1], &E[2]});
    write_container(resolve(ctx.out_dir, param<std::string>(p, "fields_output", "")), c);
  }
  return rep;
}

Report run_maxwell_covariance(const Scenario& s, const RunContext& ctx, std::uint64_t seed) {
  Report rep(echo(s, seed));
  const json& p = s.params;
  const ChargeCase cc = charge_case(p);
  const PoissonOptions opt = poisson_options(p, Boundary::periodic);
  if (opt.bc != Boundary::periodic) throw InputError("maxwell-covariance uses the periodic solver");
  const ElectrostaticSolution sol = solve_electrostatics(cc.source, opt);
  SourceState neutral = cc.source;
  for (auto& v : neutral.rho[0]) v -= sol.background;

  const int frames = param(p, "frames", 20);
  const double beta_max = param(p, "beta_max", 0.5);
  ElementRanges r;
  r.b = param(p, "b_range", 1.0);
  r.a = param(p, "a_range", cc.grid.h[0] * 4);
  r.v = beta_max * opt.c;
  const double tau = param(p, "rest_tolerance", 1e-2);
  const double limit = param(p, "inflation_tolerance", 10.0);
  CovarianceOptions co;
  co.rule = covariance_rule_from_string(param<std::string>(p, "rule", "per_equation"));
  co.interp_order = param(p, "interp_order", 6);
  const auto diagnostics = string_list(p, "diagnostic_rules", {});

  CounterRng rng(seed, 11);
  double worst = 0, leak = 0;
  bool pre = true;
  std::map<std::string, double> diag;
  std::vector<std::vector<double>> rows;
  for (int t = 0; t < frames; ++t) {
    const FrameChange fc{random_element(rng, Flavor::dual, opt.c, r), Limit::electric};
    const CovarianceReport cr = covariance_verify(sol.fields, neutral, fc, tau, co);
    pre = pre && cr.precondition_ok;
    worst = std::max(worst, cr.inflation);
    leak = std::max(leak, cr.leakage);
    rows.push_back({double(t), fc.g.beta().norm(), cr.inflation, cr.rest[2], cr.moved[0], cr.moved[1], cr.moved[2],
                    cr.moved[3]});
    for (const auto& name : diagnostics) {
      CovarianceOptions d = co;
      d.rule = covariance_rule_from_string(name);
      diag[name] = std::max(diag[name], covariance_verify(sol.fields, neutral, fc, tau, d).inflation);
    }
    if (t == 0) rep.results()["rest_residuals"] = cr.rest;
  }
  rep.add("rest-frame residual precondition", pre ? 0.0 : 1.0, 0.0);
  rep.add("residual inflation (" + to_string(co.rule) + ")", worst, limit);
  rep.results()["max_leakage"] = leak;
  for (const auto& [k, v] : diag) rep.results()["diagnostic_inflation"][k] = v;
  write_csv(csv_path(s, ctx), {"frame", "beta", "inflation", "rest_gauss", "div_B", "faraday", "gauss", "ampere"},
            rows);
  return rep;
}

}  // namespace

Report run_scenario(const Scenario& s, const RunContext& ctx) {
  const std::uint64_t seed = ctx.seed.value_or(s.seed);
  try {
    if (s.command == "verify-groups") return run_verify_groups(s, seed);
    if (s.command == "contract") return run_contract(s, ctx, seed);
    if (s.command == "verify-algebra") return run_verify_algebra(s, seed);
    if (s.command == "rep-transform") return run_rep_transform(s, ctx, seed);
    if (s.command == "solve-electrostatics") return run_solve_electrostatics(s, ctx, seed);
    if (s.command == "maxwell-covariance") return run_maxwell_covariance(s, ctx, seed);
  } catch (const IoError&) {
    throw;
  } catch (const InputError&) {
    throw;
  } catch (const json::exception& e) {
    throw InputError(s.name + ": " + e.what());
  } catch (const MismatchError& e) {
    throw InputError(s.name + ": " + e.what());
  } catch (const DomainError& e) {
    throw InputError(s.name + ": " + e.what());
  }
  throw InputError("unknown command '" + s.command + "'");
}

}  // namespace galdual
