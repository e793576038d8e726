#include "galdual/kernels.hpp"
#include "galdual/poisson.hpp"
#include "galdual/wavefunction.hpp"
#include "test_util.hpp"

using namespace galdual;

namespace {
SourceState gaussian_source(const Grid3& g, double sigma, const Vec3& centre, double sign) {
  const double norm = sign * std::pow(2 * kPi * sigma * sigma, -1.5);
  SourceState s;
  s.grid = g;
  s.times = {0.0};
  s.rho = {sample_real(g, [&](const Vec3& x) { return norm * std::exp(-(x - centre).squaredNorm() / (2 * sigma * sigma)); })};
  s.j = {VectorField(g.size())};
  return s;
}
}  // namespace

TEST_CASE("zero charge gives zero field") {
  const Grid3 g = Grid3::centered(16, 8.0);
  SourceState s{g, {0.0}, {RealField(g.size())}, {VectorField(g.size())}};
  for (Boundary bc : {Boundary::periodic, Boundary::dirichlet}) {
    PoissonOptions o;
    o.bc = bc;
    const ElectrostaticSolution sol = solve_electrostatics(s, o);
    for (int c = 0; c < 3; ++c)
      for (double v : sol.fields.E[0][c]) CHECK(v == 0);
  }
}

TEST_CASE("periodic solve needs neutrality") {
  const Grid3 g = Grid3::centered(24, 24.0);
  const SourceState s = gaussian_source(g, 2.0, Vec3::Zero(), 1.0);
  CHECK_THROWS_AS(solve_electrostatics(s), DomainError);
  PoissonOptions o;
  o.neutralize = true;
  const ElectrostaticSolution sol = solve_electrostatics(s, o);
  CHECK(sol.gauss_residual < 1e-8);
  CHECK(sol.background == doctest::Approx(1.0 / (24.0 * 24 * 24)).epsilon(1e-6));
}

TEST_CASE("dirichlet solve and the error-function field") {
  const Grid3 g = Grid3::centered(48, 24.0);
  const double sigma = 1.5;
  PoissonOptions o;
  o.bc = Boundary::dirichlet;
  o.c = 2.0;
  o.g = 1.5;
  const ElectrostaticSolution sol = solve_electrostatics(gaussian_source(g, sigma, Vec3::Zero(), 1.0), o);
  CHECK(sol.gauss_residual < 1e-6);
  CHECK(sol.iterations > 0);
  double rel = 0;
  for (int i = 24; i < 48; ++i) {
    const Vec3 x = g.point(i, 24, 24);
    if (x.norm() < sigma || x.norm() > 3 * sigma) continue;
    const double an = gaussian_charge_field(x.norm(), sigma, 1.0, o.c, o.g);
    rel = std::max(rel, std::abs(sol.fields.E[0][0][g.index(i, 24, 24)] - an) / an);
  }
  CHECK(rel < 0.05);
  for (int c = 0; c < 3; ++c)
    for (double v : sol.fields.B[0][c]) CHECK(v == 0);
}

TEST_CASE("gaussian_charge_field limits") {
  CHECK(gaussian_charge_field(50.0, 1.0, 2.0) == doctest::Approx(2.0 / (4 * kPi * 2500)).epsilon(1e-12));
  CHECK(gaussian_charge_field(1e-3, 1.0, 1.0) == doctest::Approx(1e-3 / (3 * std::pow(2 * kPi, 1.5))).epsilon(1e-5));
}

TEST_CASE("cg_dirichlet converges on a manufactured problem") {
  const Grid3 g = Grid3::centered(16, 1.0);
  const RealField u = sample_real(g, [](const Vec3& x) { return std::cos(kPi * x[0]) * std::cos(kPi * x[1]) * std::cos(kPi * x[2]); });
  RealField b(u.size()), x(u.size(), 0.0);
  kernels::laplacian7(g, u.data(), b.data(), false);
  for (auto& v : b) v = -v;
  const int it = cg_dirichlet(g, b, x, 1e-12, 1000);
  CHECK(it < 1000);
  double e = 0;
  for (std::size_t q = 0; q < u.size(); ++q) e = std::max(e, std::abs(x[q] - u[q]));
  CHECK(e < 1e-9);
}
