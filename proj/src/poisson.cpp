#include "galdual/poisson.hpp"

#include <cmath>
#include <numeric>

#include "galdual/fourier.hpp"
#include "galdual/kernels.hpp"

namespace galdual {

std::string to_string(Boundary b) { return b == Boundary::periodic ? "periodic" : "dirichlet"; }

Boundary boundary_from_string(const std::string& s) {
  if (s == "periodic") return Boundary::periodic;
  if (s == "dirichlet") return Boundary::dirichlet;
  throw Error("unknown boundary condition '" + s + "'");
}

double gaussian_charge_field(double r, double sigma, double Q, double c, double g) {
  if (r <= 0) return 0.0;
  const double u = r / sigma;
  const double enc = Q * (std::erf(u / std::sqrt(2.0)) - std::sqrt(2.0 / kPi) * u * std::exp(-0.5 * u * u));
  return c / (g * g) * enc / (4 * kPi * r * r);
}

int cg_dirichlet(const Grid3& g, const RealField& b, RealField& x, double rel_tol, int max_iter) {
  const std::size_t n = g.size();
  x.assign(n, 0.0);
  RealField r = b, p = b, Ap(n);
  double rr = kernels::dot(r.data(), r.data(), n);
  const double stop = rel_tol * rel_tol * rr;
  if (rr == 0) return 0;
  for (int it = 1; it <= max_iter; ++it) {
    kernels::laplacian7(g, p.data(), Ap.data(), false);
    for (auto& v : Ap) v = -v;
    const double alpha = rr / kernels::dot(p.data(), Ap.data(), n);
    kernels::axpy(alpha, p.data(), x.data(), n);
    kernels::axpy(-alpha, Ap.data(), r.data(), n);
    const double rr_new = kernels::dot(r.data(), r.data(), n);
    if (rr_new <= stop) return it;
    const double beta = rr_new / rr;
    for (std::size_t q = 0; q < n; ++q) p[q] = r[q] + beta * p[q];
    rr = rr_new;
  }
  throw Error("conjugate gradients did not converge");
}

ElectrostaticSolution solve_electrostatics(const SourceState& src, const PoissonOptions& opt) {
  if (src.rho.empty()) throw Error("solve_electrostatics: no charge density");
  const Grid3& G = src.grid;
  const RealField& rho = src.rho[0];
  const double k = opt.c / (opt.g * opt.g);
  for (double v : rho)
    if (!std::isfinite(v)) throw DomainError("charge density is not finite");

  ElectrostaticSolution sol;
  RealField A0(G.size(), 0.0);
  RealField rhs(G.size());
  DiffOptions d;

  if (opt.bc == Boundary::periodic) {
    const double mean = std::accumulate(rho.begin(), rho.end(), 0.0) / double(rho.size());
    const double total = std::accumulate(rho.begin(), rho.end(), 0.0, [](double a, double v) {
      return a + std::abs(v);
    }) / double(rho.size());
    if (!opt.neutralize && std::abs(mean) > 1e-12 * std::max(total, 1e-300))
      throw DomainError("net charge under periodic bc needs a neutralizing background");
    sol.background = mean;
    ComplexField f(G.size());
    for (std::size_t q = 0; q < f.size(); ++q) f[q] = k * (rho[q] - mean);
    f = fourier::apply_multiplier(G, f, [](const Vec3& kv) {
      const double k2 = kv.squaredNorm();
      return k2 == 0 ? cplx(0.0) : cplx(-1.0 / k2);
    });
    for (std::size_t q = 0; q < f.size(); ++q) A0[q] = f[q].real();
    d = {Stencil::spectral, true};
    for (std::size_t q = 0; q < rhs.size(); ++q) rhs[q] = k * (rho[q] - mean);
  } else {
    RealField b(G.size());
    for (std::size_t q = 0; q < b.size(); ++q) b[q] = -k * rho[q];
    sol.iterations = cg_dirichlet(G, b, A0, opt.cg_tolerance, opt.cg_max_iterations);
    d = {Stencil::fd2, false};
    rhs.assign(rho.size(), 0.0);
    for (std::size_t q = 0; q < rhs.size(); ++q) rhs[q] = k * rho[q];
  }

  sol.potentials.grid = G;
  sol.potentials.c = opt.c;
  sol.potentials.g = opt.g;
  sol.potentials.times = {0.0};
  sol.potentials.A0 = {A0};
  sol.potentials.A = {VectorField(G.size())};
  sol.potentials.is_static = true;
  sol.fields = fields_from_potentials(sol.potentials, d);

  RealField res;
  if (opt.bc == Boundary::periodic) {
    res = divergence(G, sol.fields.E[0], d);
  } else {
    res.resize(G.size());
    kernels::laplacian7(G, A0.data(), res.data(), false);
  }
  double worst = 0;
  for (std::size_t q = 0; q < res.size(); ++q) worst = std::max(worst, std::abs(res[q] - rhs[q]));
  sol.gauss_residual = worst;
  return sol;
}

}  // namespace galdual
