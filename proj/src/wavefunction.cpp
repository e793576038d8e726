#include "galdual/wavefunction.hpp"

#include <cmath>

#include "galdual/fourier.hpp"

namespace galdual {

std::string to_string(Basis b) { return b == Basis::momentum ? "momentum" : "position"; }
std::string to_string(RepKind r) { return r == RepKind::galilei ? "galilei" : "dual"; }

Basis basis_from_string(const std::string& s) {
  if (s == "momentum") return Basis::momentum;
  if (s == "position") return Basis::position;
  throw Error("unknown basis '" + s + "'");
}

RepKind rep_from_string(const std::string& s) {
  if (s == "galilei") return RepKind::galilei;
  if (s == "dual") return RepKind::dual;
  throw Error("unknown representation '" + s + "'");
}

cplx WaveFunction::full_sample(std::size_t q) const {
  if (rep == RepKind::dual && basis == Basis::position)
    return std::polar(1.0, -invariant * t) * samples[q];
  return samples[q];
}

ComplexField gaussian_samples(const Grid3& g, const Vec3& x0, double sigma, const Vec3& k0) {
  const double norm = std::pow(2.0 * kPi * sigma * sigma, -0.75);
  return sample_complex(g, [&](const Vec3& x) {
    const Vec3 d = x - x0;
    return std::polar(norm * std::exp(-d.squaredNorm() / (4 * sigma * sigma)), k0.dot(x));
  });
}

WaveFunction make_position_state(RepKind rep, double invariant, const Grid3& g,
                                 ComplexField samples, double c, double t) {
  if (samples.size() != g.size()) throw MismatchError("sample count does not match grid");
  if (rep == RepKind::dual && invariant == 0) throw DomainError("dual representations need E != 0");
  if (rep == RepKind::galilei && !(invariant > 0)) throw DomainError("mass must be positive");
  WaveFunction w;
  w.basis = Basis::position;
  w.rep = rep;
  w.invariant = invariant;
  w.c = c;
  w.t = t;
  w.grid = g;
  w.samples = std::move(samples);
  return w;
}

WaveFunction make_momentum_state(RepKind rep, double invariant, const Grid3& pg,
                                 ComplexField samples, double c) {
  WaveFunction w = make_position_state(rep, invariant, pg, std::move(samples), c, 0.0);
  w.basis = Basis::momentum;
  return w;
}

static ComplexField free_phase(const Grid3& pg, const ComplexField& f, double m, double t) {
  ComplexField out = f;
  for (int i = 0; i < pg.n[0]; ++i)
    for (int j = 0; j < pg.n[1]; ++j)
      for (int k = 0; k < pg.n[2]; ++k) {
        const double p2 = pg.point(i, j, k).squaredNorm();
        out[pg.index(i, j, k)] *= std::polar(1.0, -p2 * t / (2 * m));
      }
  return out;
}

WaveFunction to_momentum_basis(const WaveFunction& psi) {
  if (psi.basis != Basis::position) throw MismatchError("expected a position-basis state");
  WaveFunction phi = psi;
  phi.basis = Basis::momentum;
  phi.grid = psi.grid.reciprocal();
  phi.t = 0.0;
  phi.samples = fourier::to_momentum(psi.grid, psi.samples);
  if (psi.rep == RepKind::galilei) {
    phi.samples = free_phase(phi.grid, phi.samples, psi.invariant, -psi.t);
  } else {
    for (auto& z : phi.samples) z = std::conj(z);
  }
  return phi;
}

WaveFunction to_position_basis(const WaveFunction& phi, const Grid3& position_grid, double t) {
  if (phi.basis != Basis::momentum) throw MismatchError("expected a momentum-basis state");
  if (position_grid.reciprocal().n != phi.grid.n ||
      !position_grid.reciprocal().h.isApprox(phi.grid.h, 1e-12))
    throw MismatchError("position grid is not conjugate to the momentum grid");
  WaveFunction psi = phi;
  psi.basis = Basis::position;
  psi.grid = position_grid;
  psi.t = t;
  ComplexField f = phi.samples;
  if (phi.rep == RepKind::galilei) {
    f = free_phase(phi.grid, f, phi.invariant, t);
  } else {
    for (auto& z : f) z = std::conj(z);
  }
  psi.samples = fourier::to_position(position_grid, f);
  return psi;
}

WaveFunction propagate_free(const WaveFunction& psi, double t) {
  if (psi.rep != RepKind::galilei || psi.basis != Basis::position)
    throw MismatchError("free propagation needs a galilei position state");
  WaveFunction out = psi;
  const double m = psi.invariant, dt = t - psi.t;
  out.samples = fourier::apply_multiplier(psi.grid, psi.samples, [&](const Vec3& k) {
    return std::polar(1.0, -k.squaredNorm() * dt / (2 * m));
  });
  out.t = t;
  return out;
}

PositionFn free_gaussian_packet(double m, const Vec3& x0, double sigma, const Vec3& k0) {
  return [=](const Vec3& x, double t) {
    // sigma_t = sigma (1 + i t / (2 m sigma^2))
    const cplx st = sigma * cplx(1.0, t / (2.0 * m * sigma * sigma));
    const Vec3 d = x - x0 - (k0 / m) * t;
    const cplx env = std::exp(-d.squaredNorm() / (4.0 * sigma * st));
    const cplx ph = std::exp(cplx(0.0, k0.dot(x) - k0.squaredNorm() * t / (2.0 * m)));
    const cplx amp = std::pow(2.0 * kPi * sigma * sigma, -0.75) * std::pow(sigma / st, 1.5);
    return amp * env * ph;
  };
}

}  // namespace galdual
