#pragma once

#include <functional>
#include <string>

#include "galdual/grid.hpp"

namespace galdual {

enum class Basis { momentum, position };
/// galilei(m): projective Galilei representation of mass m.
/// dual(E): dual-group representation of energy E != 0.
enum class RepKind { galilei, dual };

std::string to_string(Basis b);
std::string to_string(RepKind r);
Basis basis_from_string(const std::string& s);
RepKind rep_from_string(const std::string& s);

/// Complex samples on a uniform grid. Position samples of a galilei(m) state
/// are psi(x, t) at the time label t. Position samples of a dual(E) state are
/// the time-independent factor psi~(x); the full wavefunction is
/// exp(-i E t) psi~(x). Momentum samples carry no time dependence.
struct WaveFunction {
  Basis basis = Basis::position;
  RepKind rep = RepKind::dual;
  double invariant = 1.0;  // m for galilei, E for dual
  double c = 1.0;
  double t = 0.0;
  Grid3 grid;
  ComplexField samples;
  /// Relative norm lost to resampling outside the grid, accumulated.
  double leakage = 0.0;

  double norm2() const { return galdual::norm2(grid, samples); }
  /// psi(x, t) at sample q for the stored time label.
  cplx full_sample(std::size_t q) const;
  /// |psi(x, t)| at sample q. For dual position states the time factor is a
  /// pure phase, so this is the stored amplitude and carries no t dependence.
  double modulus(std::size_t q) const { return std::abs(samples[q]); }
};

/// Normalized Gaussian exp(-|x - x0|^2 / (4 sigma^2) + i k0 . x) sampled on g.
ComplexField gaussian_samples(const Grid3& g, const Vec3& x0, double sigma, const Vec3& k0);

WaveFunction make_position_state(RepKind rep, double invariant, const Grid3& g,
                                 ComplexField samples, double c = 1.0, double t = 0.0);
WaveFunction make_momentum_state(RepKind rep, double invariant, const Grid3& pg,
                                 ComplexField samples, double c = 1.0);

/// Basis changes. Galilei: phi(p) = F[psi(., t)](p) e^{i p^2 t / 2m}, with F the
/// unitary transform of fourier::to_momentum. Dual: phi(p) = conj(F[psi~](p)),
/// the antiunitary intertwiner between the momentum and position realizations.
WaveFunction to_momentum_basis(const WaveFunction& psi);
/// `position_grid` must have psi.grid as its reciprocal grid.
WaveFunction to_position_basis(const WaveFunction& phi, const Grid3& position_grid, double t = 0.0);

/// Free propagation of a galilei(m) position state to time t (spectral).
WaveFunction propagate_free(const WaveFunction& psi, double t);

using PositionFn = std::function<cplx(const Vec3& x, double t)>;
using MomentumFn = std::function<cplx(const Vec3& p)>;

/// Exact free Gaussian packet of mass m, width sigma at t = 0, centre x0 and
/// mean momentum k0, normalized to one.
PositionFn free_gaussian_packet(double m, const Vec3& x0, double sigma, const Vec3& k0);

}  // namespace galdual
