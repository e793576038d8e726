#pragma once

#include <string>

#include "galdual/em.hpp"

namespace galdual {

/// periodic: FFT solve; a nonzero net charge needs `neutralize`.
/// dirichlet: A0 = 0 outside the grid, conjugate gradients on the 7-point Laplacian.
enum class Boundary { periodic, dirichlet };
std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

struct PoissonOptions {
  Boundary bc = Boundary::periodic;
  /// Subtract the mean charge (uniform neutralizing background) under periodic bc.
  bool neutralize = false;
  double c = 1.0;
  double g = 1.0;
  double cg_tolerance = 1e-10;  // relative residual
  int cg_max_iterations = 5000;
};

struct ElectrostaticSolution {
  PotentialState potentials;
  FieldState fields;
  /// max |div E - (c/g^2) rho| with the operator matching the solver:
  /// spectral for periodic, the 7-point Laplacian of A0 for dirichlet.
  double gauss_residual = 0.0;
  int iterations = 0;
  double background = 0.0;  // mean charge removed under periodic bc
};

/// Solves div grad A0 = (c/g^2) rho for the first slice of rho; E = grad A0, A = 0, B = 0.
ElectrostaticSolution solve_electrostatics(const SourceState& rho, const PoissonOptions& opt = {});

/// Radial field of a Gaussian charge of total Q and width sigma in free space:
/// (c/g^2) Q_enc(r) / (4 pi r^2), Q_enc(r) = Q (erf(r / (sqrt2 sigma)) - sqrt(2/pi) (r/sigma) e^{-r^2 / 2 sigma^2}).
double gaussian_charge_field(double r, double sigma, double Q, double c = 1.0, double g = 1.0);

/// Conjugate gradients for -L x = b with L the 7-point zero-Dirichlet Laplacian.
int cg_dirichlet(const Grid3& g, const RealField& b, RealField& x, double rel_tol, int max_iter);

}  // namespace galdual
