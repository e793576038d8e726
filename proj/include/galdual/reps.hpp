#pragma once

#include "galdual/groups.hpp"
#include "galdual/kernels.hpp"
#include "galdual/wavefunction.hpp"

namespace galdual {

struct ActionOptions {
  /// Lagrange nodes per axis for off-grid resampling: 2 is trilinear.
  int interp_order = 2;
  /// Pure translations of the sample grid use an exact Fourier shift.
  bool fourier_rigid = true;
};

// Representation operators on sampled wavefunctions.
//
// galilei(m), position:  (U psi)(x, t) = exp(-i m (v^2 t / 2 - v.x + a.v / 2 - b v^2 / 2)) psi(x', t'),
//   x' = R^-1 (x - v t - a + b v), t' = t - b. These satisfy
//   U(g2) U(g1) = exp(-i m gamma(g2, g1)) U(g2 g1) with gamma from cocycle_gamma.
// galilei(m), momentum:  (U phi)(p) = exp(-i (m a.v / 2 + a.(p - m v) - b p^2 / 2m)) phi(R^-1 (p - m v)),
//   the Fourier image of the position action.
// dual(E), momentum:     (U phi)(p) = exp(-i b E + i a.p) phi(p'),  c p' = R^-1 (c p + E beta).
// dual(E), position:     (U psi)(x, t) = exp(-i E (t - b - beta.a / c)) exp(-i E beta.x / c) psi~(R^-1 (x - a)).

WaveFunction galilei_momentum_action(const GroupElement& g, const WaveFunction& phi,
                                     const ActionOptions& opt = {});
WaveFunction galilei_position_action(const GroupElement& g, const WaveFunction& psi,
                                     const ActionOptions& opt = {});
WaveFunction dual_momentum_action(const GroupElement& g, const WaveFunction& phi,
                                  const ActionOptions& opt = {});
WaveFunction dual_position_action(const GroupElement& g, const WaveFunction& psi,
                                  const ActionOptions& opt = {});
/// Dispatches on the representation and basis of psi.
WaveFunction apply_action(const GroupElement& g, const WaveFunction& psi,
                          const ActionOptions& opt = {});

/// The same operators on exactly known wavefunctions.
PositionFn galilei_position_action(const GroupElement& g, double m, PositionFn psi);
MomentumFn galilei_momentum_action(const GroupElement& g, double m, MomentumFn phi);
PositionFn dual_position_action(const GroupElement& g, double E, PositionFn psi);
MomentumFn dual_momentum_action(const GroupElement& g, double E, MomentumFn phi);

enum class DualGenerator { H, P, K, J };
enum class DerivativeMode { spectral, fd4 };

/// H = E, P = -p, K = i (E/c) d/dp, J = -i p x d/dp on a dual(E) momentum state.
/// `component` selects the vector component for P, K, J.
WaveFunction dual_generator_apply(DualGenerator name, int component, const WaveFunction& phi,
                                  DerivativeMode mode = DerivativeMode::spectral);

/// Image of an algebra basis element: chi_b -> -iH, chi_a -> -iP, chi_v -> +iK,
/// chi_theta -> -iJ.
WaveFunction algebra_image_apply(int basis_index, const WaveFunction& phi,
                                 DerivativeMode mode = DerivativeMode::spectral);

/// Max over basis pairs of |[X_i, X_j] phi - sum_k f_ij^k X_k phi| / |phi| for
/// the dual table.
double generator_consistency_residual(const WaveFunction& phi,
                                      DerivativeMode mode = DerivativeMode::spectral);

struct CasimirValues {
  double energy;
  double spin_squared;
};

/// Energy from H (exact when H acts as a scalar, else the Rayleigh quotient), and <S^2> / <1> with
/// S = J + (c/H) K x P, which commutes with every generator.
CasimirValues casimir_check(const WaveFunction& phi, DerivativeMode mode = DerivativeMode::spectral);

/// L(p) = [[I, 0], [c p^T / E, 1]]; L(p)^T maps (0, E) to (c p, E).
Mat4 boost_matrix(const Vec3& p, double E, double c = 1.0);

/// L^-1(p') C(g) L(p) with c p' = R c p - E beta; block-diag(R, 1) in exact arithmetic.
Mat4 little_group_conjugation(const Vec3& p, double E, const GroupElement& g);
/// c p' = R c p - E beta.
Vec3 little_group_momentum(const Vec3& p, double E, const GroupElement& g);

/// Relabels a dual(E) state as dual(E + kappa); samples are unchanged.
WaveFunction dual_central_extension_shift(const WaveFunction& phi, double kappa);

}  // namespace galdual
