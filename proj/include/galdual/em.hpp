#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "galdual/groups.hpp"
#include "galdual/wavefunction.hpp"

/// Galilean electromagnetism on uniform grids. Sign convention throughout:
/// E = +grad A0 - dA/dt, B = curl A.
namespace galdual {

enum class Limit { electric, magnetic };
std::string to_string(Limit l);
Limit limit_from_string(const std::string& s);

enum class Stencil { fd2, fd4, spectral };

struct DiffOptions {
  Stencil stencil = Stencil::fd4;
  bool periodic = false;
};

RealField partial(const Grid3& g, const RealField& f, int axis, const DiffOptions& d);
VectorField gradient(const Grid3& g, const RealField& f, const DiffOptions& d);
RealField divergence(const Grid3& g, const VectorField& f, const DiffOptions& d);
VectorField curl(const Grid3& g, const VectorField& f, const DiffOptions& d);
/// (u . grad) f componentwise, for a constant vector u.
VectorField directional(const Grid3& g, const VectorField& f, const Vec3& u, const DiffOptions& d);

/// Time slices share a uniform spacing dt; a single slice is a static state.
struct FieldState {
  Grid3 grid;
  double c = 1.0;
  double g = 1.0;
  std::vector<double> times;
  std::vector<VectorField> E;
  std::vector<VectorField> B;

  std::size_t slices() const { return E.size(); }
  double dt() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
};

struct PotentialState {
  Grid3 grid;
  double c = 1.0;
  double g = 1.0;
  std::vector<double> times;
  std::vector<RealField> A0;
  std::vector<VectorField> A;
  /// With a single slice, dA/dt is taken as zero only when this is set.
  bool is_static = true;

  std::size_t slices() const { return A0.size(); }
  double dt() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
};

struct SourceState {
  Grid3 grid;
  std::vector<double> times;
  std::vector<RealField> rho;
  std::vector<VectorField> j;

  std::size_t slices() const { return rho.size(); }
};

/// Electric frame changes take dual elements, magnetic ones Galilei elements.
struct FrameChange {
  GroupElement g;
  Limit limit = Limit::electric;
};

/// Second-order time derivative of slice k (centered inside, one-sided at the ends).
template <class T>
T time_derivative(const std::vector<T>& slices, double dt, std::size_t k);

FieldState fields_from_potentials(const PotentialState& p, const DiffOptions& d = {});

/// Analytic gauge function with its gradient and time derivative.
struct GaugeFunction {
  std::function<double(const Vec3&, double)> value;
  std::function<Vec3(const Vec3&, double)> grad;
  std::function<double(const Vec3&, double)> dt;
};

struct GaugeResult {
  PotentialState potentials;
  std::optional<WaveFunction> matter;
};

/// A0 + (1/g) dlambda/dt, A + (1/g) grad lambda, psi -> exp(-i lambda) psi at psi.t.
GaugeResult gauge_transform(const PotentialState& p, const GaugeFunction& lambda,
                            const WaveFunction* psi = nullptr);
/// Same with lambda sampled on the potential grid and slices; derivatives are discrete.
GaugeResult gauge_transform(const PotentialState& p, const std::vector<RealField>& lambda,
                            const WaveFunction* psi = nullptr, const DiffOptions& d = {});

struct TransformOptions {
  /// Lagrange nodes per axis for resampling at x'.
  int interp_order = 4;
  /// Destination grid; defaults to the source grid.
  std::optional<Grid3> target;
  bool periodic = false;
};

/// E' = R E(x'), B' = R B(x') + (beta/c) x R E(x'), x' = R^-1 (x - a). Input must be static.
FieldState electric_limit_transform(const FieldState& f, const FrameChange& fc,
                                    const TransformOptions& opt = {});
/// E' = R E - v x R B, B' = R B at x' = R^-1 (x - v t - a + b v), t' = t - b.
/// Output slices carry time labels t + b.
FieldState magnetic_limit_transform(const FieldState& f, const FrameChange& fc,
                                    const TransformOptions& opt = {});
/// Electric: A0' = A0, A' = R A + (v/c^2) A0. Magnetic: A0' = A0 - v.R A, A' = R A.
/// Arguments are mapped as in the matching field law.
PotentialState potential_transform(const PotentialState& p, const FrameChange& fc,
                                   const TransformOptions& opt = {});

/// rho = -g |psi~|^2 on every requested time label, j = 0.
SourceState charge_density_dual(const WaveFunction& psi, double g,
                                const std::vector<double>& times = {0.0});
/// rho = -g |psi|^2, j = -(g/m)(Im(psi* grad psi) + g A |psi|^2), one slice per psi.
SourceState charge_current_galilei(const std::vector<WaveFunction>& psi, const PotentialState& p,
                                   const DiffOptions& d = {});

/// d rho/dt + div j at slice k.
RealField continuity_residual(const SourceState& s, std::size_t k, const DiffOptions& d = {});

struct MaxwellResidual {
  RealField div_B;
  VectorField faraday;  // curl E + dB/dt
  RealField gauss;      // div E - (c/g^2) rho
  VectorField ampere;   // c^2 curl B - dE/dt - (c/g^2) j

  /// Max norms over a box, in the order div_B, faraday, gauss, ampere.
  std::array<double, 4> max_norms(const Grid3& g, const IndexBox& box) const;
};

/// Residuals from given fields, time derivatives and sources.
MaxwellResidual maxwell_residual(const Grid3& grid, double c, double g, const VectorField& E,
                                 const VectorField& B, const VectorField& dEdt,
                                 const VectorField& dBdt, const RealField& rho, const VectorField& j,
                                 const DiffOptions& d = {});
/// Residuals at slice k (default: middle); static states use zero time derivatives.
/// In the electric limit a nonzero current is accepted only in moving frames, so it is used as given.
MaxwellResidual maxwell_residual(const FieldState& f, const SourceState& s, Limit limit,
                                 const DiffOptions& d = {}, std::optional<std::size_t> k = {});

/// Electric: i (d/dt + i g A0) psi - E psi. Magnetic: i (d/dt + i g A0) psi + (1/2m)(grad + i g A)^2 psi.
/// `psi` holds full wavefunction samples per slice of p; the residual is at slice k.
ComplexField matter_residual(const std::vector<WaveFunction>& psi, const PotentialState& p,
                             Limit limit, std::size_t k, const DiffOptions& d = {});

/// How time derivatives are formed in the moved frame.
/// dual_static: fields of a static state stay static under dual frame changes.
/// galilei_convective: d/dt' = -(v . grad) acting on the transported fields.
/// per_equation: convective in the inhomogeneous pair, static in the homogeneous pair.
enum class CovarianceRule { dual_static, galilei_convective, per_equation };
std::string to_string(CovarianceRule r);
CovarianceRule covariance_rule_from_string(const std::string& s);

struct CovarianceOptions {
  CovarianceRule rule = CovarianceRule::per_equation;
  int interp_order = 6;
  DiffOptions diff{Stencil::fd4, true};
  /// Half-width of the checked cube around the image of `center`.
  double half_width = 0.0;
  Vec3 center = Vec3::Zero();
  /// Rest residuals below this floor are treated as the floor when forming ratios.
  double floor = 1e-14;
};

struct CovarianceReport {
  std::array<double, 4> rest{};       // div_B, faraday, gauss, ampere
  std::array<double, 4> moved{};
  double inflation = 0.0;             // max(moved) / max(rest)
  double leakage = 0.0;
  bool precondition_ok = true;
  std::string note;
};

/// Checks the electric-limit Maxwell system in the frame fc for a static rest-frame state
/// (f, s). Sources move as rho' = rho(x'), j' = R j(x') + v rho(x').
/// `tau` is the rest-frame tolerance the precondition is checked against.
CovarianceReport covariance_verify(const FieldState& f, const SourceState& s, const FrameChange& fc,
                                   double tau, const CovarianceOptions& opt = {});

}  // namespace galdual
