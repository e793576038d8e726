#include "galdual/reps.hpp"

#include <cmath>

#include "galdual/algebra.hpp"
#include "galdual/fourier.hpp"

namespace galdual {

namespace {

constexpr cplx I1(0.0, 1.0);

void require(const WaveFunction& w, RepKind rep, Basis basis, const char* op) {
  if (w.rep != rep || w.basis != basis)
    throw MismatchError(std::string(op) + " expects a " + to_string(rep) + " " + to_string(basis) +
                        "-basis state, got " + to_string(w.rep) + " " + to_string(w.basis));
}

void require_flavor(const GroupElement& g, Flavor f, const char* op) {
  if (g.flavor != f)
    throw MismatchError(std::string(op) + " expects a " + to_string(f) + " element");
}

double leakage_fraction(const Grid3& g, const ComplexField& f, const Mat3& A, const Vec3& b) {
  // Mass whose forward image x = A^-1 (y - b) leaves the grid box.
  const Mat3 Ai = A.transpose();  // A is always a rotation here
  const Vec3 lo = g.origin, hi = g.origin + Vec3((g.n[0] - 1) * g.h[0], (g.n[1] - 1) * g.h[1],
                                                 (g.n[2] - 1) * g.h[2]);
  double lost = 0, total = 0;
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) {
        const double w = std::norm(f[g.index(i, j, k)]);
        total += w;
        if (w == 0) continue;
        const Vec3 x = Ai * (g.point(i, j, k) - b);
        for (int a = 0; a < 3; ++a)
          if (x[a] < lo[a] - 1e-9 * g.h[a] || x[a] > hi[a] + 1e-9 * g.h[a]) {
            lost += w;
            break;
          }
      }
  return total > 0 ? lost / total : 0.0;
}

/// out(x) = f(A x + b).
ComplexField resample_state(const Grid3& g, const ComplexField& f, const Mat3& A, const Vec3& b,
                            const ActionOptions& opt, double& leakage) {
  const bool rigid = A == Mat3::Identity();
  if (rigid && b.isZero(0.0)) return f;
  leakage += leakage_fraction(g, f, A, b);
  if (rigid && opt.fourier_rigid) return fourier::fourier_shift(g, f, -b);
  ComplexField out(f.size());
  kernels::resample(g, f.data(), g, kernels::AffineMap{A, b}, opt.interp_order, false, out.data());
  return out;
}

template <class Phase>
void multiply_phase(const Grid3& g, ComplexField& f, Phase&& phase) {
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) f[g.index(i, j, k)] *= std::polar(1.0, phase(g.point(i, j, k)));
}

}  // namespace

// ---------------------------------------------------------------------------

WaveFunction galilei_momentum_action(const GroupElement& g, const WaveFunction& phi,
                                     const ActionOptions& opt) {
  require_flavor(g, Flavor::galilei, "galilei_momentum_action");
  require(phi, RepKind::galilei, Basis::momentum, "galilei_momentum_action");
  const double m = phi.invariant;
  const Mat3 Ri = g.R.inverse().matrix();
  WaveFunction out = phi;
  out.samples = resample_state(phi.grid, phi.samples, Ri, -(Ri * (m * g.v)), opt, out.leakage);
  multiply_phase(phi.grid, out.samples, [&](const Vec3& p) {
    return -(0.5 * m * g.a.dot(g.v) + g.a.dot(p - m * g.v) - g.b * p.squaredNorm() / (2 * m));
  });
  return out;
}

WaveFunction galilei_position_action(const GroupElement& g, const WaveFunction& psi,
                                     const ActionOptions& opt) {
  require_flavor(g, Flavor::galilei, "galilei_position_action");
  require(psi, RepKind::galilei, Basis::position, "galilei_position_action");
  const double m = psi.invariant, t = psi.t;
  WaveFunction src = g.b == 0 ? psi : propagate_free(psi, t - g.b);
  const Mat3 Ri = g.R.inverse().matrix();
  WaveFunction out = psi;
  out.samples = resample_state(psi.grid, src.samples, Ri, -(Ri * (g.v * t + g.a - g.b * g.v)), opt,
                               out.leakage);
  const double v2 = g.v.squaredNorm();
  multiply_phase(psi.grid, out.samples, [&](const Vec3& x) {
    return -m * (0.5 * v2 * t - g.v.dot(x) + 0.5 * g.a.dot(g.v) - 0.5 * g.b * v2);
  });
  return out;
}

WaveFunction dual_momentum_action(const GroupElement& g, const WaveFunction& phi,
                                  const ActionOptions& opt) {
  require_flavor(g, Flavor::dual, "dual_momentum_action");
  require(phi, RepKind::dual, Basis::momentum, "dual_momentum_action");
  const double E = phi.invariant;
  if (E == 0) throw DomainError("dual representations need E != 0");
  const Mat3 Ri = g.R.inverse().matrix();
  WaveFunction out = phi;
  out.samples = resample_state(phi.grid, phi.samples, Ri, Ri * (E * g.beta() / phi.c), opt, out.leakage);
  multiply_phase(phi.grid, out.samples, [&](const Vec3& p) { return -g.b * E + g.a.dot(p); });
  return out;
}

WaveFunction dual_position_action(const GroupElement& g, const WaveFunction& psi,
                                  const ActionOptions& opt) {
  require_flavor(g, Flavor::dual, "dual_position_action");
  require(psi, RepKind::dual, Basis::position, "dual_position_action");
  const double E = psi.invariant, c = psi.c;
  if (E == 0) throw DomainError("dual representations need E != 0");
  const Mat3 Ri = g.R.inverse().matrix();
  WaveFunction out = psi;
  out.samples = resample_state(psi.grid, psi.samples, Ri, -(Ri * g.a), opt, out.leakage);
  const Vec3 beta = g.beta();
  const double constant = E * (g.b + beta.dot(g.a) / c);
  multiply_phase(psi.grid, out.samples, [&](const Vec3& x) { return constant - E * beta.dot(x) / c; });
  return out;
}

WaveFunction apply_action(const GroupElement& g, const WaveFunction& psi, const ActionOptions& opt) {
  if (psi.rep == RepKind::galilei)
    return psi.basis == Basis::momentum ? galilei_momentum_action(g, psi, opt)
                                        : galilei_position_action(g, psi, opt);
  return psi.basis == Basis::momentum ? dual_momentum_action(g, psi, opt)
                                      : dual_position_action(g, psi, opt);
}

// ---------------------------------------------------------------------------

PositionFn galilei_position_action(const GroupElement& g, double m, PositionFn psi) {
  require_flavor(g, Flavor::galilei, "galilei_position_action");
  const Mat3 Ri = g.R.inverse().matrix();
  return [=](const Vec3& x, double t) {
    const Vec3 xp = Ri * (x - g.v * t - g.a + g.b * g.v);
    const double v2 = g.v.squaredNorm();
    const double ph = -m * (0.5 * v2 * t - g.v.dot(x) + 0.5 * g.a.dot(g.v) - 0.5 * g.b * v2);
    return std::polar(1.0, ph) * psi(xp, t - g.b);
  };
}

MomentumFn galilei_momentum_action(const GroupElement& g, double m, MomentumFn phi) {
  require_flavor(g, Flavor::galilei, "galilei_momentum_action");
  const Mat3 Ri = g.R.inverse().matrix();
  return [=](const Vec3& p) {
    const double ph = -(0.5 * m * g.a.dot(g.v) + g.a.dot(p - m * g.v) - g.b * p.squaredNorm() / (2 * m));
    return std::polar(1.0, ph) * phi(Ri * (p - m * g.v));
  };
}

PositionFn dual_position_action(const GroupElement& g, double E, PositionFn psi) {
  require_flavor(g, Flavor::dual, "dual_position_action");
  if (E == 0) throw DomainError("dual representations need E != 0");
  const GroupElement gi = inverse(g);
  // Argument map x' = R^-1 (x - a), t' = t + beta.(x - a)/c - b is the inverse element's action.
  return [=](const Vec3& x, double t) {
    const Event e = act(gi, Event{x, t});
    return psi(e.x, e.t);
  };
}

MomentumFn dual_momentum_action(const GroupElement& g, double E, MomentumFn phi) {
  require_flavor(g, Flavor::dual, "dual_momentum_action");
  if (E == 0) throw DomainError("dual representations need E != 0");
  const Mat3 Ri = g.R.inverse().matrix();
  return [=](const Vec3& p) {
    return std::polar(1.0, -g.b * E + g.a.dot(p)) * phi(Ri * (p + E * g.beta() / g.c));
  };
}

// ---------------------------------------------------------------------------

namespace {

ComplexField p_derivative(const WaveFunction& phi, const ComplexField& f, int axis,
                          DerivativeMode mode) {
  if (mode == DerivativeMode::spectral) return fourier::spectral_derivative(phi.grid, f, axis);
  ComplexField out(f.size());
  kernels::derivative(phi.grid, f.data(), out.data(), axis, 4, false);
  return out;
}

ComplexField times_p(const Grid3& g, const ComplexField& f, int axis, double s) {
  ComplexField out = f;
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) out[g.index(i, j, k)] *= s * g.point(i, j, k)[axis];
  return out;
}

int levi(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

void add_scaled(ComplexField& acc, const ComplexField& f, cplx s) {
  for (std::size_t q = 0; q < acc.size(); ++q) acc[q] += s * f[q];
}

double l2(const Grid3& g, const ComplexField& f) { return std::sqrt(norm2(g, f)); }

}  // namespace

WaveFunction dual_generator_apply(DualGenerator name, int component, const WaveFunction& phi,
                                  DerivativeMode mode) {
  require(phi, RepKind::dual, Basis::momentum, "dual_generator_apply");
  const double E = phi.invariant, c = phi.c;
  WaveFunction out = phi;
  switch (name) {
    case DualGenerator::H:
      for (auto& z : out.samples) z *= E;
      break;
    case DualGenerator::P:
      out.samples = times_p(phi.grid, phi.samples, component, -1.0);
      break;
    case DualGenerator::K: {
      out.samples = p_derivative(phi, phi.samples, component, mode);
      for (auto& z : out.samples) z *= I1 * (E / c);
      break;
    }
    case DualGenerator::J: {
      ComplexField acc(phi.samples.size(), cplx(0.0));
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const int e = levi(component, j, k);
          if (e == 0) continue;
          add_scaled(acc, times_p(phi.grid, p_derivative(phi, phi.samples, k, mode), j, 1.0),
                     -I1 * double(e));
        }
      out.samples = std::move(acc);
      break;
    }
  }
  return out;
}

WaveFunction algebra_image_apply(int k, const WaveFunction& phi, DerivativeMode mode) {
  using namespace basis;
  WaveFunction out;
  cplx s;
  if (k == b) {
    out = dual_generator_apply(DualGenerator::H, 0, phi, mode);
    s = -I1;
  } else if (k >= a(0) && k <= a(2)) {
    out = dual_generator_apply(DualGenerator::P, k - a(0), phi, mode);
    s = -I1;
  } else if (k >= v(0) && k <= v(2)) {
    out = dual_generator_apply(DualGenerator::K, k - v(0), phi, mode);
    s = I1;
  } else if (k >= theta(0) && k <= theta(2)) {
    out = dual_generator_apply(DualGenerator::J, k - theta(0), phi, mode);
    s = -I1;
  } else {
    throw Error("basis index out of range for the dual algebra");
  }
  for (auto& z : out.samples) z *= s;
  return out;
}

double generator_consistency_residual(const WaveFunction& phi, DerivativeMode mode) {
  const auto table = hardcoded_table(AlgebraFlavor::dual, phi.c);
  std::vector<WaveFunction> single;
  for (int k = 0; k < 10; ++k) single.push_back(algebra_image_apply(k, phi, mode));
  const double n0 = l2(phi.grid, phi.samples);
  double worst = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      ComplexField r = algebra_image_apply(i, single[j], mode).samples;
      add_scaled(r, algebra_image_apply(j, single[i], mode).samples, -1.0);
      for (const auto& t : table.at(i, j)) add_scaled(r, single[t.k].samples, -t.coef);
      worst = std::max(worst, l2(phi.grid, r) / n0);
    }
  return worst;
}

CasimirValues casimir_check(const WaveFunction& phi, DerivativeMode mode) {
  require(phi, RepKind::dual, Basis::momentum, "casimir_check");
  const double E = phi.invariant, c = phi.c;
  const WaveFunction h = dual_generator_apply(DualGenerator::H, 0, phi, mode);
  // When H acts sample by sample as multiplication by E the eigenvalue is read
  // off exactly; otherwise fall back to the Rayleigh quotient.
  cplx num = 0;
  double den = 0;
  bool scalar = true;
  for (std::size_t q = 0; q < phi.samples.size(); ++q) {
    num += std::conj(phi.samples[q]) * h.samples[q];
    den += std::norm(phi.samples[q]);
    scalar = scalar && h.samples[q] == E * phi.samples[q];
  }
  std::array<WaveFunction, 3> P;
  for (int k = 0; k < 3; ++k) P[k] = dual_generator_apply(DualGenerator::P, k, phi, mode);
  double s2 = 0;
  for (int i = 0; i < 3; ++i) {
    ComplexField s = dual_generator_apply(DualGenerator::J, i, phi, mode).samples;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e = levi(i, j, k);
        if (e == 0) continue;
        add_scaled(s, dual_generator_apply(DualGenerator::K, j, P[k], mode).samples, e * c / E);
      }
    s2 += norm2(phi.grid, s);
  }
  return {scalar ? E : num.real() / den, s2 / (den * phi.grid.cell_volume())};
}

Mat4 boost_matrix(const Vec3& p, double E, double c) {
  if (E == 0) throw DomainError("boost matrix needs E != 0");
  Mat4 L = Mat4::Identity();
  L.block<1, 3>(3, 0) = (c * p / E).transpose();
  return L;
}

Vec3 little_group_momentum(const Vec3& p, double E, const GroupElement& g) {
  return (g.R.matrix() * (g.c * p) - E * g.beta()) / g.c;
}

Mat4 little_group_conjugation(const Vec3& p, double E, const GroupElement& g) {
  if (E == 0) throw DomainError("little group needs E != 0");
  const Vec3 pp = little_group_momentum(p, E, g);
  Mat4 Linv = Mat4::Identity();
  Linv.block<1, 3>(3, 0) = -(g.c * pp / E).transpose();
  return Linv * homogeneous_matrix(g, HomogeneousKind::C) * boost_matrix(p, E, g.c);
}

WaveFunction dual_central_extension_shift(const WaveFunction& phi, double kappa) {
  if (phi.rep != RepKind::dual) throw MismatchError("central extension shift needs a dual state");
  if (phi.invariant + kappa == 0) throw DomainError("shifted energy must be nonzero");
  WaveFunction out = phi;
  out.invariant = phi.invariant + kappa;
  return out;
}

}  // namespace galdual
