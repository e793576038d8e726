#include "galdual/em.hpp"

#include <algorithm>
#include <cmath>

#include "galdual/fourier.hpp"
#include "galdual/kernels.hpp"

namespace galdual {

std::string to_string(Limit l) { return l == Limit::electric ? "electric" : "magnetic"; }

Limit limit_from_string(const std::string& s) {
  if (s == "electric") return Limit::electric;
  if (s == "magnetic") return Limit::magnetic;
  throw Error("unknown limit '" + s + "'");
}

std::string to_string(CovarianceRule r) {
  switch (r) {
    case CovarianceRule::dual_static: return "dual_static";
    case CovarianceRule::galilei_convective: return "galilei_convective";
    case CovarianceRule::per_equation: return "per_equation";
  }
  return "?";
}

CovarianceRule covariance_rule_from_string(const std::string& s) {
  if (s == "dual_static") return CovarianceRule::dual_static;
  if (s == "galilei_convective") return CovarianceRule::galilei_convective;
  if (s == "per_equation") return CovarianceRule::per_equation;
  throw Error("unknown covariance rule '" + s + "'");
}

// ---------------------------------------------------------------------------
// Differential operators

namespace {

int fd_order(Stencil s) { return s == Stencil::fd2 ? 2 : 4; }

ComplexField partial_c(const Grid3& g, const ComplexField& f, int axis, const DiffOptions& d) {
  if (d.stencil == Stencil::spectral) {
    if (!d.periodic) throw Error("spectral derivatives need a periodic grid");
    return fourier::spectral_derivative(g, f, axis);
  }
  ComplexField out(f.size());
  kernels::derivative(g, f.data(), out.data(), axis, fd_order(d.stencil), d.periodic);
  return out;
}

void check_grid(const Grid3& a, const Grid3& b, const char* what) {
  if (a != b) throw MismatchError(std::string(what) + ": grid mismatch");
}

template <class T>
void axpy_field(T& y, double a, const T& x) {
  for (std::size_t q = 0; q < y.size(); ++q) y[q] += a * x[q];
}

void axpy_field(VectorField& y, double a, const VectorField& x) {
  for (int c = 0; c < 3; ++c) axpy_field(y[c], a, x[c]);
}

template <class T>
T zero_like(const T& x) {
  T out = x;
  for (auto& v : out) v = 0;
  return out;
}

VectorField zero_like(const VectorField& x) { return VectorField(x.size()); }

bool all_zero(const RealField& f) {
  return std::all_of(f.begin(), f.end(), [](double v) { return v == 0.0; });
}

bool all_zero(const VectorField& f) { return all_zero(f[0]) && all_zero(f[1]) && all_zero(f[2]); }

Vec3 cross(const Vec3& a, const Vec3& b) { return a.cross(b); }

}  // namespace

RealField partial(const Grid3& g, const RealField& f, int axis, const DiffOptions& d) {
  if (d.stencil == Stencil::spectral) {
    if (!d.periodic) throw Error("spectral derivatives need a periodic grid");
    return fourier::spectral_derivative(g, f, axis);
  }
  RealField out(f.size());
  kernels::derivative(g, f.data(), out.data(), axis, fd_order(d.stencil), d.periodic);
  return out;
}

VectorField gradient(const Grid3& g, const RealField& f, const DiffOptions& d) {
  VectorField out;
  for (int a = 0; a < 3; ++a) out[a] = partial(g, f, a, d);
  return out;
}

RealField divergence(const Grid3& g, const VectorField& f, const DiffOptions& d) {
  RealField out = partial(g, f[0], 0, d);
  axpy_field(out, 1.0, partial(g, f[1], 1, d));
  axpy_field(out, 1.0, partial(g, f[2], 2, d));
  return out;
}

VectorField curl(const Grid3& g, const VectorField& f, const DiffOptions& d) {
  VectorField out;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    out[i] = partial(g, f[k], j, d);
    axpy_field(out[i], -1.0, partial(g, f[j], k, d));
  }
  return out;
}

VectorField directional(const Grid3& g, const VectorField& f, const Vec3& u, const DiffOptions& d) {
  VectorField out(f.size());
  for (int a = 0; a < 3; ++a) {
    if (u[a] == 0) continue;
    for (int c = 0; c < 3; ++c) axpy_field(out[c], u[a], partial(g, f[c], a, d));
  }
  return out;
}

template <class T>
T time_derivative(const std::vector<T>& s, double dt, std::size_t k) {
  const std::size_t n = s.size();
  if (n < 2) throw Error("time derivative needs at least two slices");
  if (k >= n) throw Error("slice index out of range");
  T out = zero_like(s[0]);
  if (n == 2) {
    axpy_field(out, 1.0 / dt, s[1]);
    axpy_field(out, -1.0 / dt, s[0]);
  } else if (k > 0 && k + 1 < n) {
    axpy_field(out, 0.5 / dt, s[k + 1]);
    axpy_field(out, -0.5 / dt, s[k - 1]);
  } else {
    // One-sided second order, written in differences so equal slices give exactly zero.
    const bool head = k == 0;
    const T& a = head ? s[0] : s[n - 1];
    const T& b = head ? s[1] : s[n - 2];
    const T& c = head ? s[2] : s[n - 3];
    const double sign = head ? 1.0 : -1.0;
    T d1 = b, d2 = c;
    axpy_field(d1, -1.0, a);
    axpy_field(d2, -1.0, b);
    axpy_field(out, sign * 1.5 / dt, d1);
    axpy_field(out, -sign * 0.5 / dt, d2);
  }
  return out;
}

template RealField time_derivative(const std::vector<RealField>&, double, std::size_t);
template VectorField time_derivative(const std::vector<VectorField>&, double, std::size_t);
template ComplexField time_derivative(const std::vector<ComplexField>&, double, std::size_t);

// ---------------------------------------------------------------------------

FieldState fields_from_potentials(const PotentialState& p, const DiffOptions& d) {
  const std::size_t n = p.slices();
  if (n == 0 || p.A.size() != n) throw Error("potential state has inconsistent slices");
  if (n == 1 && !p.is_static) throw Error("dA/dt needs at least two slices for a nonstatic state");
  FieldState f;
  f.grid = p.grid;
  f.c = p.c;
  f.g = p.g;
  f.times = p.times;
  for (std::size_t k = 0; k < n; ++k) {
    VectorField E = gradient(p.grid, p.A0[k], d);
    if (n > 1) axpy_field(E, -1.0, time_derivative(p.A, p.dt(), k));
    f.E.push_back(std::move(E));
    f.B.push_back(curl(p.grid, p.A[k], d));
  }
  return f;
}

// ---------------------------------------------------------------------------

GaugeResult gauge_transform(const PotentialState& p, const GaugeFunction& lambda,
                            const WaveFunction* psi) {
  GaugeResult r{p, std::nullopt};
  const Grid3& G = p.grid;
  for (std::size_t s = 0; s < p.slices(); ++s) {
    const double t = p.times.empty() ? 0.0 : p.times[s];
    for (int i = 0; i < G.n[0]; ++i)
      for (int j = 0; j < G.n[1]; ++j)
        for (int k = 0; k < G.n[2]; ++k) {
          const std::size_t q = G.index(i, j, k);
          const Vec3 x = G.point(i, j, k);
          r.potentials.A0[s][q] += lambda.dt(x, t) / p.g;
          const Vec3 gl = lambda.grad(x, t) / p.g;
          for (int a = 0; a < 3; ++a) r.potentials.A[s][a][q] += gl[a];
        }
  }
  if (psi) {
    check_grid(psi->grid, G, "gauge_transform");
    WaveFunction w = *psi;
    for (int i = 0; i < G.n[0]; ++i)
      for (int j = 0; j < G.n[1]; ++j)
        for (int k = 0; k < G.n[2]; ++k) {
          const std::size_t q = G.index(i, j, k);
          w.samples[q] *= std::polar(1.0, -lambda.value(G.point(i, j, k), psi->t));
        }
    r.matter = std::move(w);
  }
  return r;
}

GaugeResult gauge_transform(const PotentialState& p, const std::vector<RealField>& lambda,
                            const WaveFunction* psi, const DiffOptions& d) {
  if (lambda.size() != p.slices()) throw MismatchError("gauge_transform: slice count mismatch");
  for (const auto& l : lambda)
    if (l.size() != p.grid.size()) throw MismatchError("gauge_transform: grid mismatch");
  if (lambda.size() == 1 && !p.is_static)
    throw Error("gauge_transform: a single slice needs a static state");
  GaugeResult r{p, std::nullopt};
  for (std::size_t s = 0; s < p.slices(); ++s) {
    if (lambda.size() > 1) axpy_field(r.potentials.A0[s], 1.0 / p.g, time_derivative(lambda, p.dt(), s));
    axpy_field(r.potentials.A[s], 1.0 / p.g, gradient(p.grid, lambda[s], d));
  }
  if (psi) {
    check_grid(psi->grid, p.grid, "gauge_transform");
    // psi is taken at the slice whose label matches psi.t, else the first slice.
    std::size_t s = 0;
    for (std::size_t k = 0; k < p.times.size(); ++k)
      if (p.times[k] == psi->t) s = k;
    WaveFunction w = *psi;
    for (std::size_t q = 0; q < w.samples.size(); ++q) w.samples[q] *= std::polar(1.0, -lambda[s][q]);
    r.matter = std::move(w);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Frame changes

namespace {

RealField resample_scalar(const Grid3& src, const RealField& f, const Grid3& dst,
                          const kernels::AffineMap& map, const TransformOptions& opt) {
  RealField out(dst.size());
  kernels::resample(src, f.data(), dst, map, opt.interp_order, opt.periodic, out.data());
  return out;
}

VectorField resample_vector(const Grid3& src, const VectorField& f, const Grid3& dst,
                            const kernels::AffineMap& map, const TransformOptions& opt) {
  VectorField out(dst.size());
  if (all_zero(f)) return out;
  for (int c = 0; c < 3; ++c) out[c] = resample_scalar(src, f[c], dst, map, opt);
  return out;
}

void rotate_in_place(VectorField& f, const Mat3& R) {
  for (std::size_t q = 0; q < f.size(); ++q) f.set(q, R * f.at(q));
}

void require_frame(const FrameChange& fc, Limit want, const char* op) {
  if (fc.limit != want)
    throw MismatchError(std::string(op) + " called with a " + to_string(fc.limit) + "-limit frame change");
  const Flavor need = want == Limit::electric ? Flavor::dual : Flavor::galilei;
  if (fc.g.flavor != need)
    throw MismatchError(std::string(op) + " needs a " + to_string(need) + " element");
}

kernels::AffineMap electric_map(const GroupElement& g) {
  const Mat3 Ri = g.R.inverse().matrix();
  return {Ri, -(Ri * g.a)};
}

kernels::AffineMap magnetic_map(const GroupElement& g, double t_new) {
  const Mat3 Ri = g.R.inverse().matrix();
  return {Ri, -(Ri * (g.v * t_new + g.a - g.b * g.v))};
}

template <class T>
bool slices_identical(const std::vector<T>& s) {
  for (std::size_t k = 1; k < s.size(); ++k)
    if (!(s[k] == s[0])) return false;
  return true;
}

bool slices_identical(const std::vector<VectorField>& s) {
  for (std::size_t k = 1; k < s.size(); ++k)
    for (int c = 0; c < 3; ++c)
      if (s[k][c] != s[0][c]) return false;
  return true;
}

}  // namespace

FieldState electric_limit_transform(const FieldState& f, const FrameChange& fc,
                                    const TransformOptions& opt) {
  require_frame(fc, Limit::electric, "electric_limit_transform");
  if (!slices_identical(f.E) || !slices_identical(f.B))
    throw DomainError("electric_limit_transform needs a static field state");
  const Grid3 dst = opt.target.value_or(f.grid);
  const auto map = electric_map(fc.g);
  const Mat3 R = fc.g.R.matrix();
  const Vec3 bc = fc.g.beta() / fc.g.c;
  FieldState out;
  out.grid = dst;
  out.c = f.c;
  out.g = f.g;
  out.times = f.times;
  VectorField E = resample_vector(f.grid, f.E.at(0), dst, map, opt);
  VectorField B = resample_vector(f.grid, f.B.at(0), dst, map, opt);
  rotate_in_place(E, R);
  rotate_in_place(B, R);
  for (std::size_t q = 0; q < dst.size(); ++q) B.set(q, B.at(q) + cross(bc, E.at(q)));
  for (std::size_t k = 0; k < f.slices(); ++k) {
    out.E.push_back(E);
    out.B.push_back(B);
  }
  return out;
}

FieldState magnetic_limit_transform(const FieldState& f, const FrameChange& fc,
                                    const TransformOptions& opt) {
  require_frame(fc, Limit::magnetic, "magnetic_limit_transform");
  const Grid3 dst = opt.target.value_or(f.grid);
  const Mat3 R = fc.g.R.matrix();
  FieldState out;
  out.grid = dst;
  out.c = f.c;
  out.g = f.g;
  for (std::size_t k = 0; k < f.slices(); ++k) {
    const double t_new = (f.times.empty() ? 0.0 : f.times[k]) + fc.g.b;
    const auto map = magnetic_map(fc.g, t_new);
    VectorField E = resample_vector(f.grid, f.E[k], dst, map, opt);
    VectorField B = resample_vector(f.grid, f.B[k], dst, map, opt);
    rotate_in_place(E, R);
    rotate_in_place(B, R);
    for (std::size_t q = 0; q < dst.size(); ++q) E.set(q, E.at(q) - cross(fc.g.v, B.at(q)));
    out.times.push_back(t_new);
    out.E.push_back(std::move(E));
    out.B.push_back(std::move(B));
  }
  return out;
}

PotentialState potential_transform(const PotentialState& p, const FrameChange& fc,
                                   const TransformOptions& opt) {
  const Limit lim = fc.limit;
  require_frame(fc, lim, "potential_transform");
  const Grid3 dst = opt.target.value_or(p.grid);
  const Mat3 R = fc.g.R.matrix();
  const Vec3 v = fc.g.v;
  const double c = fc.g.c;
  PotentialState out;
  out.grid = dst;
  out.c = p.c;
  out.g = p.g;
  out.is_static = p.is_static;
  for (std::size_t k = 0; k < p.slices(); ++k) {
    const double t = p.times.empty() ? 0.0 : p.times[k];
    const double t_new = lim == Limit::electric ? t : t + fc.g.b;
    const auto map = lim == Limit::electric ? electric_map(fc.g) : magnetic_map(fc.g, t_new);
    RealField A0 = resample_scalar(p.grid, p.A0[k], dst, map, opt);
    VectorField A = resample_vector(p.grid, p.A[k], dst, map, opt);
    rotate_in_place(A, R);
    if (lim == Limit::electric) {
      for (int a = 0; a < 3; ++a) axpy_field(A[a], v[a] / (c * c), A0);
    } else {
      for (int a = 0; a < 3; ++a) axpy_field(A0, -v[a], A[a]);
    }
    out.times.push_back(t_new);
    out.A0.push_back(std::move(A0));
    out.A.push_back(std::move(A));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sources

SourceState charge_density_dual(const WaveFunction& psi, double g, const std::vector<double>& times) {
  if (psi.rep != RepKind::dual || psi.basis != Basis::position)
    throw MismatchError("charge_density_dual needs a dual position-basis state");
  RealField rho(psi.samples.size());
  for (std::size_t q = 0; q < rho.size(); ++q) rho[q] = -g * std::norm(psi.samples[q]);
  SourceState s;
  s.grid = psi.grid;
  s.times = times;
  for (std::size_t k = 0; k < times.size(); ++k) {
    s.rho.push_back(rho);
    s.j.emplace_back(rho.size());
  }
  return s;
}

SourceState charge_current_galilei(const std::vector<WaveFunction>& psi, const PotentialState& p,
                                   const DiffOptions& d) {
  if (psi.empty()) throw Error("charge_current_galilei needs at least one time slice");
  if (p.slices() != 1 && p.slices() != psi.size())
    throw MismatchError("charge_current_galilei: potential and matter slice counts differ");
  SourceState s;
  s.grid = psi[0].grid;
  check_grid(p.grid, s.grid, "charge_current_galilei");
  const double g = p.g;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const WaveFunction& w = psi[k];
    if (w.rep != RepKind::galilei || w.basis != Basis::position)
      throw MismatchError("charge_current_galilei needs galilei position-basis states");
    check_grid(w.grid, s.grid, "charge_current_galilei");
    const double m = w.invariant;
    const VectorField& A = p.A[p.slices() == 1 ? 0 : k];
    RealField rho(w.samples.size());
    VectorField j(w.samples.size());
    for (std::size_t q = 0; q < rho.size(); ++q) rho[q] = -g * std::norm(w.samples[q]);
    for (int a = 0; a < 3; ++a) {
      const ComplexField dpsi = partial_c(s.grid, w.samples, a, d);
      for (std::size_t q = 0; q < rho.size(); ++q) {
        const double cur = (std::conj(w.samples[q]) * dpsi[q]).imag();
        j[a][q] = -(g / m) * (cur + g * A[a][q] * std::norm(w.samples[q]));
      }
    }
    s.times.push_back(w.t);
    s.rho.push_back(std::move(rho));
    s.j.push_back(std::move(j));
  }
  return s;
}

RealField continuity_residual(const SourceState& s, std::size_t k, const DiffOptions& d) {
  RealField r = divergence(s.grid, s.j.at(k), d);
  if (s.slices() > 1) axpy_field(r, 1.0, time_derivative(s.rho, s.times[1] - s.times[0], k));
  return r;
}

// ---------------------------------------------------------------------------
// Residuals

std::array<double, 4> MaxwellResidual::max_norms(const Grid3& g, const IndexBox& box) const {
  return {max_abs(g, div_B, box), max_abs(g, faraday, box), max_abs(g, gauss, box),
          max_abs(g, ampere, box)};
}

MaxwellResidual maxwell_residual(const Grid3& grid, double c, double g, const VectorField& E,
                                 const VectorField& B, const VectorField& dEdt,
                                 const VectorField& dBdt, const RealField& rho, const VectorField& j,
                                 const DiffOptions& d) {
  MaxwellResidual r;
  const double k = c / (g * g);
  r.div_B = divergence(grid, B, d);
  r.faraday = curl(grid, E, d);
  axpy_field(r.faraday, 1.0, dBdt);
  r.gauss = divergence(grid, E, d);
  axpy_field(r.gauss, -k, rho);
  r.ampere = curl(grid, B, d);
  for (int a = 0; a < 3; ++a)
    for (auto& x : r.ampere[a]) x *= c * c;
  axpy_field(r.ampere, -1.0, dEdt);
  if (j.size() == E.size()) axpy_field(r.ampere, -k, j);
  return r;
}

MaxwellResidual maxwell_residual(const FieldState& f, const SourceState& s, Limit limit,
                                 const DiffOptions& d, std::optional<std::size_t> slice) {
  (void)limit;
  check_grid(f.grid, s.grid, "maxwell_residual");
  const std::size_t n = f.slices();
  if (n == 0 || s.slices() == 0) throw Error("maxwell_residual: empty state");
  const std::size_t k = slice.value_or(n / 2);
  const std::size_t ks = s.slices() == 1 ? 0 : k;
  VectorField dE(f.grid.size()), dB(f.grid.size());
  if (n > 1) {
    dE = time_derivative(f.E, f.dt(), k);
    dB = time_derivative(f.B, f.dt(), k);
  }
  const VectorField j = s.j.size() > ks ? s.j[ks] : VectorField(f.grid.size());
  return maxwell_residual(f.grid, f.c, f.g, f.E[k], f.B[k], dE, dB, s.rho[ks], j, d);
}

ComplexField matter_residual(const std::vector<WaveFunction>& psi, const PotentialState& p,
                             Limit limit, std::size_t k, const DiffOptions& d) {
  if (psi.size() < 2) throw Error("matter_residual needs at least two time slices");
  if (p.slices() != 1 && p.slices() != psi.size())
    throw MismatchError("matter_residual: potential and matter slice counts differ");
  const Grid3& G = psi[0].grid;
  check_grid(p.grid, G, "matter_residual");
  std::vector<ComplexField> samples;
  for (const auto& w : psi) samples.push_back(w.samples);
  const double dt = psi[1].t - psi[0].t;
  ComplexField r = time_derivative(samples, dt, k);
  const std::size_t kp = p.slices() == 1 ? 0 : k;
  const ComplexField& f = samples[k];
  const double g = p.g;
  const cplx I(0.0, 1.0);
  for (std::size_t q = 0; q < r.size(); ++q) r[q] = I * (r[q] + I * g * p.A0[kp][q] * f[q]);
  if (limit == Limit::electric) {
    const double E = psi[k].invariant;
    for (std::size_t q = 0; q < r.size(); ++q) r[q] -= E * f[q];
  } else {
    const double m = psi[k].invariant;
    const VectorField& A = p.A[kp];
    for (int a = 0; a < 3; ++a) {
      ComplexField D = partial_c(G, f, a, d);
      for (std::size_t q = 0; q < D.size(); ++q) D[q] += I * g * A[a][q] * f[q];
      const ComplexField dD = partial_c(G, D, a, d);
      for (std::size_t q = 0; q < r.size(); ++q) r[q] += (dD[q] + I * g * A[a][q] * D[q]) / (2 * m);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

CovarianceReport covariance_verify(const FieldState& f, const SourceState& s, const FrameChange& fc,
                                   double tau, const CovarianceOptions& opt) {
  require_frame(fc, Limit::electric, "covariance_verify");
  if (!slices_identical(f.E) || !slices_identical(f.B) || !slices_identical(s.rho))
    throw DomainError("covariance_verify needs a static electric-limit state");
  check_grid(f.grid, s.grid, "covariance_verify");
  const Grid3& G = f.grid;
  const GroupElement& g = fc.g;
  const Vec3 ext = G.extent();
  const double hw = opt.half_width > 0 ? opt.half_width
                                       : 0.9 * std::min({ext[0], ext[1], ext[2]}) / (2 * std::sqrt(3.0));

  CovarianceReport rep;
  const VectorField zero(G.size());
  const VectorField j0 = s.j.empty() ? zero : s.j[0];
  {
    const auto r = maxwell_residual(G, f.c, f.g, f.E[0], f.B[0], zero, zero, s.rho[0], j0, opt.diff);
    rep.rest = r.max_norms(G, IndexBox::around(G, opt.center, hw));
  }
  const double rest_max = *std::max_element(rep.rest.begin(), rep.rest.end());
  if (rest_max > tau) {
    rep.precondition_ok = false;
    rep.note = "rest-frame residual " + std::to_string(rest_max) + " exceeds tolerance " +
               std::to_string(tau);
  }

  // Moved-frame sub-grid around the image of the centre, with a stencil margin.
  const Vec3 c_new = g.R.matrix() * opt.center + g.a;
  Grid3 sub;
  for (int a = 0; a < 3; ++a) {
    const int m = int(std::ceil(hw / G.h[a] - 1e-9)) + 3;
    sub.n[a] = 2 * m + 1;
    sub.h[a] = G.h[a];
    sub.origin[a] = c_new[a] - m * G.h[a];
  }
  TransformOptions topt;
  topt.interp_order = opt.interp_order;
  topt.target = sub;
  topt.periodic = opt.diff.periodic;
  const auto map = electric_map(g);
  const Mat3 R = g.R.matrix();
  const Vec3 bc = g.beta() / g.c;

  VectorField E = resample_vector(G, f.E[0], sub, map, topt);
  VectorField B = resample_vector(G, f.B[0], sub, map, topt);
  rotate_in_place(E, R);
  rotate_in_place(B, R);
  for (std::size_t q = 0; q < sub.size(); ++q) B.set(q, B.at(q) + cross(bc, E.at(q)));
  const RealField rho = resample_scalar(G, s.rho[0], sub, map, topt);
  VectorField j = resample_vector(G, j0, sub, map, topt);
  rotate_in_place(j, R);
  for (int a = 0; a < 3; ++a) axpy_field(j[a], g.v[a], rho);

  const DiffOptions dsub{opt.diff.stencil == Stencil::spectral ? Stencil::fd4 : opt.diff.stencil, false};
  VectorField dE(sub.size()), dB(sub.size());
  if (opt.rule != CovarianceRule::dual_static) {
    dE = directional(sub, E, -g.v, dsub);
    if (opt.rule == CovarianceRule::galilei_convective) dB = directional(sub, B, -g.v, dsub);
  }
  const IndexBox box = IndexBox::around(sub, c_new, hw);
  const auto r = maxwell_residual(sub, f.c, f.g, E, B, dE, dB, rho, j, dsub);
  rep.moved = r.max_norms(sub, box);
  rep.inflation = *std::max_element(rep.moved.begin(), rep.moved.end()) / std::max(rest_max, opt.floor);

  // Fraction of checked points whose source lies outside the rest grid.
  const Vec3 lo = G.origin, hi = G.origin + G.extent() - G.h;
  std::size_t out = 0, total = 0;
  for (int i = box.lo[0]; i < box.hi[0]; ++i)
    for (int jj = box.lo[1]; jj < box.hi[1]; ++jj)
      for (int k = box.lo[2]; k < box.hi[2]; ++k) {
        const Vec3 x = map.A * sub.point(i, jj, k) + map.b;
        ++total;
        if ((x.array() < lo.array()).any() || (x.array() > hi.array()).any()) ++out;
      }
  rep.leakage = total ? double(out) / double(total) : 0.0;
  return rep;
}

}  // namespace galdual
