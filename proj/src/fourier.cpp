#include "galdual/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace galdual::fourier {

namespace {

std::mutex g_plan_mutex;

fftw_plan plan_for(const Grid3& g, int sign) {
  static std::map<std::tuple<int, int, int, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  const auto key = std::make_tuple(g.n[0], g.n[1], g.n[2], sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  fftw_complex* scratch = fftw_alloc_complex(g.size());
  fftw_plan p = fftw_plan_dft_3d(g.n[0], g.n[1], g.n[2], scratch, scratch,
                                 sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(scratch);
  if (!p) throw Error("FFTW planning failed");
  cache.emplace(key, p);
  return p;
}

// Per-axis phase tables e^{i s * q_a[j] * y_a[j]}-style products are separable, so
// they are built as three 1D arrays and multiplied in.
void multiply_separable(const Grid3& g, ComplexField& f, const std::array<std::vector<cplx>, 3>& ph) {
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j) {
      const cplx pij = ph[0][i] * ph[1][j];
      for (int k = 0; k < g.n[2]; ++k) f[g.index(i, j, k)] *= pij * ph[2][k];
    }
}

}  // namespace

void fft3(const Grid3& g, ComplexField& data, int sign) {
  if (data.size() != g.size()) throw MismatchError("field size does not match grid");
  fftw_plan p = plan_for(g, sign);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p, ptr, ptr);
}

std::vector<double> wavenumbers(int n, double h) {
  std::vector<double> k(n);
  const double dk = 2.0 * kPi / (n * h);
  for (int j = 0; j < n; ++j) k[j] = dk * (j <= (n - 1) / 2 ? j : j - n);
  return k;
}

ComplexField to_momentum(const Grid3& g, const ComplexField& psi) {
  const Grid3 pg = g.reciprocal();
  ComplexField f = psi;
  std::array<std::vector<cplx>, 3> pre, post;
  for (int a = 0; a < 3; ++a) {
    const double scale = g.h[a] / std::sqrt(2.0 * kPi);
    pre[a].resize(g.n[a]);
    post[a].resize(g.n[a]);
    for (int j = 0; j < g.n[a]; ++j) {
      pre[a][j] = std::polar(1.0, -pg.origin[a] * j * g.h[a]);
      const double pk = pg.origin[a] + j * pg.h[a];
      post[a][j] = std::polar(scale, -pk * g.origin[a]);
    }
  }
  multiply_separable(g, f, pre);
  fft3(g, f, -1);
  multiply_separable(g, f, post);
  return f;
}

ComplexField to_position(const Grid3& g, const ComplexField& phi) {
  const Grid3 pg = g.reciprocal();
  ComplexField f = phi;
  std::array<std::vector<cplx>, 3> pre, post;
  for (int a = 0; a < 3; ++a) {
    const double scale = pg.h[a] / std::sqrt(2.0 * kPi);
    pre[a].resize(g.n[a]);
    post[a].resize(g.n[a]);
    for (int j = 0; j < g.n[a]; ++j) {
      pre[a][j] = std::polar(1.0, j * pg.h[a] * g.origin[a]);
      const double xj = g.origin[a] + j * g.h[a];
      post[a][j] = std::polar(scale, pg.origin[a] * xj);
    }
  }
  multiply_separable(g, f, pre);
  fft3(g, f, +1);
  multiply_separable(g, f, post);
  return f;
}

ComplexField apply_multiplier(const Grid3& g, const ComplexField& f,
                              const std::function<cplx(const Vec3&)>& m) {
  ComplexField s = f;
  fft3(g, s, -1);
  const auto k0 = wavenumbers(g.n[0], g.h[0]);
  const auto k1 = wavenumbers(g.n[1], g.h[1]);
  const auto k2 = wavenumbers(g.n[2], g.h[2]);
  const double inv = 1.0 / static_cast<double>(g.size());
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) s[g.index(i, j, k)] *= m(Vec3(k0[i], k1[j], k2[k])) * inv;
  fft3(g, s, +1);
  return s;
}

ComplexField spectral_derivative(const Grid3& g, const ComplexField& f, int axis) {
  const int n = g.n[axis];
  const double nyq = (n % 2 == 0) ? 2.0 * kPi / (n * g.h[axis]) * (n / 2) : -1.0;
  return apply_multiplier(g, f, [&](const Vec3& k) {
    const double ka = k[axis];
    if (std::abs(std::abs(ka) - nyq) < 1e-12 * nyq) return cplx(0.0);
    return cplx(0.0, ka);
  });
}

RealField spectral_derivative(const Grid3& g, const RealField& f, int axis) {
  ComplexField c(f.begin(), f.end());
  c = spectral_derivative(g, c, axis);
  RealField out(f.size());
  for (std::size_t q = 0; q < f.size(); ++q) out[q] = c[q].real();
  return out;
}

ComplexField fourier_shift(const Grid3& g, const ComplexField& f, const Vec3& s) {
  return apply_multiplier(g, f, [&](const Vec3& k) { return std::polar(1.0, -k.dot(s)); });
}

RealField fourier_shift(const Grid3& g, const RealField& f, const Vec3& s) {
  ComplexField c(f.begin(), f.end());
  c = fourier_shift(g, c, s);
  RealField out(f.size());
  for (std::size_t q = 0; q < f.size(); ++q) out[q] = c[q].real();
  return out;
}

}  // namespace galdual::fourier
