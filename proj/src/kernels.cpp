#include "galdual/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>

namespace galdual::kernels {

namespace {

std::atomic<Exec> g_exec{Exec::parallel};

inline int wrap(int i, int n) {
  i %= n;
  return i < 0 ? i + n : i;
}

template <class T>
inline T point_derivative(const T* f, int i, int n, std::size_t stride, double h, int order,
                          bool periodic) {
  if (n == 1) return T(0);
  auto at = [&](int m) { return f[std::size_t(periodic ? wrap(m, n) : m) * stride]; };
  const int r = order == 4 ? 2 : 1;
  if (periodic || (i - r >= 0 && i + r < n)) {
    if (order == 4) return (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2)) / (12.0 * h);
    return (at(i + 1) - at(i - 1)) / (2.0 * h);
  }
  if (n == 2) return (at(1) - at(0)) / h;
  if (i == 0) return (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * h);
  if (i == n - 1) return (3.0 * at(n - 1) - 4.0 * at(n - 2) + at(n - 3)) / (2.0 * h);
  return (at(i + 1) - at(i - 1)) / (2.0 * h);
}

template <class T>
inline void derivative_line(const Grid3& g, const T* f, T* out, int axis, int order, bool periodic,
                            int i, int j) {
  // (i, j) index the two axes other than `axis`; the line runs along `axis`.
  const std::size_t strides[3] = {std::size_t(g.n[1]) * g.n[2], std::size_t(g.n[2]), 1};
  const int a1 = axis == 0 ? 1 : 0;
  const int a2 = axis == 2 ? 1 : 2;
  const std::size_t base = i * strides[a1] + j * strides[a2];
  const int n = g.n[axis];
  for (int m = 0; m < n; ++m)
    out[base + m * strides[axis]] =
        point_derivative(f + base, m, n, strides[axis], g.h[axis], order, periodic);
}

inline double laplacian_point(const Grid3& g, const double* f, int i, int j, int k, bool periodic) {
  const int idx[3] = {i, j, k};
  const double c = f[g.index(i, j, k)];
  double s = 0;
  for (int a = 0; a < 3; ++a) {
    if (g.n[a] == 1) continue;
    double nb[2];
    for (int d = 0; d < 2; ++d) {
      int q[3] = {idx[0], idx[1], idx[2]};
      q[a] += d == 0 ? -1 : 1;
      if (q[a] < 0 || q[a] >= g.n[a]) {
        if (!periodic) {
          nb[d] = 0.0;
          continue;
        }
        q[a] = wrap(q[a], g.n[a]);
      }
      nb[d] = f[g.index(q[0], q[1], q[2])];
    }
    s += (nb[0] - 2.0 * c + nb[1]) / (g.h[a] * g.h[a]);
  }
  return s;
}

struct AxisStencil {
  int idx[6];
  double w[6];
  int count;
  bool outside;
};

inline AxisStencil axis_stencil(double u, int n, int order, bool periodic) {
  AxisStencil s{};
  if (n == 1) {
    s.idx[0] = 0;
    s.w[0] = 1.0;
    s.count = 1;
    return s;
  }
  const double eps = 1e-9;
  if (!periodic && (u < -eps || u > n - 1 + eps)) {
    s.outside = true;
    return s;
  }
  const int p = std::min(order, periodic ? order : n);
  int base = static_cast<int>(std::floor(u)) - (p / 2 - 1);
  if (!periodic) base = std::clamp(base, 0, n - p);
  lagrange_weights(u, base, p, s.w);
  for (int m = 0; m < p; ++m) s.idx[m] = periodic ? wrap(base + m, n) : base + m;
  s.count = p;
  return s;
}

template <class T>
inline T resample_point(const Grid3& src, const T* f, const Vec3& y, int order, bool periodic) {
  AxisStencil st[3];
  for (int a = 0; a < 3; ++a) {
    st[a] = axis_stencil((y[a] - src.origin[a]) / src.h[a], src.n[a], order, periodic);
    if (st[a].outside) return T(0);
  }
  T acc(0);
  for (int p = 0; p < st[0].count; ++p) {
    T acc1(0);
    for (int q = 0; q < st[1].count; ++q) {
      T acc2(0);
      const std::size_t row = src.index(st[0].idx[p], st[1].idx[q], 0);
      for (int r = 0; r < st[2].count; ++r) acc2 += st[2].w[r] * f[row + st[2].idx[r]];
      acc1 += st[1].w[q] * acc2;
    }
    acc += st[0].w[p] * acc1;
  }
  return acc;
}

void check_order(int order) {
  if (order != 2 && order != 4 && order != 6) throw Error("stencil order must be 2, 4 or 6");
}

template <class T>
void derivative_serial(const Grid3& g, const T* f, T* out, int axis, int order, bool periodic) {
  if (order != 2 && order != 4) throw Error("derivative order must be 2 or 4");
  const int a1 = axis == 0 ? 1 : 0;
  const int a2 = axis == 2 ? 1 : 2;
  for (int i = 0; i < g.n[a1]; ++i)
    for (int j = 0; j < g.n[a2]; ++j) derivative_line(g, f, out, axis, order, periodic, i, j);
}

template <class T>
void derivative_parallel(const Grid3& g, const T* f, T* out, int axis, int order, bool periodic) {
  if (order != 2 && order != 4) throw Error("derivative order must be 2 or 4");
  const int a1 = axis == 0 ? 1 : 0;
  const int a2 = axis == 2 ? 1 : 2;
  const int n1 = g.n[a1], n2 = g.n[a2];
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) derivative_line(g, f, out, axis, order, periodic, i, j);
}

template <class T>
void resample_serial(const Grid3& src, const T* f, const Grid3& dst, const AffineMap& map,
                     int order, bool periodic, T* out) {
  check_order(order);
  for (int i = 0; i < dst.n[0]; ++i)
    for (int j = 0; j < dst.n[1]; ++j)
      for (int k = 0; k < dst.n[2]; ++k) {
        const Vec3 y = map.A * dst.point(i, j, k) + map.b;
        out[dst.index(i, j, k)] = resample_point(src, f, y, order, periodic);
      }
}

template <class T>
void resample_parallel(const Grid3& src, const T* f, const Grid3& dst, const AffineMap& map,
                       int order, bool periodic, T* out) {
  check_order(order);
  const int n0 = dst.n[0], n1 = dst.n[1], n2 = dst.n[2];
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j)
      for (int k = 0; k < n2; ++k) {
        const Vec3 y = map.A * dst.point(i, j, k) + map.b;
        out[dst.index(i, j, k)] = resample_point(src, f, y, order, periodic);
      }
}

}  // namespace

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec e) { g_exec.store(e); }
int max_threads() { return omp_get_max_threads(); }

void lagrange_weights(double u, int base, int order, double* w) {
  for (int m = 0; m < order; ++m) {
    double num = 1.0, den = 1.0;
    for (int l = 0; l < order; ++l) {
      if (l == m) continue;
      num *= u - (base + l);
      den *= double(m - l);
    }
    w[m] = num / den;
  }
}

namespace serial {

void derivative(const Grid3& g, const double* f, double* out, int axis, int order, bool periodic) {
  derivative_serial(g, f, out, axis, order, periodic);
}
void derivative(const Grid3& g, const cplx* f, cplx* out, int axis, int order, bool periodic) {
  derivative_serial(g, f, out, axis, order, periodic);
}

void laplacian7(const Grid3& g, const double* f, double* out, bool periodic) {
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) out[g.index(i, j, k)] = laplacian_point(g, f, i, j, k, periodic);
}

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0;
  for (std::size_t q = 0; q < n; ++q) s += x[q] * y[q];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t q = 0; q < n; ++q) y[q] += alpha * x[q];
}

void resample(const Grid3& src, const double* f, const Grid3& dst, const AffineMap& map, int order,
              bool periodic, double* out) {
  resample_serial(src, f, dst, map, order, periodic, out);
}
void resample(const Grid3& src, const cplx* f, const Grid3& dst, const AffineMap& map, int order,
              bool periodic, cplx* out) {
  resample_serial(src, f, dst, map, order, periodic, out);
}

}  // namespace serial

namespace parallel {

void derivative(const Grid3& g, const double* f, double* out, int axis, int order, bool periodic) {
  derivative_parallel(g, f, out, axis, order, periodic);
}
void derivative(const Grid3& g, const cplx* f, cplx* out, int axis, int order, bool periodic) {
  derivative_parallel(g, f, out, axis, order, periodic);
}

void laplacian7(const Grid3& g, const double* f, double* out, bool periodic) {
  const int n0 = g.n[0], n1 = g.n[1], n2 = g.n[2];
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j)
      for (int k = 0; k < n2; ++k) out[g.index(i, j, k)] = laplacian_point(g, f, i, j, k, periodic);
}

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0;
  const auto m = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for reduction(+ : s) schedule(static)
  for (std::ptrdiff_t q = 0; q < m; ++q) s += x[q] * y[q];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const auto m = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t q = 0; q < m; ++q) y[q] += alpha * x[q];
}

void resample(const Grid3& src, const double* f, const Grid3& dst, const AffineMap& map, int order,
              bool periodic, double* out) {
  resample_parallel(src, f, dst, map, order, periodic, out);
}
void resample(const Grid3& src, const cplx* f, const Grid3& dst, const AffineMap& map, int order,
              bool periodic, cplx* out) {
  resample_parallel(src, f, dst, map, order, periodic, out);
}

}  // namespace parallel

}  // namespace galdual::kernels
