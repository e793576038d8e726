#pragma once

#include <cstddef>

#include "galdual/grid.hpp"

/// Grid kernels in two builds: `serial` is the plain reference loop nest kept
/// for testing, `parallel` splits the outer loops across OpenMP threads.
/// Per-point kernels agree bitwise; reductions agree to rounding.
namespace galdual::kernels {

enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec e);
int max_threads();

/// Resampling map for `resample`: source point = A * x + b for every
/// destination point x.
struct AffineMap {
  Mat3 A = Mat3::Identity();
  Vec3 b = Vec3::Zero();
};

#define GALDUAL_KERNEL_DECLS                                                                   \
  /* Central first derivative along `axis` (order 2 or 4). Non-periodic edges fall back */     \
  /* to one-sided second-order formulas. */                                                    \
  void derivative(const Grid3& g, const double* f, double* out, int axis, int order,           \
                  bool periodic);                                                              \
  void derivative(const Grid3& g, const cplx* f, cplx* out, int axis, int order, bool periodic); \
  /* 7-point Laplacian; outside the grid the field is zero unless periodic. */                \
  void laplacian7(const Grid3& g, const double* f, double* out, bool periodic);                \
  double dot(const double* x, const double* y, std::size_t n);                                 \
  void axpy(double alpha, const double* x, double* y, std::size_t n);                          \
  /* Lagrange interpolation with `order` nodes per axis (2, 4 or 6). Off-grid points */        \
  /* are zero unless periodic; near edges the stencil is shifted inward. */                    \
  void resample(const Grid3& src, const double* f, const Grid3& dst, const AffineMap& map,     \
                int order, bool periodic, double* out);                                        \
  void resample(const Grid3& src, const cplx* f, const Grid3& dst, const AffineMap& map,       \
                int order, bool periodic, cplx* out);

namespace serial {
GALDUAL_KERNEL_DECLS
}
namespace parallel {
GALDUAL_KERNEL_DECLS
}
#undef GALDUAL_KERNEL_DECLS

template <class T>
void derivative(const Grid3& g, const T* f, T* out, int axis, int order, bool periodic) {
  if (default_exec() == Exec::serial)
    serial::derivative(g, f, out, axis, order, periodic);
  else
    parallel::derivative(g, f, out, axis, order, periodic);
}

inline void laplacian7(const Grid3& g, const double* f, double* out, bool periodic) {
  if (default_exec() == Exec::serial)
    serial::laplacian7(g, f, out, periodic);
  else
    parallel::laplacian7(g, f, out, periodic);
}

inline double dot(const double* x, const double* y, std::size_t n) {
  return default_exec() == Exec::serial ? serial::dot(x, y, n) : parallel::dot(x, y, n);
}

inline void axpy(double alpha, const double* x, double* y, std::size_t n) {
  if (default_exec() == Exec::serial)
    serial::axpy(alpha, x, y, n);
  else
    parallel::axpy(alpha, x, y, n);
}

template <class T>
void resample(const Grid3& src, const T* f, const Grid3& dst, const AffineMap& map, int order,
              bool periodic, T* out) {
  if (default_exec() == Exec::serial)
    serial::resample(src, f, dst, map, order, periodic, out);
  else
    parallel::resample(src, f, dst, map, order, periodic, out);
}

/// Lagrange weights for `order` nodes starting at integer `base`, at coordinate u.
void lagrange_weights(double u, int base, int order, double* w);

}  // namespace galdual::kernels
