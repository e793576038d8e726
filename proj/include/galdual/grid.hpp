#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "galdual/types.hpp"

namespace galdual {

/// Uniform 3D grid. Point (i, j, k) sits at origin + (i, j, k) * h; storage is
/// row-major with k fastest.
struct Grid3 {
  std::array<int, 3> n{0, 0, 0};
  Vec3 h = Vec3::Ones();
  Vec3 origin = Vec3::Zero();

  /// n^3 points of spacing extent/n, with x_j = (j - n/2) h on every axis.
  static Grid3 centered(int n, double extent);
  static Grid3 centered(const std::array<int, 3>& n, const Vec3& extent);

  std::size_t size() const { return std::size_t(n[0]) * n[1] * n[2]; }
  std::size_t index(int i, int j, int k) const {
    return (std::size_t(i) * n[1] + j) * n[2] + k;
  }
  Vec3 point(int i, int j, int k) const {
    return origin + Vec3(i * h.x(), j * h.y(), k * h.z());
  }
  Vec3 extent() const { return Vec3(n[0] * h.x(), n[1] * h.y(), n[2] * h.z()); }
  double cell_volume() const { return h.x() * h.y() * h.z(); }
  /// Reciprocal grid of the centered discrete Fourier transform.
  Grid3 reciprocal() const;

  bool operator==(const Grid3& o) const { return n == o.n && h == o.h && origin == o.origin; }
  bool operator!=(const Grid3& o) const { return !(*this == o); }
};

using RealField = std::vector<double>;
using ComplexField = std::vector<cplx>;

struct VectorField {
  std::array<RealField, 3> c;

  VectorField() = default;
  explicit VectorField(std::size_t n) : c{RealField(n, 0.0), RealField(n, 0.0), RealField(n, 0.0)} {}
  RealField& operator[](int i) { return c[i]; }
  const RealField& operator[](int i) const { return c[i]; }
  std::size_t size() const { return c[0].size(); }
  Vec3 at(std::size_t q) const { return Vec3(c[0][q], c[1][q], c[2][q]); }
  void set(std::size_t q, const Vec3& v) {
    c[0][q] = v.x();
    c[1][q] = v.y();
    c[2][q] = v.z();
  }
};

template <class F>
RealField sample_real(const Grid3& g, F&& f) {
  RealField out(g.size());
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) out[g.index(i, j, k)] = f(g.point(i, j, k));
  return out;
}

template <class F>
ComplexField sample_complex(const Grid3& g, F&& f) {
  ComplexField out(g.size());
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) out[g.index(i, j, k)] = f(g.point(i, j, k));
  return out;
}

template <class F>
VectorField sample_vector(const Grid3& g, F&& f) {
  VectorField out(g.size());
  for (int i = 0; i < g.n[0]; ++i)
    for (int j = 0; j < g.n[1]; ++j)
      for (int k = 0; k < g.n[2]; ++k) out.set(g.index(i, j, k), f(g.point(i, j, k)));
  return out;
}

/// Interior box: indices at least `margin` cells from every face.
struct IndexBox {
  std::array<int, 3> lo{0, 0, 0};
  std::array<int, 3> hi{0, 0, 0};  // exclusive
  static IndexBox interior(const Grid3& g, int margin);
  /// Points whose coordinates lie within |x_i - center_i| <= half_width.
  static IndexBox around(const Grid3& g, const Vec3& center, double half_width);
  bool empty() const { return lo[0] >= hi[0] || lo[1] >= hi[1] || lo[2] >= hi[2]; }
};

double max_abs(const Grid3& g, const RealField& f, const IndexBox& box);
double max_abs(const Grid3& g, const VectorField& f, const IndexBox& box);

/// Discrete L2 norm squared, sum |f|^2 dV.
double norm2(const Grid3& g, const ComplexField& f);
/// Discrete L2 norm of the difference, sqrt(sum |f - h|^2 dV).
double l2_distance(const Grid3& g, const ComplexField& f, const ComplexField& h);

}  // namespace galdual
