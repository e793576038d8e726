#include "galdual/grid.hpp"

#include <algorithm>
#include <cmath>

namespace galdual {

Grid3 Grid3::centered(int n, double extent) { return centered({n, n, n}, Vec3::Constant(extent)); }

Grid3 Grid3::centered(const std::array<int, 3>& n, const Vec3& extent) {
  Grid3 g;
  g.n = n;
  for (int a = 0; a < 3; ++a) {
    if (n[a] < 1) throw Error("grid dimensions must be positive");
    g.h[a] = extent[a] / n[a];
    g.origin[a] = -(n[a] / 2) * g.h[a];
  }
  return g;
}

Grid3 Grid3::reciprocal() const {
  Grid3 r;
  r.n = n;
  for (int a = 0; a < 3; ++a) {
    r.h[a] = 2.0 * kPi / (n[a] * h[a]);
    r.origin[a] = -(n[a] / 2) * r.h[a];
  }
  return r;
}

IndexBox IndexBox::interior(const Grid3& g, int margin) {
  IndexBox b;
  for (int a = 0; a < 3; ++a) {
    b.lo[a] = margin;
    b.hi[a] = g.n[a] - margin;
  }
  return b;
}

IndexBox IndexBox::around(const Grid3& g, const Vec3& center, double half_width) {
  IndexBox b;
  for (int a = 0; a < 3; ++a) {
    const double lo = (center[a] - half_width - g.origin[a]) / g.h[a];
    const double hi = (center[a] + half_width - g.origin[a]) / g.h[a];
    b.lo[a] = std::max(0, static_cast<int>(std::ceil(lo - 1e-9)));
    b.hi[a] = std::min(g.n[a], static_cast<int>(std::floor(hi + 1e-9)) + 1);
  }
  return b;
}

double max_abs(const Grid3& g, const RealField& f, const IndexBox& box) {
  double m = 0;
  for (int i = box.lo[0]; i < box.hi[0]; ++i)
    for (int j = box.lo[1]; j < box.hi[1]; ++j)
      for (int k = box.lo[2]; k < box.hi[2]; ++k) m = std::max(m, std::abs(f[g.index(i, j, k)]));
  return m;
}

double max_abs(const Grid3& g, const VectorField& f, const IndexBox& box) {
  return std::max({max_abs(g, f[0], box), max_abs(g, f[1], box), max_abs(g, f[2], box)});
}

double norm2(const Grid3& g, const ComplexField& f) {
  double s = 0;
  for (const auto& z : f) s += std::norm(z);
  return s * g.cell_volume();
}

double l2_distance(const Grid3& g, const ComplexField& f, const ComplexField& h) {
  double s = 0;
  for (std::size_t q = 0; q < f.size(); ++q) s += std::norm(f[q] - h[q]);
  return std::sqrt(s * g.cell_volume());
}

}  // namespace galdual
