#include "galdual/fourier.hpp"
#include "galdual/kernels.hpp"
#include "galdual/random.hpp"
#include "galdual/wavefunction.hpp"
#include "test_util.hpp"

using namespace galdual;
namespace k = galdual::kernels;

namespace {
RealField smooth_real(const Grid3& g) {
  return sample_real(g, [](const Vec3& x) { return std::sin(x[0]) * std::cos(2 * x[1]) + 0.3 * std::sin(x[2] - x[0]); });
}
}  // namespace

TEST_CASE("grid geometry") {
  const Grid3 g = Grid3::centered(8, 4.0);
  CHECK(g.h[0] == 0.5);
  CHECK(g.point(4, 4, 4).isZero());
  CHECK(g.point(0, 0, 0)[0] == -2.0);
  CHECK(g.index(1, 2, 3) == std::size_t((1 * 8 + 2) * 8 + 3));
  const Grid3 r = g.reciprocal();
  CHECK(r.h[0] == doctest::Approx(2 * kPi / 4.0));
  CHECK(r.point(4, 4, 4).isZero());
  const IndexBox b = IndexBox::interior(g, 2);
  CHECK(b.lo[0] == 2);
  CHECK(b.hi[0] == 6);
}

TEST_CASE("serial and parallel kernels agree") {
  const Grid3 g = Grid3::centered({20, 17, 23}, Vec3(2 * kPi, 2 * kPi, 2 * kPi));
  const RealField f = smooth_real(g);
  for (int order : {2, 4})
    for (bool periodic : {false, true})
      for (int axis = 0; axis < 3; ++axis) {
        RealField a(f.size()), b(f.size());
        k::serial::derivative(g, f.data(), a.data(), axis, order, periodic);
        k::parallel::derivative(g, f.data(), b.data(), axis, order, periodic);
        CHECK(a == b);
      }
  for (bool periodic : {false, true}) {
    RealField a(f.size()), b(f.size());
    k::serial::laplacian7(g, f.data(), a.data(), periodic);
    k::parallel::laplacian7(g, f.data(), b.data(), periodic);
    CHECK(a == b);
  }
  const double ds = k::serial::dot(f.data(), f.data(), f.size());
  const double dp = k::parallel::dot(f.data(), f.data(), f.size());
  CHECK(std::abs(ds - dp) <= 1e-12 * ds);

  k::AffineMap map;
  map.A = Rotation::from_axis_angle(Vec3(0.2, 0.1, -0.3)).matrix();
  map.b = Vec3(0.05, -0.1, 0.2);
  for (int order : {2, 4, 6}) {
    RealField a(f.size()), b(f.size());
    k::serial::resample(g, f.data(), g, map, order, false, a.data());
    k::parallel::resample(g, f.data(), g, map, order, false, b.data());
    CHECK(a == b);
  }
}

TEST_CASE("derivative orders") {
  std::vector<double> hs, e2, e4;
  for (int n : {16, 32, 64}) {
    const Grid3 g = Grid3::centered({n, 4, 4}, Vec3(2 * kPi, 1, 1));
    const RealField f = sample_real(g, [](const Vec3& x) { return std::sin(x[0]); });
    RealField d2(f.size()), d4(f.size());
    k::derivative(g, f.data(), d2.data(), 0, 2, true);
    k::derivative(g, f.data(), d4.data(), 0, 4, true);
    double m2 = 0, m4 = 0;
    for (int i = 0; i < n; ++i) {
      const std::size_t q = g.index(i, 0, 0);
      m2 = std::max(m2, std::abs(d2[q] - std::cos(g.point(i, 0, 0)[0])));
      m4 = std::max(m4, std::abs(d4[q] - std::cos(g.point(i, 0, 0)[0])));
    }
    hs.push_back(g.h[0]);
    e2.push_back(m2);
    e4.push_back(m4);
  }
  const double p2 = std::log(e2[1] / e2[2]) / std::log(2.0), p4 = std::log(e4[1] / e4[2]) / std::log(2.0);
  CHECK(p2 == doctest::Approx(2).epsilon(0.02));
  CHECK(p4 == doctest::Approx(4).epsilon(0.02));
}

TEST_CASE("resample reproduces polynomials up to its order") {
  const Grid3 g = Grid3::centered(12, 6.0);
  const RealField f = sample_real(g, [](const Vec3& x) { return 1 + x[0] * x[1] - 0.5 * x[2] * x[2] * x[0]; });
  k::AffineMap map;
  map.b = Vec3(0.13, -0.21, 0.07);
  RealField out(f.size());
  k::resample(g, f.data(), g, map, 4, false, out.data());
  const IndexBox box = IndexBox::interior(g, 2);
  double err = 0;
  for (int i = box.lo[0]; i < box.hi[0]; ++i)
    for (int j = box.lo[1]; j < box.hi[1]; ++j)
      for (int l = box.lo[2]; l < box.hi[2]; ++l) {
        const Vec3 x = g.point(i, j, l) + map.b;
        err = std::max(err, std::abs(out[g.index(i, j, l)] - (1 + x[0] * x[1] - 0.5 * x[2] * x[2] * x[0])));
      }
  CHECK(err < 1e-12);
  double w[4];
  k::lagrange_weights(0.3, 0, 4, w);
  CHECK(w[0] + w[1] + w[2] + w[3] == doctest::Approx(1.0));
}

TEST_CASE("fourier: unitary transform, inverse, spectral derivative, shift") {
  const Grid3 g = Grid3::centered(16, 12.0);
  const ComplexField psi = gaussian_samples(g, Vec3(0.3, 0, -0.2), 1.0, Vec3(0.5, 0, 0));
  const ComplexField phi = fourier::to_momentum(g, psi);
  CHECK(norm2(g.reciprocal(), phi) == doctest::Approx(norm2(g, psi)).epsilon(1e-12));
  CHECK(l2_distance(g, fourier::to_position(g, phi), psi) < 1e-13);

  const Grid3 p = Grid3::centered(24, 2 * kPi);
  const RealField f = sample_real(p, [](const Vec3& x) { return std::sin(2 * x[1]); });
  const RealField d = fourier::spectral_derivative(p, f, 1);
  double e = 0;
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) e = std::max(e, std::abs(d[p.index(i, j, 0)] - 2 * std::cos(2 * p.point(i, j, 0)[1])));
  CHECK(e < 1e-12);

  const RealField s = fourier::fourier_shift(p, f, Vec3(0, 0.37, 0));
  double es = 0;
  for (int j = 0; j < 24; ++j) es = std::max(es, std::abs(s[p.index(0, j, 0)] - std::sin(2 * (p.point(0, j, 0)[1] - 0.37))));
  CHECK(es < 1e-12);
}

TEST_CASE("wavefunction: Gaussian analytic transform and basis round trips") {
  const Grid3 g = Grid3::centered(48, 30.0);
  const double sigma = 1.2;
  const ComplexField psi = gaussian_samples(g, Vec3::Zero(), sigma, Vec3::Zero());
  CHECK(norm2(g, psi) == doctest::Approx(1.0).epsilon(1e-10));

  // Analytic momentum amplitude of the centered Gaussian.
  const WaveFunction w = make_position_state(RepKind::galilei, 1.0, g, psi);
  const WaveFunction phi = to_momentum_basis(w);
  const Grid3 pg = phi.grid;
  const double a = std::pow(2 * sigma * sigma / kPi, 0.75);
  double e = 0;
  for (int i = 0; i < 48; ++i) {
    const std::size_t q = pg.index(i, 24, 24);
    const double p2 = pg.point(i, 24, 24).squaredNorm();
    e = std::max(e, std::abs(phi.samples[q] - cplx(a * std::exp(-sigma * sigma * p2), 0)));
  }
  CHECK(e < 1e-10);
  CHECK(l2_distance(g, to_position_basis(phi, g).samples, psi) < 1e-12);

  const WaveFunction d = make_position_state(RepKind::dual, 2.0, g, gaussian_samples(g, Vec3(1, 0, 0), sigma, Vec3(0, 0.4, 0)));
  CHECK(l2_distance(g, to_position_basis(to_momentum_basis(d), g).samples, d.samples) < 1e-12);
  CHECK_THROWS(make_position_state(RepKind::dual, 0.0, g, psi));
}

TEST_CASE("free propagation matches the exact spreading packet") {
  const double m = 1.4;
  const Grid3 g = Grid3::centered(48, 30.0);
  const PositionFn exact = free_gaussian_packet(m, Vec3(0.5, 0, 0), 1.3, Vec3(0.4, 0, -0.3));
  const WaveFunction w = make_position_state(RepKind::galilei, m, g, sample_complex(g, [&](const Vec3& x) { return exact(x, 0); }));
  const WaveFunction later = propagate_free(w, 2.5);
  CHECK(l2_distance(g, later.samples, sample_complex(g, [&](const Vec3& x) { return exact(x, 2.5); })) < 1e-9);
  CHECK(later.t == 2.5);
}

TEST_CASE("dual position samples: time enters as a pure phase") {
  const Grid3 g = Grid3::centered(8, 8.0);
  WaveFunction w = make_position_state(RepKind::dual, 3.0, g, gaussian_samples(g, Vec3::Zero(), 1.0, Vec3::Zero()));
  w.t = 0.5;
  CHECK(std::abs(w.full_sample(3) - std::polar(1.0, -1.5) * w.samples[3]) < 1e-16);
  CHECK(w.modulus(3) == std::abs(w.samples[3]));
}
