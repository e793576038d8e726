#include "galdual/algebra.hpp"
#include "galdual/fourier.hpp"
#include "galdual/random.hpp"
#include "galdual/reps.hpp"
#include "test_util.hpp"

using namespace galdual;
using galdual::test::el;
using galdual::test::max_diff;

namespace {

const Grid3 kPGrid = Grid3::centered(48, 12.0);

WaveFunction dual_momentum_gaussian(double E, const Vec3& p0 = Vec3::Zero(), double s = 0.5) {
  return make_momentum_state(RepKind::dual, E, kPGrid, gaussian_samples(kPGrid, p0, s, Vec3::Zero()));
}

double max_abs_diff(const ComplexField& a, const ComplexField& b) {
  double m = 0;
  for (std::size_t q = 0; q < a.size(); ++q) m = std::max(m, std::abs(a[q] - b[q]));
  return m;
}

}  // namespace

TEST_CASE("dual momentum action: time translation, boosts, identity") {
  const WaveFunction phi = dual_momentum_gaussian(5.0);
  const WaveFunction t = dual_momentum_action(el(Flavor::dual, 0.2, {0, 0, 0}, {0, 0, 0}), phi);
  for (std::size_t q = 0; q < phi.samples.size(); q += 97) CHECK(std::abs(t.samples[q] - std::polar(1.0, -1.0) * phi.samples[q]) < 1e-15);
  CHECK(max_abs_diff(dual_momentum_action(GroupElement::identity(Flavor::dual), phi).samples, phi.samples) == 0);
  CHECK(max_diff(little_group_momentum(Vec3::Zero(), 5.0, el(Flavor::dual, 0, {0, 0, 0}, {0.2, 0, 0})), Vec3(-1, 0, 0)) < 1e-15);

  // Functional form: the argument moves by E beta / c.
  const MomentumFn f = [](const Vec3& p) { return cplx(std::exp(-p.squaredNorm()), p[0]); };
  const MomentumFn b = dual_momentum_action(el(Flavor::dual, 0, {0, 0, 0}, {0.2, 0, 0}), 5.0, f);
  for (const Vec3& p : {Vec3(0.1, 0.2, 0.3), Vec3(-1, 0.5, 0)}) CHECK(std::abs(b(p) - f(p + Vec3(1, 0, 0))) < 1e-15);

  CHECK_THROWS(make_momentum_state(RepKind::dual, 0.0, kPGrid, phi.samples));
  CHECK_THROWS_AS(galilei_momentum_action(GroupElement::identity(Flavor::galilei), phi), MismatchError);
}

TEST_CASE("dual momentum action on grids is a representation") {
  CounterRng rng(21);
  const WaveFunction phi = dual_momentum_gaussian(2.0, Vec3(0.2, 0, 0), 0.8);
  ElementRanges r;
  r.v = 0.3;
  ActionOptions opt;
  opt.interp_order = 6;
  for (int i = 0; i < 5; ++i) {
    const GroupElement g1 = random_element(rng, Flavor::dual, 1.0, r), g2 = random_element(rng, Flavor::dual, 1.0, r);
    const WaveFunction lhs = dual_momentum_action(g2, dual_momentum_action(g1, phi, opt), opt);
    const WaveFunction rhs = dual_momentum_action(compose(g2, g1), phi, opt);
    CHECK(l2_distance(kPGrid, lhs.samples, rhs.samples) < 1e-3);
  }
}

TEST_CASE("dual position action") {
  const Grid3 g = Grid3::centered(24, 16.0);
  const WaveFunction psi = make_position_state(RepKind::dual, 1.5, g, gaussian_samples(g, Vec3::Zero(), 1.2, Vec3(0.3, 0, 0)));
  const WaveFunction boosted = dual_position_action(el(Flavor::dual, 0, {0, 0, 0}, {0.1, -0.2, 0.3}), psi);
  for (std::size_t q = 0; q < psi.samples.size(); ++q)
    CHECK(std::abs(std::abs(boosted.samples[q]) - std::abs(psi.samples[q])) < 1e-15);

  // Translation by whole cells is a rigid shift.
  const Vec3 a(2 * g.h[0], -g.h[1], 0);
  const WaveFunction moved = dual_position_action(el(Flavor::dual, 0, a, {0, 0, 0}), psi);
  double e = 0;
  for (int i = 4; i < 20; ++i)
    for (int j = 4; j < 20; ++j)
      e = std::max(e, std::abs(moved.samples[g.index(i, j, 12)] - psi.samples[g.index(i - 2, j + 1, 12)]));
  CHECK(e < 1e-12);

  // Boost then translation agrees with the momentum action conjugated by the basis change.
  const GroupElement bt = compose(el(Flavor::dual, 0, {0.5, 0, -0.25}, {0, 0, 0}), el(Flavor::dual, 0, {0, 0, 0}, {0.2, 0, 0}));
  const Grid3 big = Grid3::centered(32, 24.0);
  const WaveFunction w = make_position_state(RepKind::dual, 1.5, big, gaussian_samples(big, Vec3::Zero(), 1.5, Vec3::Zero()));
  ActionOptions opt;
  opt.interp_order = 6;
  const WaveFunction via_p = to_position_basis(dual_momentum_action(bt, to_momentum_basis(w), opt), big);
  const WaveFunction direct = dual_position_action(bt, w, opt);
  CHECK(l2_distance(big, via_p.samples, direct.samples) < 1e-6);
}

TEST_CASE("galilei actions") {
  const double m = 1.3;
  const Grid3 g = Grid3::centered(32, 20.0);
  const WaveFunction psi = make_position_state(RepKind::galilei, m, g, gaussian_samples(g, Vec3::Zero(), 1.3, Vec3::Zero()));

  // Pure rotation carries no phase.
  const Rotation R = Rotation::about_axis(2, 0.3);
  const PositionFn f = free_gaussian_packet(m, Vec3(0.5, 0, 0), 1.0, Vec3(0, 0.2, 0));
  const PositionFn rf = galilei_position_action(el(Flavor::galilei, 0, {0, 0, 0}, {0, 0, 0}, R), m, f);
  const Vec3 x(0.4, -0.3, 0.2);
  CHECK(std::abs(rf(x, 0.7) - f(R.inverse() * x, 0.7)) < 1e-15);

  // A boost keeps the norm and matches the momentum-basis action.
  const GroupElement boost = el(Flavor::galilei, 0, {0, 0, 0}, {0.3, 0, -0.2});
  const WaveFunction bx = galilei_position_action(boost, psi);
  CHECK(std::abs(bx.norm2() - psi.norm2()) < 1e-8);
  ActionOptions opt;
  opt.interp_order = 6;
  const WaveFunction bp = to_position_basis(galilei_momentum_action(boost, to_momentum_basis(psi), opt), g);
  CHECK(l2_distance(g, bp.samples, bx.samples) < 1e-4);

  // (boost, translation): defect phase exp(-i m gamma) with gamma = -1.5.
  const GroupElement v = el(Flavor::galilei, 0, {0, 0, 0}, {1, 0, 0}), a = el(Flavor::galilei, 0, {3, 0, 0}, {0, 0, 0});
  const PositionFn lhs = galilei_position_action(v, m, galilei_position_action(a, m, f));
  const PositionFn rhs = galilei_position_action(compose(v, a), m, f);
  const double gamma = cocycle_gamma(v, a, m).gamma;
  CHECK(gamma == doctest::Approx(-1.5));
  CHECK(std::abs(lhs(x, 0.3) - std::polar(1.0, -m * gamma) * rhs(x, 0.3)) < 1e-14);

  // Time translation in momentum basis multiplies by exp(i b p^2 / 2m).
  const WaveFunction phi = to_momentum_basis(psi);
  const WaveFunction tb = galilei_momentum_action(el(Flavor::galilei, 0.4, {0, 0, 0}, {0, 0, 0}), phi);
  const std::size_t q = phi.grid.index(18, 15, 16);
  const double p2 = phi.grid.point(18, 15, 16).squaredNorm();
  CHECK(std::abs(tb.samples[q] - std::polar(1.0, 0.4 * p2 / (2 * m)) * phi.samples[q]) < 1e-15);

  CHECK_THROWS_AS(dual_position_action(GroupElement::identity(Flavor::dual), psi), MismatchError);
}

TEST_CASE("generators: H, P, J and the K-P bracket") {
  const double E = 2.0;
  const WaveFunction phi = dual_momentum_gaussian(E);
  const WaveFunction h = dual_generator_apply(DualGenerator::H, 0, phi);
  CHECK(max_abs_diff(h.samples, [&] {
          ComplexField s = phi.samples;
          for (auto& z : s) z *= E;
          return s;
        }()) == 0);
  const WaveFunction p = dual_generator_apply(DualGenerator::P, 1, phi);
  const std::size_t q = kPGrid.index(20, 14, 16);
  CHECK(std::abs(p.samples[q] + kPGrid.point(20, 14, 16)[1] * phi.samples[q]) < 1e-16);
  for (int c = 0; c < 3; ++c) CHECK(dual_generator_apply(DualGenerator::J, c, phi).norm2() < 1e-20);

  // [K1, P1] psi = -i (E/c) psi.
  const WaveFunction kp = dual_generator_apply(DualGenerator::K, 0, dual_generator_apply(DualGenerator::P, 0, phi));
  const WaveFunction pk = dual_generator_apply(DualGenerator::P, 0, dual_generator_apply(DualGenerator::K, 0, phi));
  double e = 0;
  for (std::size_t i = 0; i < phi.samples.size(); ++i)
    e = std::max(e, std::abs(kp.samples[i] - pk.samples[i] + cplx(0, E) * phi.samples[i]));
  CHECK(e < 1e-6);

  CHECK(generator_consistency_residual(phi) < 1e-6);
  CHECK(generator_consistency_residual(dual_momentum_gaussian(E, Vec3(0.3, -0.2, 0.1), 0.7), DerivativeMode::fd4) < 1e-2);
}

TEST_CASE("Casimirs") {
  const CasimirValues c = casimir_check(dual_momentum_gaussian(-3.0, Vec3(0.2, 0.1, 0)));
  CHECK(c.energy == -3.0);
  CHECK(c.spin_squared < 1e-6);
  ActionOptions opt;
  opt.interp_order = 6;
  const WaveFunction moved = dual_momentum_action(el(Flavor::dual, 0.3, {0.2, 0, 0.1}, {0.1, 0.05, 0}, Rotation::about_axis(0, 0.4)),
                                                  dual_momentum_gaussian(2.0), opt);
  const CasimirValues cm = casimir_check(moved);
  CHECK(cm.energy == 2.0);
  CHECK(cm.spin_squared < 1e-6);
}

TEST_CASE("little group") {
  const Rotation R = Rotation::about_axis(1, 0.8);
  Mat4 expect = Mat4::Identity();
  expect.topLeftCorner<3, 3>() = R.matrix();
  CHECK(max_diff(little_group_conjugation(Vec3::Zero(), 2.0, el(Flavor::dual, 0, {0, 0, 0}, {0, 0, 0}, R)), expect) < 1e-15);
  CHECK(max_diff(little_group_conjugation(Vec3(1, 0, 0), 5.0, el(Flavor::dual, 0, {0, 0, 0}, {0.2, 0, 0})), Mat4::Identity()) < 1e-15);
  const Mat4 L = boost_matrix(Vec3(0.3, -1, 2), 1.5);
  CHECK(max_diff(L.transpose() * Vec4(0, 0, 0, 1.5), Vec4(0.3, -1, 2, 1.5)) == 0);
  CHECK_THROWS_AS(boost_matrix(Vec3::Zero(), 0.0), DomainError);
}

TEST_CASE("central extension shift") {
  const WaveFunction phi = dual_momentum_gaussian(5.0);
  CHECK(dual_central_extension_shift(phi, 0.0).invariant == 5.0);
  const WaveFunction s = dual_central_extension_shift(phi, 2.0);
  CHECK(s.invariant == 7.0);
  CHECK(s.samples == phi.samples);
  const WaveFunction t = dual_momentum_action(el(Flavor::dual, 0.3, {0, 0, 0}, {0, 0, 0}), s);
  CHECK(std::abs(t.samples[1000] - std::polar(1.0, -0.3 * 7) * s.samples[1000]) < 1e-15);
  const MomentumFn f = [](const Vec3& p) { return cplx(std::exp(-p.squaredNorm())); };
  const GroupElement boost = el(Flavor::dual, 0, {0, 0, 0}, {0.1, 0, 0});
  CHECK(std::abs(dual_momentum_action(boost, 7.0, f)(Vec3::Zero()) - f(Vec3(0.7, 0, 0))) < 1e-15);
  CHECK_THROWS_AS(dual_central_extension_shift(phi, -5.0), DomainError);
}
