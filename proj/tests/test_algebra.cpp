#include "galdual/algebra.hpp"
#include "galdual/random.hpp"
#include "test_util.hpp"

using namespace galdual;
using galdual::test::el;

namespace {
AlgebraVector u(AlgebraFlavor f, int k) { return AlgebraVector::unit(f, k); }
AlgebraVector random_vector(CounterRng& rng, AlgebraFlavor f) {
  AlgebraVector x = u(f, 0) * 0.0;
  for (int k = 0; k < algebra_dim(f); ++k) x.coeffs[k] = rng.uniform(-1, 1);
  return x;
}
}  // namespace

TEST_CASE("bracket: boxed table entries") {
  const AlgebraVector d = bracket(u(AlgebraFlavor::dual, basis::v(0)), u(AlgebraFlavor::dual, basis::a(0)));
  CHECK(d.coeffs[basis::b] == 1.0);
  CHECK((d + u(AlgebraFlavor::dual, basis::b) * -1.0).max_abs() == 0);
  CHECK(bracket(u(AlgebraFlavor::dual, basis::v(0)), u(AlgebraFlavor::dual, basis::b)).max_abs() == 0);
  const AlgebraVector g = bracket(u(AlgebraFlavor::galilei, basis::v(0)), u(AlgebraFlavor::galilei, basis::b));
  CHECK((g + u(AlgebraFlavor::galilei, basis::a(0)) * -1.0).max_abs() == 0);
  CounterRng rng(1);
  const AlgebraVector x = random_vector(rng, AlgebraFlavor::extended);
  CHECK(bracket(x, x).max_abs() < 1e-15);
  CHECK_THROWS_AS(bracket(u(AlgebraFlavor::dual, 0), u(AlgebraFlavor::galilei, 0)), MismatchError);
}

TEST_CASE("tables: antisymmetry, Jacobi, centrality") {
  CounterRng rng(2);
  for (AlgebraFlavor f : {AlgebraFlavor::galilei, AlgebraFlavor::dual, AlgebraFlavor::extended}) {
    CHECK(hardcoded_table(f).antisymmetry_defect() == 0);
    for (int i = 0; i < 500; ++i)
      CHECK(jacobi_residual(random_vector(rng, f), random_vector(rng, f), random_vector(rng, f)) < 1e-10);
  }
  for (int k = 0; k < algebra_dim(AlgebraFlavor::dual); ++k)
    CHECK(bracket(u(AlgebraFlavor::dual, basis::b), u(AlgebraFlavor::dual, k)).max_abs() == 0);
  for (int k = 0; k < algebra_dim(AlgebraFlavor::extended); ++k)
    CHECK(bracket(u(AlgebraFlavor::extended, basis::M), u(AlgebraFlavor::extended, k)).max_abs() == 0);
}

TEST_CASE("generators from the affine realization reproduce the tables") {
  for (AlgebraFlavor f : {AlgebraFlavor::galilei, AlgebraFlavor::dual, AlgebraFlavor::extended})
    for (double c : {1.0, 2.5}) {
      const auto gens = generators_from_realization(f, c);
      const auto ext = extract_structure_constants(gens, f, c);
      CHECK(ext.fit_residual < 1e-8);
      CHECK(ext.table.max_difference(hardcoded_table(f, c)) < 1e-8);
    }
  // Dual chi_b: a single entry in the ct row, constant column.
  const MatX hb = generators_from_realization(AlgebraFlavor::dual)[basis::b];
  int nonzero = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) nonzero += std::abs(hb(i, j)) > 1e-9;
  CHECK(nonzero == 1);
  CHECK(std::abs(hb(3, 4)) > 0.5);
  // Galilei chi_v1 couples the ct column into the x1 row.
  const MatX gv = generators_from_realization(AlgebraFlavor::galilei)[basis::v(0)];
  CHECK(std::abs(gv(0, 3)) > 0.5);
}

TEST_CASE("differential realization agrees with the tables") {
  for (AlgebraFlavor f : {AlgebraFlavor::galilei, AlgebraFlavor::dual, AlgebraFlavor::extended}) {
    const int nv = f == AlgebraFlavor::extended ? 5 : 4;
    CHECK(differential_realization_check(f, test_polynomials(nv, 4)) < 1e-8);
    CHECK(differential_realization_check(f, {Polynomial::constant(nv, 3.0)}) == 0);
  }
  // [chi_v1, chi_a1] (t x1) = (1/c) chi_b (t x1) = -x1/c with c = 2.
  const double c = 2.0;
  const auto ops = differential_realization(AlgebraFlavor::dual, c);
  const Polynomial f = Polynomial::variable(4, 3) * Polynomial::variable(4, 0);
  const Polynomial lhs = ops[basis::v(0)].apply(ops[basis::a(0)].apply(f)) - ops[basis::a(0)].apply(ops[basis::v(0)].apply(f));
  CHECK((lhs + Polynomial::variable(4, 0) * (1 / c)).max_abs_coef() < 1e-15);
  // [chi_theta1, chi_theta2] (x2 x3) = chi_theta3 (x2 x3).
  const auto gops = differential_realization(AlgebraFlavor::dual);
  const Polynomial h = Polynomial::variable(4, 1) * Polynomial::variable(4, 2);
  const Polynomial rr = gops[basis::theta(0)].apply(gops[basis::theta(1)].apply(h)) -
                        gops[basis::theta(1)].apply(gops[basis::theta(0)].apply(h)) - gops[basis::theta(2)].apply(h);
  CHECK(rr.max_abs_coef() < 1e-15);
}

TEST_CASE("cocycle_gamma") {
  CHECK(cocycle_gamma(el(Flavor::galilei, 0, {0, 0, 0}, {1, 0, 0}), el(Flavor::galilei, 0, {3, 0, 0}, {0, 0, 0}), 1.0).gamma ==
        doctest::Approx(-1.5));
  const GroupElement g = el(Flavor::galilei, 0.3, {1, 2, 0}, {0.1, 0.2, 0.3}, Rotation::about_axis(2, 0.4));
  CHECK(cocycle_gamma(g, GroupElement::identity(Flavor::galilei), 2.0).gamma == 0);
  CHECK(cocycle_gamma(g, g, 2.0).omega == doctest::Approx(2.0 * cocycle_gamma(g, g, 2.0).gamma));
  CHECK_THROWS_AS(cocycle_gamma(GroupElement::identity(Flavor::dual), GroupElement::identity(Flavor::dual), 1.0),
                  MismatchError);

  // Two-cocycle identity.
  CounterRng rng(4);
  const double m = 1.3;
  for (int i = 0; i < 500; ++i) {
    const GroupElement g0 = random_element(rng, Flavor::galilei), g1 = random_element(rng, Flavor::galilei),
                       g2 = random_element(rng, Flavor::galilei);
    const double lhs = cocycle_gamma(g2, g1, m).omega + cocycle_gamma(compose(g2, g1), g0, m).omega;
    const double rhs = cocycle_gamma(g1, g0, m).omega + cocycle_gamma(g2, compose(g1, g0), m).omega;
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("extended group") {
  const double m = 1.7;
  const Vec3 a(0.7, -0.3, 0.5), v(0.4, 0.9, -0.2);
  auto x = [&](const Vec3& aa, const Vec3& vv) {
    return ExtendedGroupElement::make(0, el(Flavor::galilei, 0, aa, vv), m);
  };
  // Word (-v)(-a)(v)(a): identity group part and alpha = -a.v, which the
  // representation turns into the phase exp(i m a.v).
  ExtendedGroupElement w = x(a, Vec3::Zero());
  w = extended_compose(x(Vec3::Zero(), v), w);
  w = extended_compose(x(-a, Vec3::Zero()), w);
  w = extended_compose(x(Vec3::Zero(), -v), w);
  CHECK(distance(w.g, GroupElement::identity(Flavor::galilei)) < 1e-15);
  CHECK(w.alpha == doctest::Approx(-a.dot(v) * m / w.kappa).epsilon(1e-13));

  const auto c1 = ExtendedGroupElement::make(0.3, GroupElement::identity(Flavor::galilei), m);
  const auto c2 = ExtendedGroupElement::make(-1.1, GroupElement::identity(Flavor::galilei), m);
  CHECK(extended_compose(c2, c1).alpha == doctest::Approx(-0.8));

  CounterRng rng(6);
  for (int i = 0; i < 500; ++i) {
    auto r = [&] { return ExtendedGroupElement::make(rng.uniform(-1, 1), random_element(rng, Flavor::galilei), m); };
    const auto x1 = r(), x2 = r(), x3 = r();
    const auto l = extended_compose(x3, extended_compose(x2, x1));
    const auto rr = extended_compose(extended_compose(x3, x2), x1);
    CHECK(std::abs(l.alpha - rr.alpha) < 1e-10);
    CHECK(distance(l.g, rr.g) < 1e-10);
    CHECK(galdual::test::max_diff(extended_to_matrix(extended_compose(x2, x1)),
                                  extended_to_matrix(x2) * extended_to_matrix(x1)) < 1e-12);
    const auto inv = extended_compose(extended_inverse(x1), x1);
    CHECK(std::abs(inv.alpha) < 1e-12);
  }
}
