#include "galdual/contraction.hpp"
#include "galdual/groups.hpp"
#include "test_util.hpp"

using namespace galdual;
using galdual::test::max_diff;

TEST_CASE("family_matrix: entries and alpha = 1") {
  const Eigen::Matrix3d m = family_matrix({10, ContractionMode::temporal, 0.5, 0, 0, 1});
  CHECK(m(1, 0) == doctest::Approx(scaled_gamma(10, 0.5) * 0.5 / 100).epsilon(1e-15));
  CHECK(m(1, 0) == doctest::Approx(5.0063e-3).epsilon(1e-4));
  CHECK(max_diff(family_matrix({1, ContractionMode::temporal, 0.6, 0.3, 0.2, 1}), poincare2_matrix({0.6, 0.3, 0.2, 1})) <
        1e-15);
  CHECK(max_diff(family_matrix({1, ContractionMode::spatial, 0.6, 0.3, 0.2, 1}), poincare2_matrix({0.6, 0.3, 0.2, 1})) <
        1e-15);
  CHECK_THROWS_AS(family_matrix({2, ContractionMode::temporal, 2.0, 0, 0, 1}), DomainError);
}

TEST_CASE("family is closed under products at fixed alpha") {
  for (ContractionMode mode : {ContractionMode::temporal, ContractionMode::spatial}) {
    const double alpha = 7;
    const Eigen::Matrix3d p = family_matrix({alpha, mode, 0.8, 0.3, -0.2, 1}) * family_matrix({alpha, mode, -1.5, 1.0, 0.4, 1});
    const ContractedFamilyElement r = recover_family_parameters(p, alpha, mode);
    CHECK(max_diff(family_matrix(r), p) < 1e-13);
  }
}

TEST_CASE("limits") {
  Eigen::Matrix3d t;
  t << 1, 0.5, 2, 0, 1, 3, 0, 0, 1;
  CHECK(max_diff(temporal_limit(0.5, 2, 3), t) == 0);
  CHECK(max_diff(family_matrix({1e6, ContractionMode::temporal, 0.5, 2, 3, 1}), t) < 1e-10);
  CHECK(temporal_limit(0, 0, 0) == Eigen::Matrix3d::Identity());
  Eigen::Matrix3d fast;
  fast << 1, 5, 0, 0, 1, 0, 0, 0, 1;
  CHECK(max_diff(family_matrix({1e8, ContractionMode::temporal, 5, 0, 0, 1}), fast) < 1e-10);

  Eigen::Matrix3d s;
  s << 1, 0, 2, 0.5, 1, 3, 0, 0, 1;
  CHECK(max_diff(spatial_limit(0.5, 2, 3), s) == 0);
  CHECK(max_diff(family_matrix({1e6, ContractionMode::spatial, 0.5, 2, 3, 1}), s) < 1e-10);
  const Eigen::Vector3d e = spatial_limit(0.5, 2, 3) * Eigen::Vector3d(1, 0, 1);
  CHECK(e[0] == 3);
  CHECK(e[1] == 3.5);
  CHECK(swap_space_time(temporal_limit(0.5, 0, 0)) == spatial_limit(0.5, 0, 0));
}

TEST_CASE("limits embed in the 3+1 group matrices along one axis") {
  const double beta = 0.4, a = 1.5, b = -0.7, c = 2.0;
  const Mat5 gal = to_affine(GroupElement::make(Flavor::galilei, b, Vec3(a, 0, 0), Vec3(beta * c, 0, 0), Rotation(), c));
  // The dual boost parameter runs opposite to the contraction parameter.
  const Mat5 dual = to_affine(GroupElement::make(Flavor::dual, b, Vec3(a, 0, 0), Vec3(-beta * c, 0, 0), Rotation(), c));
  const int idx[3] = {0, 3, 4};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(gal(idx[i], idx[j]) == doctest::Approx(temporal_limit(beta, a, b, c)(i, j)));
      CHECK(dual(idx[i], idx[j]) == doctest::Approx(spatial_limit(beta, a, b, c)(i, j)));
    }
}

TEST_CASE("convergence_report: second order in 1/alpha, zero distance at rest") {
  const auto alphas = default_alpha_schedule();
  for (ContractionMode mode : {ContractionMode::temporal, ContractionMode::spatial}) {
    const auto r = convergence_report(mode, 0.5, 2, 3, alphas);
    REQUIRE(r.rate);
    CHECK(*r.rate == doctest::Approx(-2).epsilon(0.01));
    for (std::size_t i = 3; i < r.rows.size(); ++i) CHECK(r.rows[i].distance < r.rows[i - 1].distance);
    const auto z = convergence_report(mode, 0, 2, 3, alphas);
    for (const auto& row : z.rows) CHECK(row.distance == 0);
    CHECK_FALSE(z.rate);
  }
}

TEST_CASE("loglog_slope") {
  const std::vector<double> x{1, 2, 4, 8}, y{3, 0.75, 0.1875, 0.046875};
  CHECK(loglog_slope(x, y) == doctest::Approx(-2));
}
