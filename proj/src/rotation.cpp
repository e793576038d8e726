#include "galdual/rotation.hpp"

#include <algorithm>
#include <cmath>

namespace galdual {

namespace {
constexpr double kDriftTol = 1e-12;

double drift(const Mat3& m) {
  return (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff() +
         std::abs(m.determinant() - 1.0);
}
}  // namespace

Mat3 skew(const Vec3& w) {
  Mat3 s;
  s << 0, -w.z(), w.y(), w.z(), 0, -w.x(), -w.y(), w.x(), 0;
  return s;
}

Mat3 polar_orthonormalize(const Mat3& m) {
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 r = svd.matrixU() * svd.matrixV().transpose();
  if (r.determinant() < 0) {
    Mat3 u = svd.matrixU();
    u.col(2) *= -1.0;
    r = u * svd.matrixV().transpose();
  }
  return r;
}

Vec3 axis_angle_of(const Mat3& r) {
  // Trace gives the angle, the skew part gives the axis; near pi the skew part
  // degenerates and the symmetric part is used instead.
  const double cos_t = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
  const double angle = std::acos(cos_t);
  Vec3 w(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
  if (angle < 1e-8) return 0.5 * w;
  if (kPi - angle > 1e-6) return w * (angle / (2.0 * std::sin(angle)));
  Mat3 b = (r + Mat3::Identity()) / 2.0;
  int k = 0;
  b.diagonal().maxCoeff(&k);
  Vec3 axis = b.col(k) / std::sqrt(std::max(b(k, k), 0.0));
  if (axis.dot(w) < 0) axis = -axis;
  return axis.normalized() * angle;
}

Rotation::Rotation() : theta_(Vec3::Zero()), m_(Mat3::Identity()) {}

Rotation Rotation::from_axis_angle(const Vec3& theta) {
  const double angle = theta.norm();
  if (angle == 0.0) return Rotation();
  Mat3 m = Eigen::AngleAxisd(angle, theta / angle).toRotationMatrix();
  return Rotation(theta, m);
}

Rotation Rotation::from_matrix(const Mat3& m) {
  if (m.determinant() <= 0) throw DomainError("rotation matrix must have positive determinant");
  Mat3 r = drift(m) > kDriftTol ? polar_orthonormalize(m) : m;
  return Rotation(axis_angle_of(r), r);
}

Rotation Rotation::about_axis(int axis, double angle) {
  Vec3 t = Vec3::Zero();
  t[axis] = angle;
  return from_axis_angle(t);
}

Rotation Rotation::inverse() const { return Rotation(-theta_, m_.transpose()); }

Rotation Rotation::operator*(const Rotation& rhs) const {
  if (is_identity()) return rhs;
  if (rhs.is_identity()) return *this;
  return from_matrix(m_ * rhs.m_);
}

double Rotation::orthonormality_defect() const { return drift(m_); }

}  // namespace galdual
