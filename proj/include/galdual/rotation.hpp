#pragma once

#include "galdual/types.hpp"

namespace galdual {

/// Proper rotation stored as an axis-angle vector together with its matrix.
/// Composition re-orthonormalizes the matrix (polar decomposition) once the
/// drift from SO(3) exceeds 1e-12, then re-extracts the axis-angle vector.
class Rotation {
 public:
  Rotation();

  static Rotation identity() { return Rotation(); }
  static Rotation from_axis_angle(const Vec3& theta);
  /// Accepts any near-orthogonal matrix with positive determinant.
  static Rotation from_matrix(const Mat3& m);
  static Rotation about_axis(int axis, double angle);

  const Vec3& theta() const { return theta_; }
  const Mat3& matrix() const { return m_; }

  Rotation inverse() const;
  Rotation operator*(const Rotation& rhs) const;
  Vec3 operator*(const Vec3& x) const { return m_ * x; }

  /// max |R^T R - I| entrywise plus |det R - 1|.
  double orthonormality_defect() const;
  bool is_identity() const { return theta_.isZero(0.0) && m_ == Mat3::Identity(); }

 private:
  Rotation(const Vec3& theta, const Mat3& m) : theta_(theta), m_(m) {}
  Vec3 theta_;
  Mat3 m_;
};

Mat3 skew(const Vec3& w);
/// Nearest rotation in the Frobenius sense.
Mat3 polar_orthonormalize(const Mat3& m);
/// Axis-angle vector of a rotation matrix, angle in [0, pi].
Vec3 axis_angle_of(const Mat3& r);

}  // namespace galdual
