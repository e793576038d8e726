#pragma once

#include <json.hpp>

#include <string>

#include "galdual/rotation.hpp"

namespace galdual {

/// Galilei is G(1:3): boosts shear space by time. Dual is G(3:1): boosts shear
/// time by position, and time translations are central.
enum class Flavor { galilei, dual };

std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

/// Group element (b, a, v, R). b is a time translation, a a space translation,
/// v a velocity; beta = v/c is what enters the matrices.
struct GroupElement {
  Flavor flavor = Flavor::galilei;
  double b = 0.0;
  Vec3 a = Vec3::Zero();
  Vec3 v = Vec3::Zero();
  Rotation R;
  double c = 1.0;

  static GroupElement identity(Flavor f, double c = 1.0);
  static GroupElement make(Flavor f, double b, const Vec3& a, const Vec3& v,
                           const Rotation& R = Rotation(), double c = 1.0);

  Vec3 beta() const { return v / c; }
};

GroupElement compose(const GroupElement& g2, const GroupElement& g1);
GroupElement inverse(const GroupElement& g);

/// 5x5 matrix acting on (x1, x2, x3, ct, 1).
Mat5 to_affine(const GroupElement& g);

struct Event {
  Vec3 x = Vec3::Zero();
  double t = 0.0;
};

/// Applies the affine realization to a spacetime event.
Event act(const GroupElement& g, const Event& e);

enum class HomogeneousKind { D, C };

/// 4x4 homogeneous part (translations are ignored). D acts on points (x, ct),
/// C = D^T(g^-1) acts on derivatives.
Mat4 homogeneous_matrix(const GroupElement& g, HomogeneousKind kind);

/// |<D x, C y> - <x, y>| with the Euclidean pairing on 4-vectors.
double pairing_invariance(const GroupElement& g, const Vec4& x, const Vec4& y);

/// Largest entrywise difference of all parameters; infinity on flavor mismatch.
double distance(const GroupElement& x, const GroupElement& y);

/// 1+1 dimensional Poincare element acting on (x, ct, 1).
struct Poincare2Element {
  double beta = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
};

double lorentz_gamma(double beta);
Eigen::Matrix3d poincare2_matrix(const Poincare2Element& p);

void to_json(nlohmann::json& j, const GroupElement& g);
void from_json(const nlohmann::json& j, GroupElement& g);

}  // namespace galdual
