#include "galdual/groups.hpp"

#include <cmath>
#include <limits>

namespace galdual {

std::string to_string(Flavor f) { return f == Flavor::galilei ? "galilei" : "dual"; }

Flavor flavor_from_string(const std::string& s) {
  if (s == "galilei") return Flavor::galilei;
  if (s == "dual" || s == "dual-galilei") return Flavor::dual;
  throw Error("unknown flavor '" + s + "'");
}

GroupElement GroupElement::identity(Flavor f, double c) {
  GroupElement g;
  g.flavor = f;
  g.c = c;
  return g;
}

GroupElement GroupElement::make(Flavor f, double b, const Vec3& a, const Vec3& v,
                                const Rotation& R, double c) {
  GroupElement g;
  g.flavor = f;
  g.b = b;
  g.a = a;
  g.v = v;
  g.R = R;
  g.c = c;
  return g;
}

static void check_same(const GroupElement& x, const GroupElement& y) {
  if (x.flavor != y.flavor)
    throw MismatchError("cannot combine " + to_string(x.flavor) + " and " + to_string(y.flavor) +
                        " elements");
  if (x.c != y.c) throw MismatchError("elements carry different c");
}

GroupElement compose(const GroupElement& g2, const GroupElement& g1) {
  check_same(g2, g1);
  GroupElement g;
  g.flavor = g2.flavor;
  g.c = g2.c;
  const Vec3 Ra1 = g2.R * g1.a;
  g.v = g2.v + g2.R * g1.v;
  g.R = g2.R * g1.R;
  if (g2.flavor == Flavor::galilei) {
    g.b = g2.b + g1.b;
    g.a = g2.a + Ra1 + g1.b * g2.v;
  } else {
    g.b = g2.b + g1.b - g2.v.dot(Ra1) / (g.c * g.c);
    g.a = g2.a + Ra1;
  }
  return g;
}

GroupElement inverse(const GroupElement& g) {
  GroupElement h;
  h.flavor = g.flavor;
  h.c = g.c;
  h.R = g.R.inverse();
  const Mat3& Rt = h.R.matrix();
  h.v = -(Rt * g.v);
  if (g.flavor == Flavor::galilei) {
    h.b = -g.b;
    h.a = -(Rt * (g.a - g.b * g.v));
  } else {
    h.b = -g.b - g.v.dot(g.a) / (g.c * g.c);
    h.a = -(Rt * g.a);
  }
  return h;
}

Mat5 to_affine(const GroupElement& g) {
  Mat5 m = Mat5::Zero();
  m.block<3, 3>(0, 0) = g.R.matrix();
  m.block<3, 1>(0, 4) = g.a;
  m(3, 3) = 1.0;
  m(3, 4) = g.c * g.b;
  m(4, 4) = 1.0;
  if (g.flavor == Flavor::galilei) {
    m.block<3, 1>(0, 3) = g.beta();
  } else {
    m.block<1, 3>(3, 0) = -(g.R.inverse().matrix() * g.v).transpose() / g.c;
  }
  return m;
}

Event act(const GroupElement& g, const Event& e) {
  Eigen::Matrix<double, 5, 1> x;
  x << e.x, g.c * e.t, 1.0;
  const Eigen::Matrix<double, 5, 1> y = to_affine(g) * x;
  return Event{y.head<3>(), y(3) / g.c};
}

Mat4 homogeneous_matrix(const GroupElement& g, HomogeneousKind kind) {
  Mat4 m = Mat4::Identity();
  m.block<3, 3>(0, 0) = g.R.matrix();
  if (kind == HomogeneousKind::D) {
    m.block<3, 1>(0, 3) = g.beta();
  } else {
    m.block<1, 3>(3, 0) = -(g.R.inverse().matrix() * g.v).transpose() / g.c;
  }
  return m;
}

double pairing_invariance(const GroupElement& g, const Vec4& x, const Vec4& y) {
  const Vec4 xp = homogeneous_matrix(g, HomogeneousKind::D) * x;
  const Vec4 yp = homogeneous_matrix(g, HomogeneousKind::C) * y;
  return std::abs(xp.dot(yp) - x.dot(y));
}

double distance(const GroupElement& x, const GroupElement& y) {
  if (x.flavor != y.flavor) return std::numeric_limits<double>::infinity();
  double d = std::abs(x.b - y.b);
  d = std::max(d, (x.a - y.a).cwiseAbs().maxCoeff());
  d = std::max(d, (x.v - y.v).cwiseAbs().maxCoeff());
  d = std::max(d, (x.R.matrix() - y.R.matrix()).cwiseAbs().maxCoeff());
  return d;
}

double lorentz_gamma(double beta) {
  if (!(std::abs(beta) < 1.0)) throw DomainError("|beta| must be below 1");
  return 1.0 / std::sqrt(1.0 - beta * beta);
}

Eigen::Matrix3d poincare2_matrix(const Poincare2Element& p) {
  const double gm = lorentz_gamma(p.beta);
  Eigen::Matrix3d m;
  m << gm, gm * p.beta, p.a, gm * p.beta, gm, p.c * p.b, 0, 0, 1;
  return m;
}

void to_json(nlohmann::json& j, const GroupElement& g) {
  const Vec3& t = g.R.theta();
  j = nlohmann::json{{"flavor", to_string(g.flavor)},
                     {"b", g.b},
                     {"a", {g.a.x(), g.a.y(), g.a.z()}},
                     {"v", {g.v.x(), g.v.y(), g.v.z()}},
                     {"theta", {t.x(), t.y(), t.z()}},
                     {"c", g.c}};
}

static Vec3 vec3_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return Vec3::Zero();
  const auto& a = j.at(key);
  if (!a.is_array() || a.size() != 3) throw Error(std::string("field '") + key + "' must be a 3-array");
  return Vec3(a[0].get<double>(), a[1].get<double>(), a[2].get<double>());
}

void from_json(const nlohmann::json& j, GroupElement& g) {
  if (!j.is_object()) throw Error("group element must be a JSON object");
  g.flavor = flavor_from_string(j.value("flavor", std::string("galilei")));
  g.b = j.value("b", 0.0);
  g.a = vec3_field(j, "a");
  g.v = vec3_field(j, "v");
  g.R = Rotation::from_axis_angle(vec3_field(j, "theta"));
  g.c = j.value("c", 1.0);
  if (!(g.c > 0)) throw Error("c must be positive");
}

}  // namespace galdual
