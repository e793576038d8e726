#include "galdual/random.hpp"

#include <cmath>

namespace galdual {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(seed ^ mix64(stream)) {}

std::uint64_t CounterRng::at(std::uint64_t index) const { return mix64(key_ + (index + 1) * kGolden); }

double CounterRng::uniform() { return double(next() >> 11) * 0x1.0p-53; }

Vec3 CounterRng::unit_vector() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, 2 * kPi);
  const double s = std::sqrt(std::max(0.0, 1 - z * z));
  return Vec3(s * std::cos(phi), s * std::sin(phi), z);
}

Vec3 CounterRng::in_ball(double r) {
  const Vec3 u = unit_vector();
  return u * (r * std::cbrt(uniform()));
}

Rotation CounterRng::rotation(double max_angle) {
  const Vec3 axis = unit_vector();
  return Rotation::from_axis_angle(axis * uniform(0.0, max_angle));
}

GroupElement random_element(CounterRng& rng, Flavor f, double c, const ElementRanges& r) {
  const double b = rng.uniform(-r.b, r.b);
  const Vec3 a = rng.in_ball(r.a);
  const Vec3 v = rng.in_ball(r.v);
  const Rotation R = rng.rotation(r.angle);
  return GroupElement::make(f, b, a, v, R, c);
}

}  // namespace galdual
