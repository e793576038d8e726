#pragma once

#include <cstdint>

#include "galdual/groups.hpp"

namespace galdual {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

/// SplitMix64 in counter mode. Draw i (i = 0, 1, ...) of stream s under seed k is
///   mix64(key + (i + 1) * 0x9E3779B97F4A7C15),  key = k ^ mix64(s),
/// so any draw can be recomputed from (seed, stream, index) alone. Since mix64(0) = 0,
/// stream 0 is the reference SplitMix64 sequence for the seed.
/// Doubles take the top 53 bits: u = (x >> 11) * 2^-53.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t at(std::uint64_t index) const;
  std::uint64_t next() { return at(counter_++); }
  std::uint64_t counter() const { return counter_; }

  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform on the unit sphere (Marsaglia's z / phi parametrization).
  Vec3 unit_vector();
  /// Uniform in the ball of radius r.
  Vec3 in_ball(double r);
  /// Rotation about a uniform axis by an angle uniform in [0, max_angle).
  Rotation rotation(double max_angle = kPi);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

struct ElementRanges {
  double b = 1.0;      // |b| <= b
  double a = 1.0;      // |a| <= a
  double v = 0.5;      // |v| <= v
  double angle = kPi;  // rotation angle < angle
};

GroupElement random_element(CounterRng& rng, Flavor f, double c = 1.0, const ElementRanges& r = {});

}  // namespace galdual
