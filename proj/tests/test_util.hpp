#pragma once
#include <doctest.h>

#include "galdual/groups.hpp"

namespace galdual::test {

inline GroupElement el(Flavor f, double b, const Vec3& a, const Vec3& v, const Rotation& R = Rotation(),
                       double c = 1.0) {
  return GroupElement::make(f, b, a, v, R, c);
}

template <class A, class B>
double max_diff(const A& x, const B& y) {
  return (x - y).cwiseAbs().maxCoeff();
}

}  // namespace galdual::test
