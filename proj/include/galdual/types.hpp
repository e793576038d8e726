#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace galdual {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat5 = Eigen::Matrix<double, 5, 5>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using MatX = Eigen::MatrixXd;
using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different groups, algebras, limits or representations.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the domain of the operation (|beta| >= 1, E = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad JSON, schema violations, corrupt containers.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace galdual
