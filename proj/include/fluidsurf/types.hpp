#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fluidsurf {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat32 = Eigen::Matrix<double, 3, 2>;
using VecX = Eigen::VectorXd;

using Index = std::int64_t;
using Triangle = std::array<Index, 3>;

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MeshError : public Error {
public:
  using Error::Error;
};

/// Degenerate or inverted geometry (non-SPD first fundamental form).
class GeometryError : public Error {
public:
  using Error::Error;
};

class SolverError : public Error {
public:
  SolverError(const std::string& what, double residual = -1.0)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

private:
  double residual_;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace fluidsurf
