#pragma once

#include "fluidsurf/geomops.hpp"

#include <Eigen/SparseCore>

#include <limits>

namespace fluidsurf {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;

/// Solution tuple at one time level. The geometry nodes X live in the
/// CurvedGeometry passed alongside; Y is the last surface update.
struct State {
  VecX u, p, h, y;
  double lambda = 0.0;
  double t = 0.0;
  long step = 0;

  /// Zero state sized for the given spaces.
  static State zeros(const TaylorHoodSpace& space);
  void check_sizes(const TaylorHoodSpace& space) const;
};

struct Physics {
  double re = 1.0;
  double be = 1.0; ///< may be +inf: no bending force
  double tau = 1e-2;
  double inv_be() const { return std::isinf(be) ? 0.0 : 1.0 / be; }
};

/// Bit flags selecting the terms of the block form; tests use them to look
/// at single contributions.
enum Term : unsigned {
  kMass = 1u << 0,
  kConvection = 1u << 1,
  kViscous = 1u << 2,
  kPressure = 1u << 3,
  kBending = 1u << 4,
  kDivergence = 1u << 5,
  kNormalMotion = 1u << 6,
  kCurvature = 1u << 7,
  kAllTerms = 0xffu,
};

struct AssemblyOptions {
  unsigned terms = kAllTerms;
  /// Adds one row/column enforcing a mean-zero pressure.
  bool pressure_gauge = false;
  int quadrature_degree = 0; ///< 0: 2k + 2
};

/// Matrix and right-hand sides over the layout u | p | H | Y (plus one
/// trailing gauge row when enabled). The full right-hand side for a given
/// multiplier is rhs - tau * lambda * g.
struct SparseSystem {
  SparseMatrix matrix;
  VecX rhs;
  VecX g;
  double tau = 0.0;
  bool pressure_gauge = false;
  Index size() const { return matrix.rows(); }
};

/// Assembles the semi-implicit step on the geometry at t^n. The transport
/// velocity is v = u^n - Y^n / tau.
SparseSystem assemble(const TaylorHoodSpace& space, const CurvedGeometry& geometry, const State& state,
                      const Physics& physics, const AssemblyOptions& options = {});

/// Scalar mass and stiffness matrices of an order-m scalar space.
SparseMatrix mass_matrix(const FESpace& space, const CurvedGeometry& geometry, int degree = 0);
SparseMatrix stiffness_matrix(const FESpace& space, const CurvedGeometry& geometry, int degree = 0);

/// Solved curvature at t = 0: vector curvature K from (K_i, Z) = -(grad X_i,
/// grad Z), then H the L2 projection of K . normal.
VecX initial_curvature(const FESpace& curvature_space, const CurvedGeometry& geometry);

struct PressureIdentityReport {
  double block = 0.0;    ///< (p, div_P phi) read off the assembled pressure block
  double identity = 0.0; ///< (-grad_S p - p H normal, phi) by quadrature
  double difference() const { return std::abs(block - identity); }
};

/// Compares the two sides of (p, div_P phi) = (-grad_S p - p H normal, phi)
/// for interpolated p and phi. Self-test only.
PressureIdentityReport apply_identity_pressure_test(const TaylorHoodSpace& space, const CurvedGeometry& geometry,
                                                    const std::function<double(const Vec3&)>& p,
                                                    const std::function<Vec3(const Vec3&)>& phi);

} // namespace fluidsurf
