#pragma once

#include "fluidsurf/solver.hpp"

#include <vector>

namespace fluidsurf {

struct DiagnosticsRecord {
  double t = 0.0;
  double e = 0.0; ///< ||div_P u||_L2
  double dA = 0.0, dV = 0.0;
  double ekin = 0.0, eh = 0.0;
  double ds = 0.0, qs = 0.0;
  double lambda = 0.0;
  int newton_iters = 0;
  double phi = 0.0;
};

double inextensibility_error(const FESpace& velocity, const VecX& u, const CurvedGeometry& geometry);

struct AreaVolume {
  double area = 0.0, volume = 0.0, dA = 0.0, dV = 0.0;
};
AreaVolume area_volume(const CurvedGeometry& geometry, double area0, double volume0);

struct Energies {
  double kinetic = 0.0, bending = 0.0;
};
/// E_kin = 1/(2 Re) int |u|^2, E_H = 1/(2 Be) int H^2 with the solved H.
Energies energies(const TaylorHoodSpace& space, const State& state, const CurvedGeometry& geometry,
                  const Physics& physics);

struct ShapeMetrics {
  double ds = 0.0; ///< int (tr B - H_ref)^2, H_ref = -2 / sqrt(|S| / 4 pi)
  double rs = 1.0; ///< max |x - c| / min |x - c| over geometry nodes, c the area centroid
};
ShapeMetrics shape_metrics(const CurvedGeometry& geometry);

struct MeshQuality {
  double qs = 1.0;                 ///< max h_T / min h_T
  std::vector<double> qt;          ///< per triangle
  std::vector<double> bin_edges;   ///< bins + 1 edges; the last bin collects the overflow
  std::vector<long> histogram;
};
/// q_T = longest / shortest straight edge among the edges touching a
/// vertex of T.
MeshQuality mesh_quality(const CurvedGeometry& geometry, int bins = 20, double q_max = 3.0);

/// Rigid rotation about the z axis used by the Killing scenario.
inline Vec3 rotation_field(const Vec3& x) { return {x.y(), -x.x(), 0.0}; }

struct KillingResiduals {
  double omega = 0.0;
  double r0 = 0.0, r1 = 0.0, r2 = 0.0, r3 = 0.0;
};
/// omega is the L2 projection coefficient of u on rotation_field. With
/// F = -(x0, x1, 0) (the convective acceleration of the unit rotation):
/// r2 = ||omega^2 P F + grad_S p||, r3 = ||omega^2 F.nu + p H - (1/Be)(-Lap H - H beta)||.
/// Lap H is the weak Laplace-Beltrami of the solved H (mass-matrix solve).
/// centripetal_sign = -1 evaluates r2/r3 with F negated instead.
KillingResiduals killing_residuals(const TaylorHoodSpace& space, const State& state, const CurvedGeometry& geometry,
                                   double be, double centripetal_sign = 1.0);

/// Weak Laplace-Beltrami: w with (w, z) = -(grad f, grad z) for all z.
VecX weak_laplacian(const FESpace& space, const CurvedGeometry& geometry, const VecX& f);

struct ReferenceValues {
  double area0 = 0.0, volume0 = 0.0;
  static ReferenceValues of(const CurvedGeometry& geometry);
};

DiagnosticsRecord record(const TaylorHoodSpace& space, const State& state, const CurvedGeometry& geometry,
                         const Physics& physics, const ReferenceValues& ref, const NewtonReport& newton);

/// EOC_i = log(e_i / e_{i+1}) / log(h_i / h_{i+1}).
std::vector<double> eoc(const std::vector<double>& errors, const std::vector<double>& h);

} // namespace fluidsurf
