#pragma once

#include "fluidsurf/fespace.hpp"

#include <functional>

namespace fluidsurf {

/// Geometric quantities of the curved surface at one reference point.
///
/// Sign convention: the normal points outward (consistent with the mesh
/// orientation), B = -grad_P(normal) and H = tr B, so the unit sphere has
/// H = -2 and H normal = Laplace-Beltrami of the position.
struct GeomFrame {
  Vec3 position = Vec3::Zero();
  Mat32 tangents = Mat32::Zero();    ///< columns dX/dxi, dX/deta
  Mat2 metric_inv = Mat2::Identity(); ///< inverse first fundamental form
  Vec3 normal = Vec3::Zero();
  Mat3 projection = Mat3::Identity();
  Mat3 shape = Mat3::Zero();
  double mean_curvature = 0.0;       ///< tr B of the discrete geometry
  double weight = 0.0;               ///< sqrt(det g) times the quadrature weight

  /// Surface gradient of a function with the given reference gradient.
  Vec3 surface_gradient(const Vec2& ref_grad) const { return tangents * (metric_inv * ref_grad); }
  /// ||B||^2 - (tr B)^2 / 2.
  double beta() const { return shape.squaredNorm() - 0.5 * mean_curvature * mean_curvature; }
};

/// Frame of element t at reference point xi. The shape operator comes from
/// differentiating the discrete normal inside the element (zero for k = 1).
/// Throws GeometryError on a degenerate Jacobian.
GeomFrame frame_at(const CurvedGeometry& geometry, Index t, const Vec2& xi, double quad_weight = 1.0);

/// Same, from precomputed geometry-basis evaluations (with hessians).
GeomFrame frame_from(const Eigen::Matrix3Xd& element_nodes, const LagrangeElement::Eval& basis, double quad_weight);

/// Surface gradient of a scalar FE field on element t.
Vec3 surface_gradient(const FESpace& space, const VecX& field, Index t, const Vec2& xi, const GeomFrame& frame);

struct TangentialGradient {
  Mat3 componentwise = Mat3::Zero(); ///< row i = surface gradient of component i
  Mat3 grad_p = Mat3::Zero();        ///< P (componentwise)
  double div_p = 0.0;                ///< tr(P grad w) = tr(componentwise)
};

/// grad_P w = P grad(w^e) P and div_P w of a 3-component FE field.
TangentialGradient tangential_gradient(const FESpace& space, const VecX& field, Index t, const Vec2& xi,
                                       const GeomFrame& frame);

/// Field value of a scalar (1 entry) or vector (3 entries) space at xi.
double evaluate_scalar(const FESpace& space, const VecX& field, Index t, const Vec2& xi);
Vec3 evaluate_vector(const FESpace& space, const VecX& field, Index t, const Vec2& xi);

struct QuadPoint {
  Index element;
  int index;
  const Vec2& xi;
  const GeomFrame& frame;
};

/// Default quadrature degree for assembled forms: 2k + 2.
int default_quadrature_degree(int order);

/// Sum over elements and quadrature points of f(point) * measure weight.
/// degree <= 0 selects the default degree for the geometry order.
double integrate(const CurvedGeometry& geometry, const std::function<double(const QuadPoint&)>& f, int degree = 0);
Vec3 integrate_vector(const CurvedGeometry& geometry, const std::function<Vec3(const QuadPoint&)>& f,
                      int degree = 0);

double surface_area(const CurvedGeometry& geometry, int degree = 0);
/// Enclosed volume (1/3) integral of x . normal.
double enclosed_volume(const CurvedGeometry& geometry, int degree = 0);
/// Area-weighted centroid of the surface.
Vec3 surface_centroid(const CurvedGeometry& geometry, int degree = 0);

/// Frames at every quadrature point of every element, element-major.
class FrameCache {
public:
  FrameCache(const CurvedGeometry& geometry, int degree = 0);

  const QuadratureRule& rule() const { return rule_; }
  const GeomFrame& frame(Index t, int q) const { return frames_[t * rule_.size() + q]; }
  Index num_elements() const { return num_elements_; }

private:
  QuadratureRule rule_;
  Index num_elements_;
  std::vector<GeomFrame> frames_;
};

/// Basis evaluations of a space's reference element at a rule's points.
std::vector<LagrangeElement::Eval> tabulate(const LagrangeElement& element, const QuadratureRule& rule,
                                            bool with_hessians = false);

} // namespace fluidsurf
