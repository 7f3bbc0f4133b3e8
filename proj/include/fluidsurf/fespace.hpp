#pragma once

#include "fluidsurf/lagrange.hpp"
#include "fluidsurf/mesh.hpp"

#include <functional>
#include <memory>

namespace fluidsurf {

/// Scalar (c = 1) or vector (c = 3) continuous Lagrange space of order m.
/// Vector DOFs are interleaved: dof = components * node + component.
class FESpace {
public:
  FESpace(std::shared_ptr<const ReferenceMesh> mesh, int order, int components);
  /// Reuses an existing node numbering (e.g. the geometry's).
  FESpace(std::shared_ptr<const ReferenceMesh> mesh, std::shared_ptr<const NodeNumbering> numbering,
          int components);

  int order() const { return numbering_->order(); }
  int components() const { return components_; }
  Index num_nodes() const { return numbering_->num_nodes(); }
  Index num_dofs() const { return components_ * numbering_->num_nodes(); }
  const NodeNumbering& numbering() const { return *numbering_; }
  const LagrangeElement& element() const { return numbering_->element(); }
  const ReferenceMesh& mesh() const { return *mesh_; }
  std::span<const Index> element_nodes(Index t) const { return numbering_->element_nodes(t); }

  Index dof(Index node, int component) const { return components_ * node + component; }

private:
  std::shared_ptr<const ReferenceMesh> mesh_;
  std::shared_ptr<const NodeNumbering> numbering_;
  int components_;
};

FESpace build_space(std::shared_ptr<const ReferenceMesh> mesh, int order, int components);

/// Positions of the order-m Lagrange nodes of the space on the curved
/// surface, i.e. the geometry map evaluated at the reference lattice points.
std::vector<Vec3> node_positions(const FESpace& space, const CurvedGeometry& geometry);

/// Nodal interpolation of a point function into a scalar space.
VecX interpolate(const FESpace& space, const CurvedGeometry& geometry, const std::function<double(const Vec3&)>& f);
/// Nodal interpolation of a vector point function into a 3-component space.
VecX interpolate(const FESpace& space, const CurvedGeometry& geometry, const std::function<Vec3(const Vec3&)>& f);

/// Velocity V_k^3 | pressure V_{k-1} | curvature V_k | update V_k^3, with
/// contiguous blocks in that order. Velocity, curvature and update share
/// the geometry node numbering.
class TaylorHoodSpace {
public:
  TaylorHoodSpace(const CurvedGeometry& geometry);

  int order() const { return velocity_.order(); }
  const FESpace& velocity() const { return velocity_; }
  const FESpace& pressure() const { return pressure_; }
  const FESpace& curvature() const { return curvature_; }
  const FESpace& update() const { return update_; }

  Index velocity_offset() const { return 0; }
  Index pressure_offset() const { return velocity_.num_dofs(); }
  Index curvature_offset() const { return pressure_offset() + pressure_.num_dofs(); }
  Index update_offset() const { return curvature_offset() + curvature_.num_dofs(); }
  Index num_dofs() const { return update_offset() + update_.num_dofs(); }

private:
  FESpace velocity_;
  FESpace pressure_;
  FESpace curvature_;
  FESpace update_;
};

} // namespace fluidsurf
