#pragma once

#include "fluidsurf/lagrange.hpp"
#include "fluidsurf/types.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace fluidsurf {

using Edge = std::array<Index, 2>;

/// Piecewise-linear closed triangulation with edge adjacency.
///
/// Edges are stored with ascending vertex ids and numbered in lexicographic
/// order, so the edge numbering is a pure function of the triangle list.
/// Local edge e of a triangle joins its corners e and (e + 1) % 3.
class ReferenceMesh {
public:
  ReferenceMesh() = default;
  /// Builds adjacency. Throws MeshError on out-of-range indices or edges
  /// shared by more than two triangles; call validate() for the full check.
  ReferenceMesh(std::vector<Vec3> vertices, std::vector<Triangle> triangles);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::array<Index, 3>>& triangle_edges() const { return triangle_edges_; }
  /// Two incident triangles per edge; -1 marks a missing neighbour.
  const std::vector<std::array<Index, 2>>& edge_triangles() const { return edge_triangles_; }

  Index num_vertices() const { return static_cast<Index>(vertices_.size()); }
  Index num_triangles() const { return static_cast<Index>(triangles_.size()); }
  Index num_edges() const { return static_cast<Index>(edges_.size()); }

  /// Human-readable list of violated invariants (empty when valid): closed
  /// 2-manifold, consistent orientation, no degenerate triangles.
  std::vector<std::string> problems() const;
  /// Throws MeshError listing the first problems found.
  void validate() const;

private:
  std::vector<Vec3> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
  std::vector<std::array<Index, 3>> triangle_edges_;
  std::vector<std::array<Index, 2>> edge_triangles_;
};

/// Flips triangles so that every shared edge is traversed in opposite
/// directions, then makes the enclosed signed volume positive (outward
/// orientation). Returns false if the surface is not orientable.
bool orient_consistently(const std::vector<Vec3>& vertices, std::vector<Triangle>& triangles);

/// Global numbering of the order-m Lagrange nodes of a mesh.
///
/// Vertex nodes come first (by vertex id), then edge nodes keyed by
/// (edge id, position from the lower vertex id), then interior nodes keyed by
/// (triangle id, local interior index).
class NodeNumbering {
public:
  NodeNumbering(const ReferenceMesh& mesh, int order);

  int order() const { return element_.order(); }
  const LagrangeElement& element() const { return element_; }
  Index num_nodes() const { return num_nodes_; }
  int nodes_per_element() const { return element_.size(); }
  /// Global node ids of triangle t in local node order.
  std::span<const Index> element_nodes(Index t) const {
    return {table_.data() + t * element_.size(), static_cast<std::size_t>(element_.size())};
  }

private:
  LagrangeElement element_;
  Index num_nodes_ = 0;
  std::vector<Index> table_;
};

/// Order-k Lagrange geometry map on top of a reference triangulation.
/// Nodes shared between triangles are stored once.
class CurvedGeometry {
public:
  CurvedGeometry(std::shared_ptr<const ReferenceMesh> mesh, int order, std::vector<Vec3> nodes);
  CurvedGeometry(std::shared_ptr<const ReferenceMesh> mesh, std::shared_ptr<const NodeNumbering> numbering,
                 std::vector<Vec3> nodes);

  /// Places every order-k node at map(p), with p the node's position on the
  /// flat reference triangle.
  static CurvedGeometry lift(std::shared_ptr<const ReferenceMesh> mesh, int order,
                             const std::function<Vec3(const Vec3&)>& map);

  int order() const { return numbering_->order(); }
  const ReferenceMesh& mesh() const { return *mesh_; }
  const std::shared_ptr<const ReferenceMesh>& mesh_ptr() const { return mesh_; }
  const NodeNumbering& numbering() const { return *numbering_; }
  const std::shared_ptr<const NodeNumbering>& numbering_ptr() const { return numbering_; }
  const std::vector<Vec3>& nodes() const { return nodes_; }
  Index num_nodes() const { return static_cast<Index>(nodes_.size()); }

  /// Element geometry nodes as a 3 x n matrix (local node order).
  Eigen::Matrix3Xd element_nodes(Index t) const;
  /// Straight-line corner vertex of triangle t (local corner c).
  const Vec3& corner(Index t, int c) const { return nodes_[numbering_->element_nodes(t)[c]]; }

private:
  std::shared_ptr<const ReferenceMesh> mesh_;
  std::shared_ptr<const NodeNumbering> numbering_;
  std::vector<Vec3> nodes_;
};

/// Largest and smallest element size; h_T is the longest straight-line
/// distance between the three corner nodes of T.
struct MeshSize {
  double h_max = 0.0;
  double h_min = 0.0;
};
MeshSize mesh_size(const CurvedGeometry& geometry);
double element_size(const CurvedGeometry& geometry, Index t);

/// Translates every geometry node by the matching entry of y. Throws
/// GeometryError when the result has a degenerate or inverted element.
CurvedGeometry update_geometry(const CurvedGeometry& geometry, std::span<const Vec3> y);

/// Throws GeometryError unless the first fundamental form is SPD and the
/// element orientation is preserved at every point of the given rule.
void check_nondegenerate(const CurvedGeometry& geometry, const QuadratureRule& rule);

// ---------------------------------------------------------------------------
// Generators

/// Regular icosahedron inscribed in the unit sphere, outward oriented.
ReferenceMesh icosahedron();

/// Class-I geodesic subdivision: every icosahedron face split into
/// frequency^2 triangles, vertices projected onto the sphere.
ReferenceMesh geodesic_sphere_mesh(double radius, int frequency);

/// Recursive 4-way subdivision with radial projection after each level.
ReferenceMesh icosphere_mesh(double radius, int refinement_level);

struct SurfaceMesh {
  std::shared_ptr<const ReferenceMesh> mesh;
  CurvedGeometry geometry;
};

/// Icosphere whose order-k nodes are projected radially onto the sphere.
SurfaceMesh icosphere(double radius, int refinement_level, int order);
/// Same for the geodesic mesh of the given frequency.
SurfaceMesh geodesic_sphere(double radius, int frequency, int order);

/// r(theta, psi) = 1 + r0 cos(theta) sin(3 psi) times the unit direction,
/// where psi is the polar angle from +z and theta the azimuth in the xy-plane.
double perturbed_radius(double r0, const Vec3& direction);
/// Perturbed unit sphere over a geodesic mesh of the given frequency.
SurfaceMesh perturbed_sphere(double r0, int frequency, int order);
/// Perturbed unit sphere over an icosphere of the given refinement level.
SurfaceMesh perturbed_sphere_level(double r0, int refinement_level, int order);

/// Torus with major radius big_r and minor radius small_r around the z axis,
/// n_major x n_minor quad grid split into triangles; nodes mapped exactly.
SurfaceMesh torus(double big_r, double small_r, int n_major, int n_minor, int order);

} // namespace fluidsurf
