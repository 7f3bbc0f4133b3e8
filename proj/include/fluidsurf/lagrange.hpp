#pragma once

#include "fluidsurf/types.hpp"

#include <span>
#include <vector>

namespace fluidsurf {

/// Reference triangle with corners (0,0), (1,0), (0,1).
///
/// Local node ordering for order m: the three corners, then the interior
/// nodes of edge 0 (corner 0 -> 1), edge 1 (1 -> 2), edge 2 (2 -> 0), each
/// walked from its first corner, then the element-interior nodes row by row.
class LagrangeElement {
public:
  struct Eval {
    VecX values;
    Eigen::MatrixX2d grads;      ///< d/dxi, d/deta
    Eigen::MatrixX3d hessians;   ///< d2/dxi2, d2/dxideta, d2/deta2
  };

  explicit LagrangeElement(int order);

  int order() const { return order_; }
  int size() const { return static_cast<int>(lattice_.size()); }
  int interior_size() const { return (order_ - 1) * (order_ - 2) / 2; }

  /// Lattice coordinates (i, j) of local node a; node sits at (i/m, j/m).
  const std::array<int, 2>& lattice(int a) const { return lattice_[a]; }
  Vec2 node_point(int a) const;
  /// Inverse of lattice(): local index of lattice point (i, j), i + j <= m.
  int local_index(int i, int j) const { return lattice_lookup_[i * (order_ + 1) + j]; }
  /// Local index of the t-th node (1 <= t < m) on local edge e, counted from
  /// the edge's first corner.
  int edge_node(int edge, int t) const { return 3 + edge * (order_ - 1) + (t - 1); }

  void evaluate(const Vec2& xi, Eval& out, bool with_hessians = false) const;
  Eval evaluate(const Vec2& xi, bool with_hessians = false) const;

private:
  int order_;
  std::vector<std::array<int, 2>> lattice_;
  std::vector<int> lattice_lookup_;
};

/// Quadrature on the reference triangle; weights sum to 1/2.
struct QuadratureRule {
  int degree = 0;
  std::vector<Vec2> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

/// Rule exact for polynomials of total degree <= degree (1 <= degree <= 40).
QuadratureRule quadrature(int degree);

/// Gauss-Legendre nodes and weights on [0, 1].
void gauss_legendre01(int n, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace fluidsurf
