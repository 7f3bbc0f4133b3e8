#pragma once

#include "fluidsurf/assembly.hpp"

#include <memory>

namespace fluidsurf {

struct LinearSolverConfig {
  enum class Method { direct, iterative };
  Method method = Method::direct;
  double tolerance = 1e-10; ///< relative residual ||A x - b|| / ||b||
  int max_iterations = 2000;
  void validate() const;
};

/// Sparse LU (UMFPACK) or BiCGSTAB with an ILUT preconditioner. The direct
/// path keeps its symbolic analysis, which depends on the sparsity pattern
/// only, and reuses it while the pattern is unchanged. Every solve is checked
/// against the relative residual tolerance.
class LinearSolver {
public:
  explicit LinearSolver(const LinearSolverConfig& config = {});
  LinearSolver(const SparseMatrix& matrix, const LinearSolverConfig& config);
  ~LinearSolver();
  LinearSolver(LinearSolver&&) noexcept;
  LinearSolver& operator=(LinearSolver&&) noexcept;

  void factorize(const SparseMatrix& matrix);
  /// Throws SolverError (carrying the residual) when the tolerance is missed.
  VecX solve(const VecX& rhs) const;
  double relative_residual(const VecX& x, const VecX& rhs) const;
  /// Number of symbolic analyses performed so far.
  int analyses() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

VecX solve_linear(const SparseMatrix& matrix, const VecX& rhs, const LinearSolverConfig& config);

struct NewtonReport {
  double lambda = 0.0;
  int iterations = 0; ///< lambda updates, each followed by a confirming solve
  double phi = 0.0;   ///< final integral of u . normal
  double dphi = 0.0;  ///< dPhi/dlambda from the derivative solve
  bool converged = false;
};

struct NewtonResult {
  VecX solution;
  NewtonReport report;
};

/// Scalar Newton on the volume multiplier: base solve at lambda = 0,
/// derivative solve with right-hand side -tau g, then lambda updates until
/// |Phi| < eps. Phi is affine, so one update is expected; more than
/// max_iterations updates is an error. One factorization serves all solves.
NewtonResult newton_volume(const SparseSystem& system, const LinearSolverConfig& config, double eps,
                           int max_iterations = 2);
NewtonResult newton_volume(const SparseSystem& system, const LinearSolver& solver, double eps,
                           int max_iterations = 2);

/// Phi(solution) = g . solution, i.e. the integral of u . normal.
double volume_flux(const SparseSystem& system, const VecX& solution);

} // namespace fluidsurf
