#pragma once

#include "fluidsurf/diagnostics.hpp"

#include <functional>

namespace fluidsurf {

struct SimulationConfig {
  Physics physics;
  double t_end = 1.0;
  int order = 3;
  double newton_eps = 1e-6;
  int newton_max_iterations = 2;
  bool volume_constraint = true;
  /// Solve as usual but keep the surface fixed and drop Y (test switch).
  bool frozen_geometry = false;
  bool pressure_gauge = false;
  LinearSolverConfig solver;
  /// Start-up relaxation: at-rest steps of length relax_tau applied to the
  /// initial geometry and H before t = 0 (u, p untouched). Removes the
  /// mesh-scale curvature noise of nodes placed on an exact surface.
  int relax_steps = 10;
  double relax_tau = 1e-3;
  int diagnostics_every = 1;
  int snapshot_every = 0; ///< 0: first and last only
  int checkpoint_every = 0; ///< 0: none

  void validate() const;
  /// Number of steps from t = 0 to t_end.
  long num_steps() const;
};

struct StepResult {
  State state;
  CurvedGeometry geometry;
  NewtonReport newton;
};

/// Owns the finite element spaces and the linear solver so the symbolic
/// factorization is shared between steps. The spaces depend on the node
/// numbering only, which geometry updates keep.
class Stepper {
public:
  Stepper(const CurvedGeometry& geometry, SimulationConfig config);

  const TaylorHoodSpace& space() const { return space_; }
  const SimulationConfig& config() const { return config_; }

  /// Assemble on S^n, solve (with the volume Newton when enabled), move the
  /// nodes by Y, carry u, p, H over by nodal identification.
  StepResult step(const State& state, const CurvedGeometry& geometry);

private:
  SimulationConfig config_;
  TaylorHoodSpace space_;
  LinearSolver solver_;
};

/// Runs config.relax_steps at-rest steps (u = p = 0, constraint as
/// configured) and keeps the resulting geometry and H. Call before taking
/// reference area and volume.
void relax_initial(State& state, CurvedGeometry& geometry, const SimulationConfig& config);

/// One step with freshly built spaces and solver.
StepResult time_step(const State& state, const CurvedGeometry& geometry, const SimulationConfig& config);

struct RunSinks {
  std::function<void(const DiagnosticsRecord&)> record;
  std::function<void(const State&, const CurvedGeometry&)> snapshot;
  std::function<void(const State&, const CurvedGeometry&, const ReferenceValues&)> checkpoint;
};

struct RunResult {
  State state;
  CurvedGeometry geometry;
};

/// Steps from state.step until num_steps(). A fresh run (step 0) emits the
/// record of the initial state; a restart continues after its checkpoint.
/// Snapshots at the first and last state and every snapshot_every steps.
RunResult run(const State& initial, const CurvedGeometry& geometry, const SimulationConfig& config,
              const ReferenceValues& reference, const RunSinks& sinks = {});

} // namespace fluidsurf
