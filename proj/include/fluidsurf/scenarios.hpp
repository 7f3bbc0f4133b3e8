#pragma once

#include "fluidsurf/stepper.hpp"

#include <string>

namespace fluidsurf {

struct ScenarioConfig {
  std::string name = "killing"; ///< killing | perturbed | sphere | mesh
  int frequency = 7;            ///< geodesic subdivision of the icosahedron
  double radius = 1.0;
  double r0 = 0.4;              ///< perturbation amplitude
  double omega0 = 1.0;          ///< initial rotation rate (killing)
  std::string mesh_path;        ///< OFF or OBJ file (mesh)
};

struct Scenario {
  State state;
  CurvedGeometry geometry;
  bool volume_constraint = true; ///< scenario default
  std::string header;           ///< one-line description (reduced volume etc.)
};

/// Unit sphere rotating rigidly about z: u = omega0 (x1, -x0, 0), p = 0,
/// H from the stand-alone curvature solve. Volume constraint off.
Scenario killing_scenario(const ScenarioConfig& sc, int order);
/// r(theta, psi) = 1 + r0 cos(theta) sin(3 psi), u = 0. Volume constraint on.
Scenario perturbed_sphere_scenario(const ScenarioConfig& sc, int order);
/// Sphere at rest. Volume constraint on.
Scenario sphere_scenario(const ScenarioConfig& sc, int order);
/// Closed mesh from file with flat order-k elements, u = 0.
Scenario mesh_scenario(const ScenarioConfig& sc, int order);
Scenario make_scenario(const ScenarioConfig& sc, int order);

double reduced_volume(double area, double volume);

struct ConvergenceLevel {
  int frequency = 0;
  double h = 0.0, tau = 0.0;
  double e = 0.0;  ///< max over time of ||div_P u||
  double eA = 0.0; ///< max over time of dA
  double eV = 0.0; ///< max over time of dV
  double eh = 0.0; ///< final E_H
};

struct ConvergenceTable {
  std::vector<ConvergenceLevel> levels;
  std::vector<double> eoc_e, eoc_a, eoc_v, eoc_h;
  bool monotone = true; ///< every error sequence decreasing
};

/// Runs one scenario per frequency with tau = tau_scale * h^time_power (0: the
/// configured tau) to t_end. e_H errors are |E_H - E_H(finest)|, so the
/// finest level has no e_H entry.
ConvergenceTable convergence_study(const ScenarioConfig& scenario, const std::vector<int>& frequencies,
                                   const SimulationConfig& config, double tau_scale, double time_power);

/// EOC row for a synthetic table, exposed for checks.
std::vector<double> eoc_table(const std::vector<double>& errors, const std::vector<double>& h);

} // namespace fluidsurf
