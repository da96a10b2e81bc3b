#pragma once

#include <cstddef>

#include "vaxalloc/model.hpp"

namespace vaxalloc {

struct OracleConfig {
  std::size_t grid_points = 100001;
  bool refine = true;  // golden-section pass around the grid argmin
};

struct OracleResult {
  double v_blue = 0.0;
  double objective = 0.0;
  double grid_step = 0.0;   // spacing of the uniform grid over [0, V]
  double resolution = 0.0;  // final bracket width (grid_step when not refined)
};

/// Brute-force minimizer of the planner objective over [0, V].
///
/// Scans a uniform grid (ties go to the smaller allocation), then optionally
/// narrows the bracket around the grid argmin by golden-section search. The
/// refined point is only accepted if it strictly improves the objective.
/// The objective is evaluated in headcount form (vaccinated workers at full
/// productivity plus healthy unvaccinated ones), independently of the
/// closed-form solver.
OracleResult brute_force_optimum(const EconomyProfile& profile, const Scenario& scenario,
                                 const OracleConfig& config = {});

/// The oracle's objective evaluation, exposed for cross-checks.
double oracle_objective(const EconomyProfile& profile, const Scenario& scenario, double v_blue);

}  // namespace vaxalloc
