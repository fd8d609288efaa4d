#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pitchfork/model.hpp"
#include "pitchfork/types.hpp"

namespace pitchfork {

struct Trajectory {
  std::vector<double> times;  // strictly increasing from 0
  std::vector<Point> states;
  /// Integration aborted after the state norm exceeded 1e12; times/states
  /// hold the finite prefix.
  bool divergent = false;

  const Point& final_state() const { return states.back(); }
  double final_time() const { return times.back(); }
};

/// Classical fixed-step fourth-order Runge-Kutta; the last step is shortened
/// so the final time equals t_end exactly.
Trajectory integrate(const ModelInstance& model, const Point& x0, double t_end, double dt);

struct ConvergenceResult {
  bool converged = false;
  /// First sample time from which the trajectory stays within tol of the
  /// target through t_max. Present only when converged.
  std::optional<double> first_hit_time;
  bool divergent = false;
};

/// True when the trajectory from x0 enters and remains within tol of target:
/// every sample over the trailing 10% of the run must be inside the ball,
/// which rejects transient passes.
ConvergenceResult converges_to(const ModelInstance& model, const Point& x0, const Point& target,
                               double tol, double t_max, double dt = 0.01);

struct ProbeFailure {
  double param;
  Point initial;
};

struct BasinProbeReport {
  std::vector<double> param_grid;
  double radius = 0.0;
  int sample_count = 0;
  std::vector<ProbeFailure> failures;
  bool uniform() const { return failures.empty(); }
};

/// Probes whether a fixed neighborhood of the equilibrium branch stays inside
/// its basin across the parameter grid: for each grid value, trajectories
/// start from deterministically placed points on the sphere of the given
/// radius around branch(param) (equal angles in 2D, the two endpoints in 1D)
/// and must converge back to the branch point.
BasinProbeReport uniformity_probe(const ModelFamily& family,
                                  const std::vector<double>& param_grid,
                                  const std::function<Point(double)>& branch, double radius,
                                  int samples, double tol, double t_max, double dt = 0.01);

}  // namespace pitchfork
