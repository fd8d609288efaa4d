#pragma once

#include <optional>
#include <vector>

#include "pitchfork/model.hpp"
#include "pitchfork/types.hpp"

namespace pitchfork {

enum class EquilibriumSource { closed_form, newton };

struct EquilibriumPoint {
  Point location;
  /// Max-abs of the field evaluated at location.
  double residual_norm = 0.0;
  EquilibriumSource source = EquilibriumSource::newton;
  /// Set by closed_form_equilibria at a = 1, where the three central roots
  /// collapse into one.
  bool degenerate = false;
};

struct NewtonResult {
  enum class Status { converged, singular_jacobian, max_iterations, left_domain };
  Status status = Status::max_iterations;
  EquilibriumPoint point;  // meaningful only when converged
  int iterations = 0;
  bool ok() const { return status == Status::converged; }
};

/// Plain Newton iteration with the analytic Jacobian, no line search. The
/// residual test runs before the step, so a seed that is already a zero
/// succeeds even with a singular Jacobian there. Fails when |det J| drops
/// below 1e-14 at an iterate, on non-convergence within max_iter, or when an
/// iterate leaves the model domain.
NewtonResult newton_refine(const ModelInstance& model, const Point& seed, double tol,
                           int max_iter);

struct EnumerationOptions {
  int grid_per_axis = 25;
  double tol = 1e-10;
  int max_iter = 50;
  /// Max-norm radius below which two converged points are the same root.
  double dedup_radius = 1e-6;
  /// Seeds whose iterates leave box.inflated(inflation) are abandoned.
  double inflation = 1.5;
};

/// Newton from every node of a uniform grid over the box. Converged results
/// inside the box are deduplicated and sorted lexicographically by
/// coordinates. Individual seed failures are dropped; an empty result is
/// valid. Iteration continues past the residual tolerance until the step
/// stalls, so clusters around a degenerate root collapse inside the dedup
/// radius.
std::vector<EquilibriumPoint> find_equilibria(const ModelInstance& model, const Box& box,
                                              const EnumerationOptions& opts = {});
std::vector<EquilibriumPoint> find_equilibria(const ModelInstance& model, const Box& box,
                                              int grid_per_axis, double tol);

/// The four intersection points of the normal2d isoclines, in closed form:
/// (0,0), the two flanking points, and (a+1, a+1). For a < 1 the flanking
/// pair is complex and only the two real points are returned; at a = 1 the
/// collapsed origin is returned once, flagged degenerate.
std::vector<EquilibriumPoint> closed_form_equilibria(double a);

}  // namespace pitchfork
