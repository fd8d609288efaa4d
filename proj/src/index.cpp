#include "pitchfork/index.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pitchfork {

namespace {

constexpr double kMinBoundaryField = 1e-9;
constexpr double kDegenerateDet = 1e-12;
constexpr double kWindingResidualCap = 0.05;
constexpr std::size_t kMaxSegments = std::size_t{1} << 16;

void require_2d(const ModelInstance& model, const Box& box, const char* op) {
  if (model.dimension() != 2 || box.dim() != 2)
    throw std::invalid_argument(std::string(op) + ": requires a 2D model and box");
}

}  // namespace

InwardCheckResult boundary_inward_check(const ModelInstance& model, const Box& box,
                                        int samples_per_edge) {
  require_2d(model, box, "boundary_inward_check");
  if (samples_per_edge < 16)
    throw std::invalid_argument("boundary_inward_check: samples_per_edge must be >= 16");

  const double xlo = box.lower()[0], xhi = box.upper()[0];
  const double ylo = box.lower()[1], yhi = box.upper()[1];

  InwardCheckResult result;
  result.pass = true;

  auto inward_ok = [&](const Point& p) {
    const Point f = model.evaluate(p);
    // Every face the point lies on binds; corners bind two faces. Strict
    // inequalities: a tangent or vanishing field is not inward.
    if (p[0] == xlo && !(f[0] > 0.0)) return false;
    if (p[0] == xhi && !(f[0] < 0.0)) return false;
    if (p[1] == ylo && !(f[1] > 0.0)) return false;
    if (p[1] == yhi && !(f[1] < 0.0)) return false;
    return true;
  };

  // Each edge contributes samples_per_edge points including its starting
  // corner; the closing corner belongs to the next edge, so every boundary
  // point is visited exactly once.
  const int n = samples_per_edge;
  auto sample_edge = [&](const Point& from, const Point& to) {
    for (int k = 0; k < n; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(n);
      const Point p = {from[0] + t * (to[0] - from[0]), from[1] + t * (to[1] - from[1])};
      if (!inward_ok(p)) {
        result.pass = false;
        result.violations.push_back(p);
      }
    }
  };
  sample_edge({xlo, ylo}, {xhi, ylo});
  sample_edge({xhi, ylo}, {xhi, yhi});
  sample_edge({xhi, yhi}, {xlo, yhi});
  sample_edge({xlo, yhi}, {xlo, ylo});
  return result;
}

PhIndexResult ph_index_sum(const ModelInstance& model, const Box& box,
                           const EnumerationOptions& opts) {
  require_2d(model, box, "ph_index_sum");
  PhIndexResult result;
  result.equilibria = find_equilibria(model, box, opts);

  int sum = 0;
  for (const EquilibriumPoint& eq : result.equilibria) {
    const double det = model.jacobian(eq.location).det();
    if (std::abs(det) <= kDegenerateDet) {
      result.degenerate = true;
      return result;
    }
    sum += det > 0.0 ? 1 : -1;
  }
  result.sum = sum;
  return result;
}

namespace {

/// Angle change from angle a0 to a1, wrapped into (-pi, pi].
double wrapped_delta(double a0, double a1) {
  double d = a1 - a0;
  while (d > M_PI) d -= 2.0 * M_PI;
  while (d <= -M_PI) d += 2.0 * M_PI;
  return d;
}

struct BoundaryWalk {
  const ModelInstance& model;
  double min_field = std::numeric_limits<double>::infinity();
  std::size_t segments = 0;
  bool cap_hit = false;
  double total = 0.0;

  double angle_at(const Point& p) {
    const Point f = model.evaluate(p);
    min_field = std::min(min_field, euclidean_norm(f));
    return std::atan2(f[1], f[0]);
  }

  // Straight-line segment between two boundary points on the same edge.
  void accumulate(const Point& p0, double a0, const Point& p1, double a1) {
    if (cap_hit) return;
    const double d = wrapped_delta(a0, a1);
    if (std::abs(d) <= 0.5 * M_PI) {
      total += d;
      ++segments;
      return;
    }
    if (segments >= kMaxSegments) {
      cap_hit = true;
      return;
    }
    const Point mid = {0.5 * (p0[0] + p1[0]), 0.5 * (p0[1] + p1[1])};
    if (mid == p0 || mid == p1) {  // cannot split further in floating point
      cap_hit = true;
      return;
    }
    const double am = angle_at(mid);
    accumulate(p0, a0, mid, am);
    accumulate(mid, am, p1, a1);
  }
};

}  // namespace

WindingResult winding_degree(const ModelInstance& model, const Box& box,
                             int initial_samples_per_edge) {
  require_2d(model, box, "winding_degree");
  if (initial_samples_per_edge < 1)
    throw std::invalid_argument("winding_degree: initial_samples_per_edge must be >= 1");

  const double xlo = box.lower()[0], xhi = box.upper()[0];
  const double ylo = box.lower()[1], yhi = box.upper()[1];

  // Positively oriented boundary loop; corners are sample nodes, so adaptive
  // splits never cross an edge break.
  std::vector<Point> nodes;
  const int n = initial_samples_per_edge;
  auto push_edge = [&](const Point& from, const Point& to) {
    for (int k = 0; k < n; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(n);
      nodes.push_back({from[0] + t * (to[0] - from[0]), from[1] + t * (to[1] - from[1])});
    }
  };
  push_edge({xlo, ylo}, {xhi, ylo});
  push_edge({xhi, ylo}, {xhi, yhi});
  push_edge({xhi, yhi}, {xlo, yhi});
  push_edge({xlo, yhi}, {xlo, ylo});

  BoundaryWalk walk{model};
  std::vector<double> angles(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) angles[i] = walk.angle_at(nodes[i]);

  WindingResult result;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::size_t j = (i + 1) % nodes.size();
    walk.accumulate(nodes[i], angles[i], nodes[j], angles[j]);
    if (walk.cap_hit) break;
  }
  result.segments = walk.segments;

  if (walk.min_field <= kMinBoundaryField) {
    result.failure = WindingResult::Failure::field_too_small;
    return result;
  }
  if (walk.cap_hit) {
    result.failure = WindingResult::Failure::refinement_cap;
    return result;
  }
  const double revolutions = walk.total / (2.0 * M_PI);
  const double rounded = std::round(revolutions);
  result.residual = std::abs(revolutions - rounded);
  if (result.residual >= kWindingResidualCap) {
    result.failure = WindingResult::Failure::residual_too_large;
    return result;
  }
  result.degree = static_cast<int>(rounded);
  return result;
}

IndexReport verify_ph(const ModelInstance& model, const Box& box, const VerifyOptions& opts) {
  require_2d(model, box, "verify_ph");
  IndexReport report{box};

  const InwardCheckResult inward = boundary_inward_check(model, box, opts.inward_samples_per_edge);
  report.inward_pass = inward.pass;
  report.violations = inward.violations;

  const PhIndexResult ph = ph_index_sum(model, box, opts.enumeration);
  report.ph_sum = ph.sum;
  report.ph_degenerate = ph.degenerate;
  report.equilibria = ph.equilibria;

  const WindingResult winding = winding_degree(model, box, opts.winding_samples_per_edge);
  report.winding = winding.degree;

  report.agree = report.ph_sum.has_value() && report.winding.has_value() &&
                 *report.ph_sum == *report.winding;
  return report;
}

}  // namespace pitchfork
