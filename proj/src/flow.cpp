#include "pitchfork/flow.hpp"

#include <cmath>
#include <stdexcept>

namespace pitchfork {

namespace {

constexpr double kOverflowNorm = 1e12;

Point axpy(const Point& x, double h, const Point& d) {
  Point y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + h * d[i];
  return y;
}

/// One RK4 step; returns nullopt when a stage leaves the model domain or
/// produces a non-finite value.
std::optional<Point> rk4_step(const ModelInstance& model, const Point& x, double h) {
  try {
    const Point k1 = model.evaluate(x);
    const Point k2 = model.evaluate(axpy(x, 0.5 * h, k1));
    const Point k3 = model.evaluate(axpy(x, 0.5 * h, k2));
    const Point k4 = model.evaluate(axpy(x, h, k3));
    Point out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      out[i] = x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (!all_finite(out)) return std::nullopt;
    return out;
  } catch (const std::domain_error&) {
    return std::nullopt;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace

Trajectory integrate(const ModelInstance& model, const Point& x0, double t_end, double dt) {
  if (!(t_end > 0.0)) throw std::invalid_argument("integrate: t_end must be > 0");
  if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be > 0");
  if (!model.in_domain(x0)) throw std::invalid_argument("integrate: x0 outside domain");

  Trajectory traj;
  traj.times.push_back(0.0);
  traj.states.push_back(x0);

  double t = 0.0;
  Point x = x0;
  while (t < t_end) {
    const double h = std::min(dt, t_end - t);
    const auto next = rk4_step(model, x, h);
    if (!next || max_norm(*next) > kOverflowNorm) {
      traj.divergent = true;
      return traj;
    }
    x = *next;
    t = (t_end - t <= dt) ? t_end : t + dt;
    traj.times.push_back(t);
    traj.states.push_back(x);
  }
  return traj;
}

ConvergenceResult converges_to(const ModelInstance& model, const Point& x0, const Point& target,
                               double tol, double t_max, double dt) {
  if (!(tol > 0.0)) throw std::invalid_argument("converges_to: tol must be > 0");
  if (target.size() != model.dimension())
    throw std::invalid_argument("converges_to: target dimension mismatch");

  const Trajectory traj = integrate(model, x0, t_max, dt);
  ConvergenceResult result;
  if (traj.divergent) {
    result.divergent = true;
    return result;
  }

  const double tail_start = 0.9 * t_max;
  bool tail_ok = true;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    if (traj.times[i] >= tail_start && euclidean_dist(traj.states[i], target) > tol)
      tail_ok = false;
  }
  if (!tail_ok) return result;

  // Earliest sample from which the trajectory never leaves the ball again.
  std::size_t first = traj.times.size();
  for (std::size_t i = traj.times.size(); i-- > 0;) {
    if (euclidean_dist(traj.states[i], target) <= tol)
      first = i;
    else
      break;
  }
  if (first == traj.times.size()) return result;  // tail empty of hits (t_max too small)
  result.converged = true;
  result.first_hit_time = traj.times[first];
  return result;
}

BasinProbeReport uniformity_probe(const ModelFamily& family,
                                  const std::vector<double>& param_grid,
                                  const std::function<Point(double)>& branch, double radius,
                                  int samples, double tol, double t_max, double dt) {
  if (!(radius > 0.0)) throw std::invalid_argument("uniformity_probe: radius must be > 0");
  if (samples < 1) throw std::invalid_argument("uniformity_probe: samples must be >= 1");

  BasinProbeReport report;
  report.param_grid = param_grid;
  report.radius = radius;

  for (double param : param_grid) {
    const ModelInstance model = family.at(param);
    const Point center = branch(param);
    if (center.size() != model.dimension())
      throw std::invalid_argument("uniformity_probe: branch point dimension mismatch");

    std::vector<Point> probes;
    if (model.dimension() == 1) {
      probes = {{center[0] - radius}, {center[0] + radius}};
    } else {
      for (int k = 0; k < samples; ++k) {
        const double theta = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(samples);
        probes.push_back({center[0] + radius * std::cos(theta),
                          center[1] + radius * std::sin(theta)});
      }
    }
    report.sample_count = static_cast<int>(probes.size());

    for (const Point& probe : probes) {
      if (!model.in_domain(probe)) {
        report.failures.push_back({param, probe});
        continue;
      }
      const ConvergenceResult r = converges_to(model, probe, center, tol, t_max, dt);
      if (!r.converged) report.failures.push_back({param, probe});
    }
  }
  return report;
}

}  // namespace pitchfork
