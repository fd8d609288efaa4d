#include "pitchfork/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pitchfork {

namespace {

constexpr double kSingularDet = 1e-14;

/// Solves J * delta = -r for n = 1 or 2. Returns false when |det| <= kSingularDet.
bool newton_step(const SquareMatrix& jac, const Point& r, Point& delta) {
  const double det = jac.det();
  if (std::abs(det) <= kSingularDet) return false;
  if (jac.size() == 1) {
    delta = {-r[0] / jac(0, 0)};
    return true;
  }
  delta = {(-r[0] * jac(1, 1) + r[1] * jac(0, 1)) / det,
           (-r[1] * jac(0, 0) + r[0] * jac(1, 0)) / det};
  return true;
}

bool lex_less(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

EquilibriumPoint make_point(const ModelInstance& model, Point location,
                            EquilibriumSource source) {
  EquilibriumPoint p;
  p.residual_norm = max_norm(model.evaluate(location));
  p.location = std::move(location);
  p.source = source;
  return p;
}

}  // namespace

NewtonResult newton_refine(const ModelInstance& model, const Point& seed, double tol,
                           int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("newton_refine: tol must be > 0");
  if (max_iter < 0) throw std::invalid_argument("newton_refine: max_iter must be >= 0");
  if (!model.in_domain(seed)) throw std::invalid_argument("newton_refine: seed outside domain");

  NewtonResult result;
  Point x = seed;
  for (int iter = 0; iter <= max_iter; ++iter) {
    const Point r = model.evaluate(x);
    if (!all_finite(r) || !all_finite(x)) {
      result.status = NewtonResult::Status::left_domain;
      result.iterations = iter;
      return result;
    }
    if (max_norm(r) <= tol) {
      result.status = NewtonResult::Status::converged;
      result.point = make_point(model, x, EquilibriumSource::newton);
      result.iterations = iter;
      return result;
    }
    if (iter == max_iter) break;
    const SquareMatrix jac = model.jacobian(x);
    Point delta;
    if (!newton_step(jac, r, delta)) {
      result.status = NewtonResult::Status::singular_jacobian;
      result.iterations = iter;
      return result;
    }
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += delta[i];
    if (!model.in_domain(x)) {
      result.status = NewtonResult::Status::left_domain;
      result.iterations = iter + 1;
      return result;
    }
  }
  result.status = NewtonResult::Status::max_iterations;
  result.iterations = max_iter;
  return result;
}

namespace {

/// Newton with stall detection, keeping the best iterate seen. Unlike
/// newton_refine it does not stop at the residual tolerance: near a
/// degenerate root the extra iterations contract the whole seed cluster well
/// below the dedup radius. Returns the best point when its residual meets
/// tol, nullopt otherwise.
std::optional<Point> newton_polish(const ModelInstance& model, const Point& seed,
                                   const Box& keep_in, double tol, int max_iter) {
  Point x = seed;
  Point best = seed;
  double best_res = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter <= max_iter; ++iter) {
    if (!keep_in.contains(x) || !model.in_domain(x)) break;
    Point r;
    try {
      r = model.evaluate(x);
    } catch (const std::domain_error&) {
      break;
    }
    if (!all_finite(r)) break;
    const double res = max_norm(r);
    if (res < best_res) {
      best_res = res;
      best = x;
    }
    if (iter == max_iter) break;
    SquareMatrix jac(model.dimension());
    try {
      jac = model.jacobian(x);
    } catch (const std::domain_error&) {
      break;
    }
    Point delta;
    if (!newton_step(jac, r, delta)) break;
    if (max_norm(delta) <= 1e-16 * (1.0 + max_norm(x))) break;  // stalled at roundoff
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += delta[i];
  }
  if (best_res <= tol) return best;
  return std::nullopt;
}

}  // namespace

std::vector<EquilibriumPoint> find_equilibria(const ModelInstance& model, const Box& box,
                                              const EnumerationOptions& opts) {
  if (opts.grid_per_axis < 2)
    throw std::invalid_argument("find_equilibria: grid_per_axis must be >= 2");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("find_equilibria: tol must be > 0");
  if (box.dim() != model.dimension())
    throw std::invalid_argument("find_equilibria: box dimension does not match model");

  const Box fence = box.inflated(opts.inflation);
  const std::size_t dim = box.dim();
  const int g = opts.grid_per_axis;

  std::vector<Point> converged;
  std::vector<std::size_t> grid_index(dim, 0);
  const std::size_t total = [&] {
    std::size_t t = 1;
    for (std::size_t i = 0; i < dim; ++i) t *= static_cast<std::size_t>(g);
    return t;
  }();

  for (std::size_t flat = 0; flat < total; ++flat) {
    Point seed(dim);
    std::size_t rest = flat;
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t k = rest % static_cast<std::size_t>(g);
      rest /= static_cast<std::size_t>(g);
      const double t = static_cast<double>(k) / static_cast<double>(g - 1);
      seed[i] = box.lower()[i] + t * (box.upper()[i] - box.lower()[i]);
    }
    if (!model.in_domain(seed)) continue;
    if (auto polished = newton_polish(model, seed, fence, opts.tol, opts.max_iter)) {
      if (box.contains(*polished)) converged.push_back(std::move(*polished));
    }
  }

  // Deduplicate: smallest residual represents each cluster.
  std::sort(converged.begin(), converged.end(), [&](const Point& a, const Point& b) {
    const double ra = max_norm(model.evaluate(a));
    const double rb = max_norm(model.evaluate(b));
    if (ra != rb) return ra < rb;
    return lex_less(a, b);
  });
  std::vector<EquilibriumPoint> out;
  for (const Point& candidate : converged) {
    bool duplicate = false;
    for (const EquilibriumPoint& kept : out)
      duplicate = duplicate || max_norm_diff(candidate, kept.location) <= opts.dedup_radius;
    if (!duplicate) out.push_back(make_point(model, candidate, EquilibriumSource::newton));
  }
  std::sort(out.begin(), out.end(), [](const EquilibriumPoint& a, const EquilibriumPoint& b) {
    return lex_less(a.location, b.location);
  });
  return out;
}

std::vector<EquilibriumPoint> find_equilibria(const ModelInstance& model, const Box& box,
                                              int grid_per_axis, double tol) {
  EnumerationOptions opts;
  opts.grid_per_axis = grid_per_axis;
  opts.tol = tol;
  return find_equilibria(model, box, opts);
}

std::vector<EquilibriumPoint> closed_form_equilibria(double a) {
  if (!std::isfinite(a)) throw std::invalid_argument("closed_form_equilibria: a must be finite");
  const ModelInstance model = make_model(ModelId::normal2d, {{"a", a}});
  auto at = [&](double x, double y) {
    EquilibriumPoint p;
    p.location = {x, y};
    p.residual_norm = max_norm(model.evaluate(p.location));
    p.source = EquilibriumSource::closed_form;
    return p;
  };

  std::vector<EquilibriumPoint> out;
  const double disc = (a - 1.0) * (a + 3.0);
  if (a == 1.0) {
    // x1 = x2 = x3 = 0: the central root with the flanking pair collapsed
    // onto it, reported once.
    EquilibriumPoint central = at(0.0, 0.0);
    central.degenerate = true;
    out.push_back(std::move(central));
  } else {
    out.push_back(at(0.0, 0.0));
    if (disc > 0.0) {
      const double root = std::sqrt(disc);
      const double plus = 0.5 * (a - 1.0) + 0.5 * root;
      const double minus = 0.5 * (a - 1.0) - 0.5 * root;
      out.push_back(at(plus, minus));
      out.push_back(at(minus, plus));
    }
  }
  out.push_back(at(a + 1.0, a + 1.0));
  return out;
}

}  // namespace pitchfork
