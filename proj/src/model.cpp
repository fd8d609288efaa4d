#include "pitchfork/model.hpp"

#include <cmath>
#include <stdexcept>

namespace pitchfork {

namespace {

bool is_integral(double v) { return std::isfinite(v) && std::nearbyint(v) == v; }

[[noreturn]] void bad_param(const std::string& model, const std::string& message) {
  throw std::invalid_argument(model + ": " + message);
}

void validate_params(const ModelInfo& info, const ParameterAssignment& params) {
  const std::string model(info.name);
  for (std::string_view required : info.params) {
    auto it = params.find(std::string(required));
    if (it == params.end()) bad_param(model, "missing parameter '" + std::string(required) + "'");
    if (!std::isfinite(it->second))
      bad_param(model, "parameter '" + std::string(required) + "' must be finite");
  }
  for (const auto& [key, value] : params) {
    bool known = false;
    for (std::string_view required : info.params) known = known || key == required;
    if (!known) bad_param(model, "unknown parameter '" + key + "'");
    (void)value;
  }
  // Per-model constraints.
  auto require_nonneg = [&](const char* key) {
    if (params.at(key) < 0.0) bad_param(model, std::string(key) + " must be >= 0");
  };
  auto require_positive = [&](const char* key) {
    if (!(params.at(key) > 0.0)) bad_param(model, std::string(key) + " must be > 0");
  };
  switch (info.id) {
    case ModelId::toggle_general:
      require_positive("alpha1");
      require_positive("alpha2");
      require_nonneg("m");
      require_nonneg("n");
      break;
    case ModelId::toggle_sym:
    case ModelId::toggle_taylor:
      require_nonneg("m");
      break;
    default:
      break;
  }
}

}  // namespace

const std::vector<ModelInfo>& model_registry() {
  static const std::vector<ModelInfo> registry = {
      {ModelId::pitchfork1d, "pitchfork1d", 1, {"mu"}, "mu"},
      {ModelId::normal2d, "normal2d", 2, {"a"}, "a"},
      {ModelId::normal2d_asym, "normal2d-asym", 2, {"a", "b"}, "a"},
      {ModelId::toggle_general, "toggle-general", 2, {"alpha1", "alpha2", "m", "n"}, "m"},
      {ModelId::toggle_sym, "toggle-sym", 2, {"m"}, "m"},
      {ModelId::toggle_taylor, "toggle-taylor", 2, {"m"}, "m"},
  };
  return registry;
}

const ModelInfo& model_info(ModelId id) {
  for (const ModelInfo& info : model_registry()) {
    if (info.id == id) return info;
  }
  throw std::logic_error("model_info: unregistered id");
}

ModelId model_id_from_name(std::string_view name) {
  for (const ModelInfo& info : model_registry()) {
    if (info.name == name) return info.id;
  }
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

ModelInstance make_model(ModelId id, const ParameterAssignment& params) {
  const ModelInfo& info = model_info(id);
  validate_params(info, params);
  ModelInstance m;
  m.id_ = id;
  m.name_ = std::string(info.name);
  m.dimension_ = info.dimension;
  m.params_ = params;
  return m;
}

ModelInstance make_model(std::string_view name, const ParameterAssignment& params) {
  return make_model(model_id_from_name(name), params);
}

double ModelInstance::param(const std::string& key) const {
  auto it = params_.find(key);
  if (it == params_.end())
    throw std::invalid_argument(name_ + ": no parameter '" + key + "'");
  return it->second;
}

namespace {

bool is_toggle_rational(ModelId id) {
  return id == ModelId::toggle_general || id == ModelId::toggle_sym;
}

void check_point(const ModelInstance& m, const Point& x) {
  if (x.size() != m.dimension())
    throw std::invalid_argument(m.name() + ": point dimension " + std::to_string(x.size()) +
                                " does not match model dimension " +
                                std::to_string(m.dimension()));
  if (!all_finite(x)) throw std::invalid_argument(m.name() + ": point must be finite");
}

  // The repression term 1/(1 + s^e) has a pole at s = -1 for odd integer e;
  // the evaluation domain is every coordinate > -1. Negative bases with a
  // non-integer exponent are undefined outright. e0 is the exponent applied
  // to x[0], e1 the one applied to x[1].
void check_toggle_domain(const ModelInstance& m, const Point& x, double e0, double e1) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = (i == 0) ? e0 : e1;
    if (!(x[i] > -1.0))
      throw std::domain_error(m.name() + ": coordinate " + std::to_string(i) +
                              " must be > -1");
    if (x[i] < 0.0 && !is_integral(e))
      throw std::domain_error(m.name() + ": negative coordinate with non-integer exponent");
  }
}

/// alpha / (1 + s^e) and its derivative in s. `want_deriv` requests the
/// derivative; the value path never raises beyond the domain checks above.
double hill_value(double alpha, double e, double s) {
  const double t = std::pow(s, e);  // e == 0 gives 1, including at s == 0
  if (!std::isfinite(t)) return t > 0 ? 0.0 : alpha;  // saturation for huge s^e
  return alpha / (1.0 + t);
}

double hill_deriv(const std::string& model, double alpha, double e, double s) {
  if (e == 0.0) return 0.0;
  const double t = std::pow(s, e);
  if (!std::isfinite(t)) return 0.0;  // saturated tail, derivative vanishes
  const double tp = std::pow(s, e - 1.0);
  if (!std::isfinite(tp))
    throw std::domain_error(model + ": jacobian unbounded at coordinate " + std::to_string(s));
  const double denom = 1.0 + t;
  return -alpha * e * tp / (denom * denom);
}

}  // namespace

bool ModelInstance::in_domain(const Point& x) const {
  if (x.size() != dimension_ || !all_finite(x)) return false;
  if (!is_toggle_rational(id_)) return true;
  const double m = params_.at("m");
  const double n = (id_ == ModelId::toggle_general) ? params_.at("n") : m;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = (i == 0) ? n : m;  // x[0] is raised to n, x[1] to m
    if (!(x[i] > -1.0)) return false;
    if (x[i] < 0.0 && !is_integral(e)) return false;
  }
  return true;
}

Point ModelInstance::evaluate(const Point& x) const {
  check_point(*this, x);
  switch (id_) {
    case ModelId::pitchfork1d: {
      const double mu = params_.at("mu");
      return {mu * x[0] - x[0] * x[0] * x[0]};
    }
    case ModelId::normal2d: {
      const double a = params_.at("a");
      return {x[1] * x[1] - a * x[1] - x[0], x[0] * x[0] - a * x[0] - x[1]};
    }
    case ModelId::normal2d_asym: {
      const double a = params_.at("a");
      const double b = params_.at("b");
      return {x[1] * x[1] - a * x[1] - x[0], x[0] * x[0] - b * x[0] - x[1]};
    }
    case ModelId::toggle_general: {
      const double a1 = params_.at("alpha1");
      const double a2 = params_.at("alpha2");
      const double m = params_.at("m");
      const double n = params_.at("n");
      check_toggle_domain(*this, x, n, m);
      return {hill_value(a1, m, x[1]) - x[0], hill_value(a2, n, x[0]) - x[1]};
    }
    case ModelId::toggle_sym: {
      const double m = params_.at("m");
      check_toggle_domain(*this, x, m, m);
      return {hill_value(2.0, m, x[1]) - x[0], hill_value(2.0, m, x[0]) - x[1]};
    }
    case ModelId::toggle_taylor: {
      const double m = params_.at("m");
      return {0.5 * m * x[1] * x[1] - 1.5 * m * x[1] + m + 1.0 - x[0],
              0.5 * m * x[0] * x[0] - 1.5 * m * x[0] + m + 1.0 - x[1]};
    }
  }
  throw std::logic_error("evaluate: unhandled model");
}

SquareMatrix ModelInstance::jacobian(const Point& x) const {
  check_point(*this, x);
  switch (id_) {
    case ModelId::pitchfork1d: {
      const double mu = params_.at("mu");
      return SquareMatrix(mu - 3.0 * x[0] * x[0]);
    }
    case ModelId::normal2d: {
      const double a = params_.at("a");
      return SquareMatrix(-1.0, 2.0 * x[1] - a, 2.0 * x[0] - a, -1.0);
    }
    case ModelId::normal2d_asym: {
      const double a = params_.at("a");
      const double b = params_.at("b");
      return SquareMatrix(-1.0, 2.0 * x[1] - a, 2.0 * x[0] - b, -1.0);
    }
    case ModelId::toggle_general: {
      const double a1 = params_.at("alpha1");
      const double a2 = params_.at("alpha2");
      const double m = params_.at("m");
      const double n = params_.at("n");
      check_toggle_domain(*this, x, n, m);
      return SquareMatrix(-1.0, hill_deriv(name_, a1, m, x[1]),
                          hill_deriv(name_, a2, n, x[0]), -1.0);
    }
    case ModelId::toggle_sym: {
      const double m = params_.at("m");
      check_toggle_domain(*this, x, m, m);
      return SquareMatrix(-1.0, hill_deriv(name_, 2.0, m, x[1]),
                          hill_deriv(name_, 2.0, m, x[0]), -1.0);
    }
    case ModelId::toggle_taylor: {
      const double m = params_.at("m");
      return SquareMatrix(-1.0, m * x[1] - 1.5 * m, m * x[0] - 1.5 * m, -1.0);
    }
  }
  throw std::logic_error("jacobian: unhandled model");
}

SquareMatrix jacobian_analytic(const ModelInstance& model, const Point& x) {
  return model.jacobian(x);
}

SquareMatrix jacobian_fd(const ModelInstance& model, const Point& x, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("jacobian_fd: step must be > 0");
  const std::size_t n = model.dimension();
  if (x.size() != n) throw std::invalid_argument("jacobian_fd: dimension mismatch");
  SquareMatrix jac(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double h = step * std::max(1.0, std::abs(x[j]));
    Point fwd = x, bwd = x;
    fwd[j] += h;
    bwd[j] -= h;
    const Point ff = model.evaluate(fwd);  // domain errors propagate
    const Point fb = model.evaluate(bwd);
    for (std::size_t i = 0; i < n; ++i) jac(i, j) = (ff[i] - fb[i]) / (2.0 * h);
  }
  return jac;
}

ModelFamily::ModelFamily(std::string model_name, ParameterAssignment base, std::string param_name)
    : model_name_(std::move(model_name)),
      param_name_(std::move(param_name)),
      base_(std::move(base)) {
  const ModelInfo& info = model_info(model_id_from_name(model_name_));
  bool known = false;
  for (std::string_view p : info.params) known = known || p == param_name_;
  if (!known)
    throw std::invalid_argument(model_name_ + ": no parameter '" + param_name_ + "' to sweep");
}

ModelFamily::ModelFamily(std::string model_name, ParameterAssignment base, std::string label,
                         Binder binder)
    : model_name_(std::move(model_name)),
      param_name_(std::move(label)),
      base_(std::move(base)),
      binder_(std::move(binder)) {
  if (!binder_) throw std::invalid_argument("model family: binder must be callable");
}

ModelInstance ModelFamily::at(double param_value) const {
  ParameterAssignment params = base_;
  if (binder_) {
    binder_(param_value, params);
  } else {
    params[param_name_] = param_value;
  }
  return make_model(model_name_, params);
}

}  // namespace pitchfork
