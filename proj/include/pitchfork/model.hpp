#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pitchfork/types.hpp"

namespace pitchfork {

/// Built-in vector-field families.
///
///   pitchfork1d    dx/dt = mu*x - x^3
///   normal2d       dx/dt = y^2 - a*y - x,  dy/dt = x^2 - a*x - y
///   normal2d-asym  dx/dt = y^2 - a*y - x,  dy/dt = x^2 - b*x - y
///   toggle-general dx/dt = alpha1/(1 + y^m) - x,  dy/dt = alpha2/(1 + x^n) - y
///   toggle-sym     toggle-general with alpha1 = alpha2 = 2, n = m
///   toggle-taylor  dx/dt = m/2*y^2 - 3m/2*y + m + 1 - x  (and symmetrically in y)
enum class ModelId {
  pitchfork1d,
  normal2d,
  normal2d_asym,
  toggle_general,
  toggle_sym,
  toggle_taylor,
};

using ParameterAssignment = std::map<std::string, double>;

struct ModelInfo {
  ModelId id;
  std::string_view name;
  std::size_t dimension;
  std::vector<std::string_view> params;
  /// Parameter reported in the `param` column of tabular output and used as
  /// the default sweep axis.
  std::string_view primary_param;
};

const std::vector<ModelInfo>& model_registry();
const ModelInfo& model_info(ModelId id);
ModelId model_id_from_name(std::string_view name);

/// A registry field bound to a concrete parameter assignment. Immutable and
/// safe to share across threads; evaluation and differentiation are pure.
class ModelInstance {
 public:
  ModelId id() const { return id_; }
  const std::string& name() const { return name_; }
  std::size_t dimension() const { return dimension_; }
  const ParameterAssignment& params() const { return params_; }
  double param(const std::string& key) const;

  /// Velocity of the field at x. Throws std::invalid_argument on dimension
  /// mismatch or non-finite input, std::domain_error outside the model
  /// domain (toggle models require every coordinate > -1, and coordinates
  /// >= 0 when the exponent is not an integer).
  Point evaluate(const Point& x) const;

  /// Exact partial derivatives of the registry formula at x.
  SquareMatrix jacobian(const Point& x) const;

  /// True when evaluate(x) would not raise a domain error.
  bool in_domain(const Point& x) const;

 private:
  friend ModelInstance make_model(ModelId, const ParameterAssignment&);
  ModelInstance() = default;

  ModelId id_ = ModelId::normal2d;
  std::string name_;
  std::size_t dimension_ = 0;
  ParameterAssignment params_;
};

/// Builds a model instance, validating the parameter assignment (complete,
/// finite, within the per-model constraints). Unknown models and unknown or
/// invalid parameters raise std::invalid_argument naming the offender.
ModelInstance make_model(ModelId id, const ParameterAssignment& params);
ModelInstance make_model(std::string_view name, const ParameterAssignment& params);

/// Analytic Jacobian (same as model.jacobian; free-function spelling).
SquareMatrix jacobian_analytic(const ModelInstance& model, const Point& x);

/// Central-difference Jacobian. The step on axis i is step * max(1, |x[i]|).
/// Test oracle for the analytic Jacobians; raises std::domain_error when the
/// stencil leaves the model domain.
SquareMatrix jacobian_fd(const ModelInstance& model, const Point& x, double step = 1e-6);

/// A model with one designated parameter left free, e.g. normal2d as a
/// varies. A custom binder may set several entries at once (linked
/// parameters).
class ModelFamily {
 public:
  using Binder = std::function<void(double, ParameterAssignment&)>;

  ModelFamily(std::string model_name, ParameterAssignment base, std::string param_name);
  ModelFamily(std::string model_name, ParameterAssignment base, std::string label, Binder binder);

  ModelInstance at(double param_value) const;

  const std::string& model_name() const { return model_name_; }
  const std::string& param_name() const { return param_name_; }

 private:
  std::string model_name_;
  std::string param_name_;
  ParameterAssignment base_;
  Binder binder_;
};

}  // namespace pitchfork
