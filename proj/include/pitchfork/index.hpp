#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pitchfork/equilibria.hpp"
#include "pitchfork/model.hpp"
#include "pitchfork/types.hpp"

namespace pitchfork {

struct InwardCheckResult {
  bool pass = false;
  std::vector<Point> violations;
};

/// Samples the box boundary and checks that the field points strictly into
/// the interior everywhere: on a face the inward-normal component must be
/// > 0, and at a corner both face conditions must hold simultaneously. A
/// zero inward component counts as a violation. 2D models only.
InwardCheckResult boundary_inward_check(const ModelInstance& model, const Box& box,
                                        int samples_per_edge);

struct PhIndexResult {
  /// Sum of sign(det J) over the enclosed equilibria; absent when any
  /// enclosed equilibrium has |det J| <= 1e-12 (degenerate).
  std::optional<int> sum;
  bool degenerate = false;
  std::vector<EquilibriumPoint> equilibria;
};

PhIndexResult ph_index_sum(const ModelInstance& model, const Box& box,
                           const EnumerationOptions& opts = {});

struct WindingResult {
  enum class Failure { none, field_too_small, refinement_cap, residual_too_large };
  std::optional<int> degree;
  /// |raw/2pi - degree| for the accepted result.
  double residual = 0.0;
  std::size_t segments = 0;
  Failure failure = Failure::none;
};

/// Brouwer degree of the field over the box: total signed rotation of the
/// field direction along the positively oriented boundary divided by 2*pi.
/// Per-step angle deltas are wrapped into (-pi, pi]; any segment turning more
/// than pi/2 is bisected (cap 2^16 segments), which rules out 2*pi aliasing
/// for continuous fields. Undefined when the sampled field magnitude drops
/// to 1e-9, when the cap is hit, or when the rounded result leaves a
/// residual of 0.05 or more.
WindingResult winding_degree(const ModelInstance& model, const Box& box,
                             int initial_samples_per_edge = 64);

struct IndexReport {
  Box box;
  bool inward_pass = false;
  std::vector<Point> violations;
  std::optional<int> ph_sum;
  bool ph_degenerate = false;
  std::optional<int> winding;
  /// Both defined and equal.
  bool agree = false;
  std::vector<EquilibriumPoint> equilibria;
};

struct VerifyOptions {
  int inward_samples_per_edge = 256;
  int winding_samples_per_edge = 64;
  EnumerationOptions enumeration;
};

/// Runs the inwardness check, the sign(det J) sum, and the winding-number
/// degree on one box and reports all outcomes. Degeneracy is a first-class
/// result, not an error.
IndexReport verify_ph(const ModelInstance& model, const Box& box,
                      const VerifyOptions& opts = {});

}  // namespace pitchfork
