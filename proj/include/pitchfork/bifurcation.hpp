#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "pitchfork/equilibria.hpp"
#include "pitchfork/model.hpp"
#include "pitchfork/stability.hpp"
#include "pitchfork/types.hpp"

namespace pitchfork {

struct SweepEntry {
  Point location;
  Classification classification;
  std::vector<std::complex<double>> eigenvalues;
  double residual_norm = 0.0;
};

struct SweepRecord {
  double param = 0.0;
  std::vector<SweepEntry> equilibria;  // sorted as in find_equilibria
};

struct SweepRange {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
  std::vector<double> values() const;
};

/// One record per grid value: find_equilibria then classify.
std::vector<SweepRecord> sweep(const ModelFamily& family, const SweepRange& range, const Box& box,
                               const EnumerationOptions& opts = {});

struct BranchNode {
  double param = 0.0;
  Point location;
  Classification classification;
};

struct Branch {
  std::vector<BranchNode> nodes;
  /// Two sweep points competed for this branch within the matching
  /// tolerance at some step.
  bool ambiguous = false;
  double born_at() const { return nodes.front().param; }
};

/// Joins records into branches by nearest-neighbor continuation across
/// consecutive parameter values; unmatched new points start branches.
/// matching_tol <= 0 selects the default 5 * dparam * (1 + branch speed),
/// where the speed is estimated from the branch's previous displacement.
std::vector<Branch> assemble_branches(const std::vector<SweepRecord>& records,
                                      double matching_tol = 0.0);

enum class DetectMode { determinant, max_real_eigenvalue };

/// Location of the followed equilibrium as a function of the parameter.
using BranchRule = std::function<Point(double)>;

BranchRule fixed_branch(Point location);

/// Bisection on det(J) (or the leading eigenvalue real part) evaluated at
/// the branch point, down to a bracket of width tol; returns the midpoint.
/// The bracket endpoints must yield opposite signs.
double detect_bifurcation(const ModelFamily& family, double lo, double hi,
                          const BranchRule& branch, double tol,
                          DetectMode mode = DetectMode::determinant);

enum class PitchforkKind { pitchfork, not_pitchfork, inconclusive };

std::string_view to_string(PitchforkKind kind);

struct PitchforkEvidence {
  int pre_count = 0;
  int pre_sinks = 0;
  int post_sinks = 0;
  /// Unstable separator count: saddles in 2D; in 1D the repelling
  /// equilibrium (a source) plays that role.
  int post_saddles = 0;
  bool saddle_continuous = false;
  /// Log-log slope of flank amplitude against parameter offset; NaN when
  /// the fit ladder could not be assembled.
  double amplitude_exponent = 0.0;
};

struct PitchforkVerdict {
  double bifurcation_param = 0.0;
  PitchforkKind kind = PitchforkKind::inconclusive;
  PitchforkEvidence evidence;
};

/// Checks the defining transition at bifurcation_param: one sink below, two
/// sinks separated by the continued (now unstable) equilibrium above, with a
/// square-root amplitude fit over log-spaced offsets.
PitchforkVerdict classify_pitchfork(const ModelFamily& family, double bifurcation_param,
                                    double window, const Box& box,
                                    const EnumerationOptions& opts = {});

struct IsoclinePair {
  std::vector<Point> x_isocline;  // x = y^2 - a*y, sampled in y
  std::vector<Point> y_isocline;  // y = x^2 - a*x, sampled in x
};

IsoclinePair isocline_sample(double a, double x_lo, double x_hi, double y_lo, double y_hi,
                             int count);

/// True when the two isoclines are tangent at the origin, i.e. the normals
/// (1, a) and (a, 1) are parallel: |a^2 - 1| <= 1e-12.
bool tangency_check(double a);

}  // namespace pitchfork
