#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pitchfork/types.hpp"

namespace pitchfork {

/// Eigenvalue real parts within this of zero classify as non-hyperbolic.
inline constexpr double kHyperbolicityTol = 1e-9;

struct Spectrum {
  /// Sorted by descending real part, then descending imaginary part.
  /// Complex eigenvalues occur in conjugate pairs.
  std::vector<std::complex<double>> eigenvalues;
  /// Unit eigenvectors paired with `eigenvalues`; present only for 2x2 input
  /// with real distinct eigenvalues.
  std::optional<std::array<Point, 2>> eigenvectors;
};

/// Closed-form spectrum of a 2x2 matrix via the characteristic polynomial
/// lambda^2 - tr*lambda + det.
Spectrum eigen2x2(const SquareMatrix& jac);

/// Dispatches on matrix size (1x1 or 2x2).
Spectrum spectrum_of(const SquareMatrix& jac);

enum class EquilibriumKind { sink, saddle, source, degenerate, nonhyperbolic_complex };

std::string_view to_string(EquilibriumKind kind);

struct Classification {
  EquilibriumKind kind = EquilibriumKind::degenerate;
  /// Number of eigenvalues with real part above the hyperbolicity tolerance.
  int unstable_count = 0;
  /// Sign of det(J), computed directly from the determinant.
  int sign_det = 0;
};

Classification classify(const SquareMatrix& jac, double hyperbolicity_tol = kHyperbolicityTol);

/// Spectrum of the normal2d Jacobian at the flanking point (x2, y2).
/// Requires a > 1 (the flanking pair is real only there). Equals
/// -1 +/- sqrt(1 - (a-1)(a+3)) analytically.
Spectrum flanking_spectrum(double a);

/// The parameter value where the flanking spectrum turns complex, found by
/// bisecting the discriminant over a in [1 + 1e-9, 3] to 1e-9 width.
/// Equals sqrt(5) - 1, about 1.2361.
double complex_transition_threshold();

/// Provenance note for the flanking eigenvalue closed form, explaining why
/// the Jacobian-derived expression is used instead of a circulated variant.
std::string flanking_formula_note();

}  // namespace pitchfork
