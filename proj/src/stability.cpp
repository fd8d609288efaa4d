#include "pitchfork/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pitchfork/equilibria.hpp"
#include "pitchfork/model.hpp"

namespace pitchfork {

namespace {

Point unit_canonical(double vx, double vy) {
  const double norm = std::hypot(vx, vy);
  if (norm == 0.0) return {0.0, 0.0};
  double x = vx / norm, y = vy / norm;
  // Canonical sign: the component of largest magnitude is positive.
  const double lead = std::abs(x) >= std::abs(y) ? x : y;
  if (lead < 0.0) {
    x = -x;
    y = -y;
  }
  return {x, y};
}

Point eigenvector_for(const SquareMatrix& jac, double lambda) {
  // Rows of (J - lambda I) are both orthogonal to the eigenvector; take the
  // better-conditioned of the two null-space candidates.
  const double c1x = jac(0, 1), c1y = lambda - jac(0, 0);
  const double c2x = lambda - jac(1, 1), c2y = jac(1, 0);
  const double m1 = std::max(std::abs(c1x), std::abs(c1y));
  const double m2 = std::max(std::abs(c2x), std::abs(c2y));
  if (m1 == 0.0 && m2 == 0.0) {
    // Diagonal matrix: axis eigenvectors.
    return lambda == jac(0, 0) ? Point{1.0, 0.0} : Point{0.0, 1.0};
  }
  return m1 >= m2 ? unit_canonical(c1x, c1y) : unit_canonical(c2x, c2y);
}

}  // namespace

Spectrum eigen2x2(const SquareMatrix& jac) {
  if (jac.size() != 2) throw std::invalid_argument("eigen2x2: matrix must be 2x2");
  const double tr = jac.trace();
  const double det = jac.det();
  const double disc = tr * tr - 4.0 * det;

  Spectrum s;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    // Larger-magnitude root first to avoid cancellation, companion via det.
    double big = 0.5 * (tr + std::copysign(root, tr));
    double other;
    if (big == 0.0) {
      big = 0.5 * (tr + root);
      other = 0.5 * (tr - root);
    } else {
      other = det / big;
    }
    double lo = std::min(big, other), hi = std::max(big, other);
    s.eigenvalues = {{hi, 0.0}, {lo, 0.0}};
    if (hi != lo) {
      s.eigenvectors = std::array<Point, 2>{eigenvector_for(jac, hi), eigenvector_for(jac, lo)};
    }
  } else {
    const double re = 0.5 * tr;
    const double im = 0.5 * std::sqrt(-disc);
    s.eigenvalues = {{re, im}, {re, -im}};
  }
  return s;
}

Spectrum spectrum_of(const SquareMatrix& jac) {
  if (jac.size() == 1) {
    Spectrum s;
    s.eigenvalues = {{jac(0, 0), 0.0}};
    return s;
  }
  if (jac.size() == 2) return eigen2x2(jac);
  throw std::invalid_argument("spectrum_of: only 1x1 and 2x2 matrices supported");
}

std::string_view to_string(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::sink: return "sink";
    case EquilibriumKind::saddle: return "saddle";
    case EquilibriumKind::source: return "source";
    case EquilibriumKind::degenerate: return "degenerate";
    case EquilibriumKind::nonhyperbolic_complex: return "nonhyperbolic-complex";
  }
  return "unknown";
}

Classification classify(const SquareMatrix& jac, double hyperbolicity_tol) {
  if (!jac.all_finite()) throw std::invalid_argument("classify: matrix must be finite");
  const Spectrum s = spectrum_of(jac);
  const int n = static_cast<int>(s.eigenvalues.size());

  Classification c;
  const double det = jac.det();
  c.sign_det = det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);

  bool zero_real = false;
  bool zero_is_complex = false;
  for (const auto& lambda : s.eigenvalues) {
    if (lambda.real() > hyperbolicity_tol) ++c.unstable_count;
    if (std::abs(lambda.real()) <= hyperbolicity_tol) {
      zero_real = true;
      zero_is_complex = zero_is_complex || std::abs(lambda.imag()) > hyperbolicity_tol;
    }
  }

  if (zero_real) {
    c.kind = zero_is_complex ? EquilibriumKind::nonhyperbolic_complex : EquilibriumKind::degenerate;
  } else if (c.unstable_count == 0) {
    c.kind = EquilibriumKind::sink;
  } else if (c.unstable_count == n) {
    c.kind = EquilibriumKind::source;
  } else {
    c.kind = EquilibriumKind::saddle;
  }
  return c;
}

Spectrum flanking_spectrum(double a) {
  if (!(a > 1.0)) throw std::invalid_argument("flanking_spectrum: requires a > 1");
  const double root = std::sqrt((a - 1.0) * (a + 3.0));
  const Point flank = {0.5 * (a - 1.0) + 0.5 * root, 0.5 * (a - 1.0) - 0.5 * root};
  const ModelInstance model = make_model(ModelId::normal2d, {{"a", a}});
  return eigen2x2(model.jacobian(flank));
}

double complex_transition_threshold() {
  // Discriminant of the flanking spectrum, from the Jacobian rather than any
  // printed closed form.
  auto discriminant = [](double a) {
    const double root = std::sqrt((a - 1.0) * (a + 3.0));
    const Point flank = {0.5 * (a - 1.0) + 0.5 * root, 0.5 * (a - 1.0) - 0.5 * root};
    const ModelInstance model = make_model(ModelId::normal2d, {{"a", a}});
    const SquareMatrix jac = model.jacobian(flank);
    const double tr = jac.trace();
    return tr * tr - 4.0 * jac.det();
  };
  double lo = 1.0 + 1e-9, hi = 3.0;
  if (!(discriminant(lo) > 0.0) || !(discriminant(hi) < 0.0))
    throw std::logic_error("complex_transition_threshold: bracket does not straddle the root");
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (discriminant(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::string flanking_formula_note() {
  return "flanking eigenvalues are computed from the Jacobian, giving "
         "-1 +/- sqrt(1 - (a-1)(a+3)); a circulated closed form with +3 under the "
         "radical would place the complex transition at sqrt(7)-1 ~ 1.6458, "
         "inconsistent with the observed threshold sqrt(5)-1 ~ 1.2361, and is "
         "treated as a typo.";
}

}  // namespace pitchfork
