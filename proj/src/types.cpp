#include "pitchfork/types.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pitchfork {

bool all_finite(const Point& p) {
  for (double c : p) {
    if (!std::isfinite(c)) return false;
  }
  return true;
}

double max_norm(const Point& p) {
  double m = 0.0;
  for (double c : p) m = std::max(m, std::abs(c));
  return m;
}

double max_norm_diff(const Point& a, const Point& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double euclidean_norm(const Point& p) {
  double s = 0.0;
  for (double c : p) s += c * c;
  return std::sqrt(s);
}

double euclidean_dist(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Box::Box(Point lower, Point upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty() || lower_.size() != upper_.size())
    throw std::invalid_argument("box: lower and upper must have the same nonzero dimension");
  if (!all_finite(lower_) || !all_finite(upper_))
    throw std::invalid_argument("box: bounds must be finite");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!(lower_[i] < upper_[i]))
      throw std::invalid_argument("box: lower[" + std::to_string(i) + "] must be < upper[" +
                                  std::to_string(i) + "]");
  }
}

bool Box::contains(const Point& p) const {
  if (p.size() != lower_.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < lower_[i] || p[i] > upper_[i]) return false;
  }
  return true;
}

Point Box::center() const {
  Point c(lower_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.5 * (lower_[i] + upper_[i]);
  return c;
}

Box Box::inflated(double factor) const {
  Point lo(lower_.size()), hi(lower_.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const double c = 0.5 * (lower_[i] + upper_[i]);
    const double h = 0.5 * (upper_[i] - lower_[i]) * factor;
    lo[i] = c - h;
    hi[i] = c + h;
  }
  return Box(std::move(lo), std::move(hi));
}

std::string Box::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (i) os << " x ";
    os << "[" << lower_[i] << ", " << upper_[i] << "]";
  }
  os << "]";
  return os.str();
}

double SquareMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SquareMatrix::det() const {
  if (n_ == 1) return data_[0];
  if (n_ == 2) return data_[0] * data_[3] - data_[1] * data_[2];
  throw std::logic_error("det: only 1x1 and 2x2 supported");
}

bool SquareMatrix::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace pitchfork
