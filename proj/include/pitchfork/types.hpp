#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pitchfork {

/// State or velocity vector. Length is the model dimension (1 or 2 for the
/// built-in registry, but nothing here assumes that).
using Point = std::vector<double>;

bool all_finite(const Point& p);
double max_norm(const Point& p);
double max_norm_diff(const Point& a, const Point& b);
double euclidean_norm(const Point& p);
double euclidean_dist(const Point& a, const Point& b);

/// Axis-aligned rectangular domain used for root searches and index
/// computations. Bounds are strict: lower[i] < upper[i] on every axis.
class Box {
 public:
  Box(Point lower, Point upper);

  std::size_t dim() const { return lower_.size(); }
  const Point& lower() const { return lower_; }
  const Point& upper() const { return upper_; }

  /// Closed-box containment.
  bool contains(const Point& p) const;

  Point center() const;

  /// Same center, half-widths scaled by `factor`.
  Box inflated(double factor) const;

  std::string to_string() const;

 private:
  Point lower_;
  Point upper_;
};

/// Small dense square matrix, row-major. Sized for the 1x1 and 2x2 Jacobians
/// this library works with.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  SquareMatrix(double j00, double j01, double j10, double j11)
      : n_(2), data_{j00, j01, j10, j11} {}
  explicit SquareMatrix(double j00) : n_(1), data_{j00} {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  double trace() const;
  double det() const;
  bool all_finite() const;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

}  // namespace pitchfork
