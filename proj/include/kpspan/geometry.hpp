#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kpspan {

/// Thrown for malformed or inconsistent input (bad files, invalid parameters).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Color = int;

struct Point {
  std::vector<double> coords;
  std::size_t index = 0;

  std::size_t dim() const { return coords.size(); }
};

double distance(const Point& a, const Point& b);

/// Points in R^d partitioned into colour classes 1..k.
///
/// Construction validates everything the algorithms rely on: a common
/// dimension d >= 1, finite coordinates, dense non-empty colour classes and
/// pairwise distinct coordinate vectors. Point i always has index i.
class ColoredPointSet {
 public:
  ColoredPointSet() = default;
  ColoredPointSet(std::vector<std::vector<double>> coords, std::vector<Color> colors);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::size_t dim() const { return dim_; }
  int num_colors() const { return k_; }

  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  Color color_of(std::size_t i) const { return colors_[i]; }
  const std::vector<Color>& colors() const { return colors_; }

  double distance(std::size_t i, std::size_t j) const {
    return kpspan::distance(points_[i], points_[j]);
  }

 private:
  std::vector<Point> points_;
  std::vector<Color> colors_;
  std::size_t dim_ = 0;
  int k_ = 0;
};

struct BoundingBox {
  std::vector<double> lo;
  std::vector<double> hi;

  std::size_t dim() const { return lo.size(); }
  std::vector<double> center() const;
  /// Half of the Euclidean length of the box diagonal.
  double half_diagonal() const;
  bool contains(const Point& p) const;
  bool contains(const BoundingBox& other) const;
};

BoundingBox bounding_box(std::span<const Point> points);
/// Box of the points of `set` selected by `ids`.
BoundingBox bounding_box(const ColoredPointSet& set, std::span<const std::size_t> ids);

/// Length of a longest side.
double l_max(const BoundingBox& box);

double center_distance(const BoundingBox& a, const BoundingBox& b);

}  // namespace kpspan
