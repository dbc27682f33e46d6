#include "kpspan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kpspan {

double distance(const Point& a, const Point& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const double diff = a.coords[i] - b.coords[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

ColoredPointSet::ColoredPointSet(std::vector<std::vector<double>> coords,
                                 std::vector<Color> colors)
    : colors_(std::move(colors)) {
  if (coords.empty()) throw InputError("empty point set");
  if (coords.size() != colors_.size())
    throw InputError("point and colour counts differ");

  dim_ = coords.front().size();
  if (dim_ == 0) throw InputError("points must have dimension >= 1");

  points_.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].size() != dim_)
      throw InputError("point " + std::to_string(i) + " has dimension " +
                       std::to_string(coords[i].size()) + ", expected " +
                       std::to_string(dim_));
    for (double x : coords[i])
      if (!std::isfinite(x))
        throw InputError("point " + std::to_string(i) + " has a non-finite coordinate");
    points_.push_back(Point{std::move(coords[i]), i});
  }

  k_ = *std::max_element(colors_.begin(), colors_.end());
  if (*std::min_element(colors_.begin(), colors_.end()) < 1)
    throw InputError("colour ids must be in 1..k");
  std::vector<char> seen(static_cast<std::size_t>(k_) + 1, 0);
  for (Color c : colors_) seen[static_cast<std::size_t>(c)] = 1;
  for (int c = 1; c <= k_; ++c)
    if (!seen[static_cast<std::size_t>(c)])
      throw InputError("colour class " + std::to_string(c) + " is empty");

  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points_[a].coords < points_[b].coords;
  });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (points_[order[i - 1]].coords == points_[order[i]].coords)
      throw InputError("duplicate point: " + std::to_string(order[i - 1]) + " and " +
                       std::to_string(order[i]));
}

std::vector<double> BoundingBox::center() const {
  std::vector<double> c(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) c[i] = 0.5 * (lo[i] + hi[i]);
  return c;
}

double BoundingBox::half_diagonal() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const double side = hi[i] - lo[i];
    sum += side * side;
  }
  return 0.5 * std::sqrt(sum);
}

bool BoundingBox::contains(const Point& p) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (p.coords[i] < lo[i] || p.coords[i] > hi[i]) return false;
  return true;
}

bool BoundingBox::contains(const BoundingBox& other) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (other.lo[i] < lo[i] || other.hi[i] > hi[i]) return false;
  return true;
}

BoundingBox bounding_box(std::span<const Point> points) {
  if (points.empty()) throw InputError("empty point set");
  BoundingBox box{points.front().coords, points.front().coords};
  for (const Point& p : points.subspan(1)) {
    if (p.dim() != box.dim()) throw InputError("points differ in dimension");
    for (std::size_t i = 0; i < p.dim(); ++i) {
      box.lo[i] = std::min(box.lo[i], p.coords[i]);
      box.hi[i] = std::max(box.hi[i], p.coords[i]);
    }
  }
  return box;
}

BoundingBox bounding_box(const ColoredPointSet& set, std::span<const std::size_t> ids) {
  if (ids.empty()) throw InputError("empty point set");
  const auto& first = set[ids.front()].coords;
  BoundingBox box{first, first};
  for (std::size_t id : ids.subspan(1)) {
    const auto& c = set[id].coords;
    for (std::size_t i = 0; i < c.size(); ++i) {
      box.lo[i] = std::min(box.lo[i], c[i]);
      box.hi[i] = std::max(box.hi[i], c[i]);
    }
  }
  return box;
}

double l_max(const BoundingBox& box) {
  double best = 0.0;
  for (std::size_t i = 0; i < box.dim(); ++i) best = std::max(best, box.hi[i] - box.lo[i]);
  return best;
}

double center_distance(const BoundingBox& a, const BoundingBox& b) {
  if (a.dim() != b.dim()) throw InputError("bounding boxes differ in dimension");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double diff = 0.5 * (a.lo[i] + a.hi[i]) - 0.5 * (b.lo[i] + b.hi[i]);
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

}  // namespace kpspan
